// Copyright 2026 The Fockrail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockrail/dsl.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <tuple>

namespace fockrail {

std::string_view error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::kSyntax:
      return "SYNTAX";
    case ErrorClass::kUnknownDirective:
      return "UNKNOWN_DIRECTIVE";
    case ErrorClass::kMissingLayout:
      return "MISSING_LAYOUT";
    case ErrorClass::kDuplicateDirective:
      return "DUPLICATE_DIRECTIVE";
    case ErrorClass::kIndexRange:
      return "INDEX_RANGE";
    case ErrorClass::kInvalidValue:
      return "INVALID_VALUE";
    case ErrorClass::kScheduleIncomplete:
      return "SCHEDULE_INCOMPLETE";
    case ErrorClass::kFeedforwardCausality:
      return "FEEDFORWARD_CAUSALITY";
  }
  return "UNKNOWN";
}

ParseError::ParseError(ErrorClass cls, int line, int column, const std::string& message)
    : std::runtime_error(std::string(error_class_name(cls)) + " at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      class_(cls),
      line_(line),
      column_(column),
      detail_(message) {}

RailLayout CircuitProgram::layout() const {
  RailLayout l(loops, timebins);
  for (const auto& [key, config] : bs) l.set(key.first, key.second, config);
  return l;
}

bool CircuitProgram::has_postselection() const {
  for (const Measurement& m : measurements) {
    if (m.postselect) return true;
  }
  return false;
}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

struct Field {
  std::string value;
  int column;
};

class Fields {
 public:
  Fields(const Line& line, std::size_t first, std::size_t last, const std::set<std::string>& required,
         const std::set<std::string>& optional)
      : line_(line.number), anchor_(line.tokens[first == 0 ? 0 : first - 1].column) {
    for (std::size_t k = first; k < last; ++k) {
      const Token& tok = line.tokens[k];
      const std::size_t eq = tok.text.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.text.size()) {
        throw ParseError(ErrorClass::kSyntax, line_, tok.column, "expected key=value, got '" + tok.text + "'");
      }
      std::string key = tok.text.substr(0, eq);
      if (!required.count(key) && !optional.count(key)) {
        throw ParseError(ErrorClass::kSyntax, line_, tok.column, "unexpected key '" + key + "'");
      }
      const int value_column = tok.column + static_cast<int>(eq) + 1;
      if (!fields_.emplace(key, Field{tok.text.substr(eq + 1), value_column}).second) {
        throw ParseError(ErrorClass::kSyntax, line_, tok.column, "key '" + key + "' given twice");
      }
    }
    for (const std::string& key : required) {
      if (!fields_.count(key)) throw ParseError(ErrorClass::kSyntax, line_, anchor_, "missing key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return fields_.count(key) != 0; }
  const Field& get(const std::string& key) const { return fields_.at(key); }
  int line() const { return line_; }

  int integer(const std::string& key) const {
    const Field& f = get(key);
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(f.value.c_str(), &end, 10);
    if (*end != '\0' || f.value.empty()) {
      throw ParseError(ErrorClass::kSyntax, line_, f.column, "'" + f.value + "' is not an integer");
    }
    if (errno == ERANGE || v < -1000000000L || v > 1000000000L) {
      throw ParseError(ErrorClass::kInvalidValue, line_, f.column, "integer '" + f.value + "' out of bounds");
    }
    return static_cast<int>(v);
  }

  int count(const std::string& key) const {
    const int v = integer(key);
    if (v < 0) throw ParseError(ErrorClass::kInvalidValue, line_, get(key).column, key + " must be nonnegative");
    return v;
  }

  double real(const std::string& key) const { return to_double(get(key).value, get(key).column); }

  Complex complex(const std::string& key) const {
    const Field& f = get(key);
    const std::size_t comma = f.value.find(',');
    if (comma == std::string::npos) return {to_double(f.value, f.column), 0.0};
    return {to_double(f.value.substr(0, comma), f.column),
            to_double(f.value.substr(comma + 1), f.column + static_cast<int>(comma) + 1)};
  }

  BeamSplitterConfig config() const {
    BeamSplitterConfig c;
    c.theta = real("theta");
    if (has("gamma")) c.gamma = real("gamma");
    if (has("rho")) c.rho = real("rho");
    if (has("tau")) c.tau = real("tau");
    return c;
  }

 private:
  double to_double(const std::string& s, int column) const {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw ParseError(ErrorClass::kSyntax, line_, column, "'" + s + "' is not a number");
    if (!std::isfinite(v)) throw ParseError(ErrorClass::kInvalidValue, line_, column, "'" + s + "' is not finite");
    return v;
  }

  int line_;
  int anchor_;
  std::map<std::string, Field> fields_;
};

const std::set<std::string> kPhases{"gamma", "rho", "tau"};

class Checker {
 public:
  Checker(int loops, int timebins) : loops_(loops), timebins_(timebins) {}

  int timebin(const Fields& f, const std::string& key = "t") const {
    const int t = f.integer(key);
    if (t < 0 || t >= timebins_) {
      throw ParseError(ErrorClass::kIndexRange, f.line(), f.get(key).column,
                       "time-bin " + std::to_string(t) + " outside [0, " + std::to_string(timebins_) + ")");
    }
    return t;
  }

  int loop(const Fields& f) const {
    const int k = f.integer("loop");
    if (k < 0 || k >= loops_) {
      throw ParseError(ErrorClass::kIndexRange, f.line(), f.get("loop").column,
                       "loop " + std::to_string(k) + " outside [0, " + std::to_string(loops_) + ")");
    }
    return k;
  }

 private:
  int loops_;
  int timebins_;
};

[[noreturn]] void duplicate(const Line& line, const std::string& what) {
  throw ParseError(ErrorClass::kDuplicateDirective, line.number, line.tokens[0].column, "duplicate " + what);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  if (z.imag() != 0.0 || std::signbit(z.imag())) s += "," + format_double(z.imag());
  return s;
}

std::string format_config(const BeamSplitterConfig& c) {
  return "theta=" + format_double(c.theta) + " gamma=" + format_double(c.gamma) + " rho=" + format_double(c.rho) +
         " tau=" + format_double(c.tau);
}

}  // namespace

CircuitProgram parse_program(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  static const std::set<std::string> kKnown{"rail", "bs", "prepare", "measure", "postselect", "feedforward", "encode"};

  CircuitProgram p;
  const Line* rail = nullptr;
  for (const Line& line : lines) {
    const Token& head = line.tokens[0];
    if (!kKnown.count(head.text)) {
      throw ParseError(ErrorClass::kUnknownDirective, line.number, head.column, "unknown directive '" + head.text + "'");
    }
    if (head.text != "rail") continue;
    if (rail) duplicate(line, "rail directive");
    rail = &line;
    const Fields f(line, 1, line.tokens.size(), {"loops", "timebins"}, {});
    p.loops = f.integer("loops");
    p.timebins = f.integer("timebins");
    if (p.loops < 1) throw ParseError(ErrorClass::kInvalidValue, line.number, f.get("loops").column, "loops must be at least 1");
    if (p.timebins < 1) {
      throw ParseError(ErrorClass::kInvalidValue, line.number, f.get("timebins").column, "timebins must be at least 1");
    }
  }
  if (!rail) throw ParseError(ErrorClass::kMissingLayout, lines.empty() ? 1 : lines[0].number, 1, "no rail directive");

  const Checker check(p.loops, p.timebins);
  std::vector<std::optional<TimebinPrep>> preps(static_cast<std::size_t>(p.timebins));
  std::vector<std::optional<Measurement>> meas(static_cast<std::size_t>(p.timebins));
  std::set<std::tuple<int, int, int, int>> rules;

  for (const Line& line : lines) {
    const std::string& head = line.tokens[0].text;
    const std::size_t size = line.tokens.size();
    if (head == "rail") continue;
    if (head == "bs") {
      const Fields f(line, 1, size, {"t", "loop", "theta"}, kPhases);
      const int t = check.timebin(f);
      const int k = check.loop(f);
      if (!p.bs.emplace(std::make_pair(t, k), f.config()).second) duplicate(line, "bs for t=" + std::to_string(t) + " loop=" + std::to_string(k));
    } else if (head == "prepare") {
      const Fields f(line, 1, size, {"t"}, {"n", "coherent"});
      const int t = check.timebin(f);
      if (f.has("n") == f.has("coherent")) {
        throw ParseError(ErrorClass::kSyntax, line.number, line.tokens[0].column, "prepare needs exactly one of n= or coherent=");
      }
      TimebinPrep prep;
      if (f.has("n")) {
        prep.photons = f.count("n");
      } else {
        prep.coherent = f.complex("coherent");
      }
      auto& slot = preps[static_cast<std::size_t>(t)];
      if (slot) duplicate(line, "prepare for t=" + std::to_string(t));
      slot = prep;
    } else if (head == "measure" || head == "postselect") {
      const bool post = head == "postselect";
      const Fields f(line, 1, size, post ? std::set<std::string>{"t", "n"} : std::set<std::string>{"t"}, {});
      const int t = check.timebin(f);
      Measurement m;
      if (post) m.postselect = f.count("n");
      auto& slot = meas[static_cast<std::size_t>(t)];
      if (slot) duplicate(line, "measurement for t=" + std::to_string(t));
      slot = m;
    } else if (head == "feedforward") {
      std::size_t set = 0;
      for (std::size_t k = 1; k < size; ++k) {
        if (line.tokens[k].text == "set") set = k;
      }
      if (size < 2 || line.tokens[1].text != "when" || set == 0) {
        throw ParseError(ErrorClass::kSyntax, line.number, line.tokens[0].column, "expected 'feedforward when ... set ...'");
      }
      const Fields when(line, 2, set, {"t", "n"}, {});
      const Fields then(line, set + 1, size, {"t", "loop", "theta"}, kPhases);
      FeedForwardRule r;
      r.when_t = check.timebin(when);
      r.when_n = when.count("n");
      r.set_t = check.timebin(then);
      r.loop = check.loop(then);
      r.config = then.config();
      if (r.set_t <= r.when_t) {
        throw ParseError(ErrorClass::kFeedforwardCausality, line.number, then.get("t").column,
                         "time-bin " + std::to_string(r.set_t) + " does not follow the measured time-bin " +
                             std::to_string(r.when_t));
      }
      if (!rules.emplace(r.when_t, r.when_n, r.set_t, r.loop).second) duplicate(line, "feedforward rule");
      p.feedforward.push_back(r);
    } else if (head == "encode") {
      const Fields f(line, 1, size, {"d", "alpha"}, {});
      EncodingDirective e{f.integer("d"), f.complex("alpha")};
      if (e.arity < 2) throw ParseError(ErrorClass::kInvalidValue, line.number, f.get("d").column, "d must be at least 2");
      if (e.alpha == Complex{}) throw ParseError(ErrorClass::kInvalidValue, line.number, f.get("alpha").column, "alpha must be nonzero");
      if (p.encoding) duplicate(line, "encode directive");
      p.encoding = e;
    }
  }

  for (int t = 0; t < p.timebins; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    if (!preps[idx] || !meas[idx]) {
      throw ParseError(ErrorClass::kScheduleIncomplete, rail->number, rail->tokens[0].column,
                       "time-bin " + std::to_string(t) + " has no " + (preps[idx] ? "measure" : "prepare") + " directive");
    }
    p.preps.push_back(*preps[idx]);
    p.measurements.push_back(*meas[idx]);
  }
  return p;
}

std::string print_program(const CircuitProgram& p) {
  std::ostringstream out;
  out << "rail loops=" << p.loops << " timebins=" << p.timebins << "\n";
  for (const auto& [key, config] : p.bs) {
    out << "bs t=" << key.first << " loop=" << key.second << " " << format_config(config) << "\n";
  }
  for (std::size_t t = 0; t < p.preps.size(); ++t) {
    const TimebinPrep& prep = p.preps[t];
    out << "prepare t=" << t << " ";
    if (prep.coherent) {
      out << "coherent=" << format_complex(*prep.coherent) << "\n";
    } else {
      out << "n=" << prep.photons << "\n";
    }
  }
  for (std::size_t t = 0; t < p.measurements.size(); ++t) {
    const Measurement& m = p.measurements[t];
    if (m.postselect) {
      out << "postselect t=" << t << " n=" << *m.postselect << "\n";
    } else {
      out << "measure t=" << t << "\n";
    }
  }
  for (const FeedForwardRule& r : p.feedforward) {
    out << "feedforward when t=" << r.when_t << " n=" << r.when_n << " set t=" << r.set_t << " loop=" << r.loop << " "
        << format_config(r.config) << "\n";
  }
  if (p.encoding) out << "encode d=" << p.encoding->arity << " alpha=" << format_complex(p.encoding->alpha) << "\n";
  return out.str();
}

}  // namespace fockrail
