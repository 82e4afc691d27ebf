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

#ifndef FOCKRAIL_DSL_HPP_
#define FOCKRAIL_DSL_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockrail/rail.hpp"

namespace fockrail {

enum class ErrorClass {
  kSyntax,
  kUnknownDirective,
  kMissingLayout,
  kDuplicateDirective,
  kIndexRange,
  kInvalidValue,
  kScheduleIncomplete,
  kFeedforwardCausality,
};

/// Upper-case identifier, e.g. "INDEX_RANGE".
std::string_view error_class_name(ErrorClass c);

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorClass cls, int line, int column, const std::string& message);

  ErrorClass error_class() const { return class_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorClass class_;
  int line_;
  int column_;
  std::string detail_;
};

/// What happens to the external output of one time-bin.
struct Measurement {
  /// Required photon count when post-selected.
  std::optional<int> postselect;

  bool operator==(const Measurement&) const = default;
};

/// When time-bin `when_t` reads `when_n` photons, loop `loop` uses `config`
/// at time-bin `set_t`.
struct FeedForwardRule {
  int when_t = 0;
  int when_n = 0;
  int set_t = 0;
  int loop = 0;
  BeamSplitterConfig config;

  bool operator==(const FeedForwardRule&) const = default;
};

struct EncodingDirective {
  int arity = 2;
  Complex alpha;

  bool operator==(const EncodingDirective&) const = default;
};

/// Parsed circuit description. The schedule holds one preparation and one
/// measurement per time-bin; loops start empty.
struct CircuitProgram {
  int loops = 1;
  int timebins = 1;
  /// Explicit beam splitter settings keyed by (time-bin, loop); absent
  /// entries are mirrors.
  std::map<std::pair<int, int>, BeamSplitterConfig> bs;
  std::vector<TimebinPrep> preps;
  std::vector<Measurement> measurements;
  /// In file order; later matching rules win.
  std::vector<FeedForwardRule> feedforward;
  std::optional<EncodingDirective> encoding;

  RailLayout layout() const;
  bool has_feedforward() const { return !feedforward.empty(); }
  bool has_postselection() const;

  bool operator==(const CircuitProgram&) const = default;
};

/// Line-oriented grammar, one directive per line, `#` starts a comment:
///   rail loops=<int> timebins=<int>
///   bs t=<int> loop=<int> theta=<float> [gamma=<float>] [rho=<float>] [tau=<float>]
///   prepare t=<int> (n=<int> | coherent=<float>[,<float>])
///   measure t=<int>
///   postselect t=<int> n=<int>
///   feedforward when t=<int> n=<int> set t=<int> loop=<int> theta=<float> [gamma=...] [rho=...] [tau=...]
///   encode d=<int> alpha=<float>[,<float>]
/// Throws ParseError.
CircuitProgram parse_program(std::string_view text);

/// Canonical text with every float printed to 17 significant digits.
std::string print_program(const CircuitProgram& program);

}  // namespace fockrail

#endif  // FOCKRAIL_DSL_HPP_
