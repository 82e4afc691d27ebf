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

#include "fockrail/functor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "fockrail/permanent.hpp"

namespace fockrail {

namespace {

double sqrt_factorial_product(const OccupationVector& n) {
  double p = 1.0;
  for (int c : n.counts()) p *= std::tgamma(static_cast<double>(c) + 1.0);
  return std::sqrt(p);
}

void check_modes(const UnitaryMatrix& u, int modes) {
  if (modes != u.dim()) {
    throw DimensionError("state has " + std::to_string(modes) + " modes, unitary has dimension " +
                         std::to_string(u.dim()));
  }
}

FockSector guarded_sector(int modes, int photons) {
  if (sector_size(modes, photons) > kMaxSectorBasis) {
    throw SizeGuardError("sector basis exceeds " + std::to_string(kMaxSectorBasis) + " states");
  }
  return FockSector(modes, photons);
}

// Everything element-specific that depends only on the input occupation.
struct RowContext {
  double in_norm;
  std::vector<int> rows;
};

RowContext row_context(const OccupationVector& in) {
  RowContext ctx{sqrt_factorial_product(in), {}};
  for (int m = 0; m < in.modes(); ++m)
    for (int k = 0; k < in[m]; ++k) ctx.rows.push_back(m);
  return ctx;
}

Complex element_with_context(const Eigen::MatrixXcd& u, const RowContext& ctx, const OccupationVector& out) {
  const int n = static_cast<int>(ctx.rows.size());
  Eigen::MatrixXcd sub(n, n);
  int j = 0;
  for (int m = 0; m < out.modes(); ++m) {
    for (int k = 0; k < out[m]; ++k, ++j) {
      for (int i = 0; i < n; ++i) sub(i, j) = u(ctx.rows[static_cast<std::size_t>(i)], m);
    }
  }
  return permanent(sub) / (ctx.in_norm * sqrt_factorial_product(out));
}

}  // namespace

double unitarity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const Eigen::MatrixXcd d = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().rowwise().sum().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd m, Check check, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw DimensionError("unitary must be square and nonempty");
  if (check == Check::kVerify) {
    const double defect = unitarity_defect(m_);
    if (!(defect <= tol)) {
      throw NotUnitaryError("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(dim, dim), Check::kSkip);
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint(), Check::kSkip); }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("product of unitaries with different dimensions");
  return UnitaryMatrix(a.matrix() * b.matrix(), UnitaryMatrix::Check::kSkip);
}

UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const int n = a.dim() + b.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return UnitaryMatrix(std::move(m), UnitaryMatrix::Check::kSkip);
}

Complex matrix_element(const UnitaryMatrix& u, const OccupationVector& in, const OccupationVector& out) {
  check_modes(u, in.modes());
  check_modes(u, out.modes());
  if (in.total() != out.total()) return 0.0;
  return element_with_context(u.matrix(), row_context(in), out);
}

std::vector<Complex> transition_row(const UnitaryMatrix& u, const OccupationVector& in,
                                    const FockSector& sector) {
  check_modes(u, in.modes());
  check_modes(u, sector.modes());
  std::vector<Complex> row(sector.size());
  if (in.total() != sector.photons()) return row;
  const RowContext ctx = row_context(in);
  const auto count = static_cast<std::ptrdiff_t>(sector.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    row[static_cast<std::size_t>(j)] = element_with_context(u.matrix(), ctx, sector[static_cast<std::size_t>(j)]);
  }
  return row;
}

Eigen::MatrixXcd sector_matrix(const UnitaryMatrix& u, int photons) {
  const FockSector sector = guarded_sector(u.dim(), photons);
  const auto n = static_cast<std::ptrdiff_t>(sector.size());
  Eigen::MatrixXcd s(n, n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const RowContext ctx = row_context(sector[static_cast<std::size_t>(i)]);
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      s(i, j) = element_with_context(u.matrix(), ctx, sector[static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

Eigen::MatrixXcd sector_matrix_serial(const UnitaryMatrix& u, int photons) {
  const FockSector sector = guarded_sector(u.dim(), photons);
  const auto n = static_cast<std::ptrdiff_t>(sector.size());
  Eigen::MatrixXcd s(n, n);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const RowContext ctx = row_context(sector[static_cast<std::size_t>(i)]);
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      s(i, j) = element_with_context(u.matrix(), ctx, sector[static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

namespace {

// Above this photon count a sector is always transformed by expanding
// prod_i (sum_j U_ij a_j^dagger)^{n_i}; below it the cheaper of the two
// paths is chosen.
constexpr int kExpansionPhotons = 12;

struct CountsHash {
  std::size_t operator()(const std::vector<int>& n) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : n) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
    return h;
  }
};

using Monomials = std::unordered_map<std::vector<int>, Complex, CountsHash>;

// Nonzero entries of each row of U.
using SparseRows = std::vector<std::vector<std::pair<int, Complex>>>;

SparseRows sparse_rows(const Eigen::MatrixXcd& u) {
  SparseRows rows(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      if (u(r, j) != Complex{}) rows[static_cast<std::size_t>(r)].emplace_back(static_cast<int>(j), u(r, j));
  return rows;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// Upper bound on the monomials produced by expanding one input.
double expansion_terms(const SparseRows& rows, const OccupationVector& in, double sector) {
  double terms = 1.0;
  for (int r = 0; r < in.modes(); ++r) {
    const int nnz = static_cast<int>(rows[static_cast<std::size_t>(r)].size());
    if (in[r] > 0 && nnz == 0) return 0.0;
    terms *= binomial(nnz + in[r] - 1, in[r]);
  }
  return std::min(terms, sector);
}

// B[U]|in> as a sparse map over output occupations.
Monomials expand(const SparseRows& rows, const OccupationVector& in) {
  const int modes = in.modes();
  Monomials poly{{std::vector<int>(static_cast<std::size_t>(modes), 0), Complex(1.0)}};
  for (int r = 0; r < modes; ++r) {
    for (int k = 0; k < in[r]; ++k) {
      Monomials next;
      next.reserve(poly.size() * rows[static_cast<std::size_t>(r)].size());
      for (const auto& [mono, c] : poly) {
        std::vector<int> n = mono;
        for (const auto& [j, x] : rows[static_cast<std::size_t>(r)]) {
          ++n[static_cast<std::size_t>(j)];
          next[n] += c * x;
          --n[static_cast<std::size_t>(j)];
        }
      }
      poly = std::move(next);
    }
  }
  const double in_norm = sqrt_factorial_product(in);
  for (auto& [mono, c] : poly) c *= sqrt_factorial_product(OccupationVector(mono)) / in_norm;
  return poly;
}

template <bool Parallel>
void expand_sector(const SparseRows& rows, const std::vector<std::pair<OccupationVector, Complex>>& inputs,
                   FockVector& out) {
  // Per-input results are merged in input order so the sum does not depend
  // on the thread count.
  std::vector<Monomials> parts(inputs.size());
  const auto count = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1) if (Parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    parts[static_cast<std::size_t>(i)] = expand(rows, inputs[static_cast<std::size_t>(i)].first);
  }
  std::map<OccupationVector, Complex> total;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [mono, c] : parts[i]) total[OccupationVector(mono)] += inputs[i].second * c;
  }
  for (const auto& [n, a] : total) out.add(n, a);
}

template <bool Parallel>
void permanent_sector(const UnitaryMatrix& u, int photons,
                      const std::vector<std::pair<OccupationVector, Complex>>& inputs, FockVector& out) {
  const FockSector sector = guarded_sector(u.dim(), photons);
  std::vector<std::pair<RowContext, Complex>> rows;
  for (const auto& [n, a] : inputs) rows.emplace_back(row_context(n), a);
  const auto count = static_cast<std::ptrdiff_t>(sector.size());
  std::vector<Complex> dense(sector.size());
#pragma omp parallel for schedule(dynamic, 16) if (Parallel)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    Complex acc{};
    for (const auto& [ctx, a] : rows) acc += a * element_with_context(u.matrix(), ctx, sector[static_cast<std::size_t>(j)]);
    dense[static_cast<std::size_t>(j)] = acc;
  }
  for (std::size_t j = 0; j < sector.size(); ++j) out.add(sector[j], dense[j]);
}

template <bool Parallel>
FockVector apply_impl(const UnitaryMatrix& u, const FockVector& state) {
  check_modes(u, state.modes());
  FockVector out(state.modes(), state.truncation());
  out.record_loss(state.truncation_loss());
  const SparseRows rows = sparse_rows(u.matrix());

  // Group input components by sector.
  std::map<int, std::vector<std::pair<OccupationVector, Complex>>> by_sector;
  for (const auto& [n, a] : state.amplitudes()) by_sector[n.total()].emplace_back(n, a);

  for (const auto& [photons, inputs] : by_sector) {
    // Work estimates: one permanent per (input, output) pair against the
    // monomials touched while expanding each input.
    const double sector = binomial(state.modes() + photons - 1, photons);
    double expansion = 0.0;
    double largest = 0.0;
    for (const auto& [n, a] : inputs) {
      const double terms = expansion_terms(rows, n, sector);
      largest = std::max(largest, terms);
      expansion += terms * photons * static_cast<double>(state.modes());
    }
    const double permanents = static_cast<double>(inputs.size()) * sector * std::ldexp(1.0, photons);
    if (photons > kExpansionPhotons || expansion < permanents) {
      if (largest > static_cast<double>(kMaxSectorBasis)) {
        throw SizeGuardError("expansion of the " + std::to_string(photons) + "-photon sector exceeds the size guard");
      }
      expand_sector<Parallel>(rows, inputs, out);
    } else {
      permanent_sector<Parallel>(u, photons, inputs, out);
    }
  }
  return out;
}

}  // namespace

FockVector apply(const UnitaryMatrix& u, const FockVector& state) { return apply_impl<true>(u, state); }

FockVector apply_serial(const UnitaryMatrix& u, const FockVector& state) { return apply_impl<false>(u, state); }

double direct_sum_check(const UnitaryMatrix& u1, const UnitaryMatrix& u2, int photon_cap) {
  const UnitaryMatrix sum = direct_sum(u1, u2);
  double worst = 0.0;
  for (int p = 0; p <= photon_cap; ++p) {
    const FockSector joint(sum.dim(), p);
    for (const auto& in : joint.basis()) {
      const OccupationVector in1 = in.slice(0, u1.dim());
      const OccupationVector in2 = in.slice(u1.dim(), u2.dim());
      for (const auto& out : joint.basis()) {
        const OccupationVector out1 = out.slice(0, u1.dim());
        const OccupationVector out2 = out.slice(u1.dim(), u2.dim());
        const Complex lhs = matrix_element(sum, in, out);
        const Complex rhs = matrix_element(u1, in1, out1) * matrix_element(u2, in2, out2);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

double product_check(const UnitaryMatrix& u1, const UnitaryMatrix& u2, int photon_cap) {
  if (u1.dim() != u2.dim()) throw DimensionError("product_check needs equal dimensions");
  const UnitaryMatrix prod = u1 * u2;
  double worst = 0.0;
  for (int p = 0; p <= photon_cap; ++p) {
    const Eigen::MatrixXcd lhs = sector_matrix(prod, p);
    const Eigen::MatrixXcd rhs = sector_matrix(u1, p) * sector_matrix(u2, p);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace fockrail
