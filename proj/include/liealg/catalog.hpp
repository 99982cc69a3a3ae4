#pragma once

// The four classical families as concrete matrix Lie algebras, each with a
// canonical edge basis and the diagonal Cartan subalgebra.

#include "liealg/digraph.hpp"
#include "liealg/family.hpp"
#include "liealg/linalg.hpp"
#include "liealg/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

struct BasisElement {
  std::string label;
  EdgeMatrix matrix;
};

/// Human-readable edge expansion, e.g. "E(1,2) - E(4,3)".
inline std::string edge_label(const EdgeMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Rational& c = m(i, j);
      if (c == 0) continue;
      const Rational mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (mag != 1) out += mag.get_str() + "*";
      out += "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  return out.empty() ? "0" : out;
}

/// The structure matrix S of {X : X^t S + S X = 0}; none for sl.
inline std::optional<EdgeMatrix> structure_form(const AlgebraSpec& spec) {
  const int n = spec.n;
  const int dim = spec.realization_dim();
  switch (spec.family) {
    case AlgebraFamily::SL: return std::nullopt;
    case AlgebraFamily::SP: {
      EdgeMatrix s(static_cast<std::size_t>(dim));
      for (int i = 1; i <= n; ++i) {
        s += edge(i, n + i, dim);
        s -= edge(n + i, i, dim);
      }
      return s;
    }
    case AlgebraFamily::SO_EVEN:
    case AlgebraFamily::SO_ODD: {
      EdgeMatrix s(static_cast<std::size_t>(dim));
      for (int i = 1; i <= n; ++i) {
        s += edge(i, n + i, dim);
        s += edge(n + i, i, dim);
      }
      if (spec.family == AlgebraFamily::SO_ODD) s += edge(dim, dim, dim);
      return s;
    }
  }
  return std::nullopt;
}

/// True iff x satisfies the defining relation of the family exactly.
inline bool check_membership(const EdgeMatrix& x, const AlgebraSpec& spec) {
  if (x.dim() != static_cast<std::size_t>(spec.realization_dim()))
    throw std::invalid_argument("check_membership: matrix of size " + std::to_string(x.dim()) +
                                " cannot belong to " + spec.name());
  const auto s = structure_form(spec);
  if (!s) return mat_trace(x) == 0;
  return (x.transpose() * *s + *s * x).is_zero();
}

class AlgebraRealization {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  const EdgeMatrix& element(std::size_t i) const { return basis_.at(i).matrix; }

  /// Indices of the Cartan basis: always the leading block of the basis.
  std::vector<std::size_t> cartan_basis() const {
    std::vector<std::size_t> idx(cartan_size_);
    for (std::size_t i = 0; i < cartan_size_; ++i) idx[i] = i;
    return idx;
  }
  std::size_t cartan_size() const { return cartan_size_; }

  /// The positive-root vectors follow the Cartan block; their T-images follow
  /// in the same order.
  std::size_t positive_count() const { return positive_count_; }
  std::size_t positive_index(std::size_t k) const { return cartan_size_ + k; }
  std::size_t negative_index(std::size_t k) const { return cartan_size_ + positive_count_ + k; }

  const std::optional<EdgeMatrix>& structure_matrix() const { return structure_; }

  /// Coefficients of x in the canonical basis, or nullopt if x is outside it.
  std::optional<RationalVector> coordinates(const EdgeMatrix& x) const {
    return solver_.coordinates(x.flat());
  }

  friend AlgebraRealization build(const AlgebraSpec& spec);

 private:
  AlgebraSpec spec_;
  std::vector<BasisElement> basis_;
  std::size_t cartan_size_ = 0;
  std::size_t positive_count_ = 0;
  std::optional<EdgeMatrix> structure_;
  SpanCoordinates solver_;
};

namespace detail {

// Row-major position of the first nonzero entry; orders positive-root vectors.
inline std::pair<std::size_t, std::size_t> leading_entry(const EdgeMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j) != 0) return {i, j};
  return {m.dim(), m.dim()};
}

inline std::vector<EdgeMatrix> positive_root_vectors(const AlgebraSpec& spec) {
  const int n = spec.n;
  const int dim = spec.realization_dim();
  std::vector<EdgeMatrix> out;
  if (spec.family == AlgebraFamily::SL) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back(edge(i, j, dim));
    return out;
  }
  // Block A: a_i - a_j.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(edge(i, j, dim) - edge(n + j, n + i, dim));
  // Block B: a_i + a_j, symmetric for sp and antisymmetric for so.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (spec.family == AlgebraFamily::SP) out.push_back(edge(i, n + j, dim) + edge(j, n + i, dim));
      else out.push_back(edge(i, n + j, dim) - edge(j, n + i, dim));
    }
  if (spec.family == AlgebraFamily::SP)
    for (int i = 1; i <= n; ++i) out.push_back(edge(i, n + i, dim));  // 2a_i
  if (spec.family == AlgebraFamily::SO_ODD)
    for (int i = 1; i <= n; ++i) out.push_back(edge(i, dim, dim) - edge(dim, n + i, dim));  // a_i
  std::stable_sort(out.begin(), out.end(), [](const EdgeMatrix& a, const EdgeMatrix& b) {
    return leading_entry(a) < leading_entry(b);
  });
  return out;
}

}  // namespace detail

/// Canonical realization: Cartan elements first, then positive-root vectors
/// in row-major order of their leading edge, then their T-images.
inline AlgebraRealization build(const AlgebraSpec& spec) {
  spec.validate();
  AlgebraRealization r;
  r.spec_ = spec;
  r.structure_ = structure_form(spec);
  const int n = spec.n;
  const int dim = spec.realization_dim();

  for (int k = 1; k <= spec.lie_rank(); ++k) {
    EdgeMatrix h = spec.family == AlgebraFamily::SL ? edge(k, k, dim) - edge(k + 1, k + 1, dim)
                                                    : edge(k, k, dim) - edge(n + k, n + k, dim);
    r.basis_.push_back({"h" + std::to_string(k), std::move(h)});
  }
  r.cartan_size_ = r.basis_.size();

  const auto positives = detail::positive_root_vectors(spec);
  r.positive_count_ = positives.size();
  for (const auto& x : positives) r.basis_.push_back({edge_label(x), x});
  for (const auto& x : positives) {
    EdgeMatrix y = opposite_antimorphism(x, spec);
    r.basis_.push_back({edge_label(y), std::move(y)});
  }

  for (const auto& b : r.basis_)
    if (!check_membership(b.matrix, spec))
      throw std::logic_error("basis element " + b.label + " violates the defining relation of " +
                             spec.name());

  RationalMatrix flat;
  flat.reserve(r.basis_.size());
  for (const auto& b : r.basis_) flat.push_back(b.matrix.flat());
  r.solver_ = SpanCoordinates(flat);
  return r;
}

/// c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k.
using StructureConstants = std::vector<std::vector<RationalVector>>;

inline StructureConstants structure_constants(const AlgebraRealization& r) {
  const std::size_t d = r.dimension();
  StructureConstants c(d, std::vector<RationalVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (j < i) {
        c[i][j] = -c[j][i];
        continue;
      }
      auto coords = r.coordinates(mat_bracket(r.element(i), r.element(j)));
      if (!coords)
        throw std::logic_error("bracket of " + r.basis()[i].label + " and " + r.basis()[j].label +
                               " leaves the span of the basis");
      c[i][j] = std::move(*coords);
    }
  return c;
}

}  // namespace liealg
