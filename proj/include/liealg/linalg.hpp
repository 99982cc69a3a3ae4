#pragma once

// Exact Gaussian elimination over the rationals: rank, determinants, linear
// solves and coordinates with respect to a fixed linearly independent family.

#include "liealg/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liealg {

/// Row-major list of rows; rows may have any common length.
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

// Reduces rows in place to reduced row echelon form; returns pivot columns.
// If `track` is given it receives the same row operations.
inline std::vector<std::size_t> rref(RationalMatrix& rows, RationalMatrix* track = nullptr) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (track) std::swap((*track)[r], (*track)[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    if (track)
      for (auto& x : (*track)[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      if (track)
        for (std::size_t j = 0; j < (*track)[i].size(); ++j)
          if ((*track)[r][j] != 0) (*track)[i][j] -= f * (*track)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline void require_rectangular(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
}

}  // namespace detail

inline std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  detail::require_rectangular(rows);
  return detail::rref(rows).size();
}

/// Determinant by elimination with exact pivots.
inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Determinants of the k x k upper-left blocks, k = 1..n.
inline RationalVector leading_principal_minors(const RationalMatrix& m) {
  RationalVector minors;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    RationalMatrix block(k, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i][j] = m.at(i).at(j);
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

/// Some solution x of A x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
inline std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  if (a.empty()) return RationalVector{};
  detail::require_rectangular(a);
  const std::size_t nvars = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == nvars) return std::nullopt;
  RationalVector x(nvars);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][nvars];
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix work = m;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
    inv[i][i] = 1;
  }
  if (detail::rref(work, &inv).size() != n) throw std::domain_error("matrix is singular");
  return inv;
}

inline RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

/// Coordinates with respect to a fixed linearly independent family of
/// vectors. The elimination is done once; each query costs one pass.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;

  explicit SpanCoordinates(const RationalMatrix& basis) : size_(basis.size()) {
    if (basis.empty()) return;
    detail::require_rectangular(basis);
    reduced_ = basis;
    transform_.assign(size_, RationalVector(size_));
    for (std::size_t i = 0; i < size_; ++i) transform_[i][i] = 1;
    pivots_ = detail::rref(reduced_, &transform_);
    if (pivots_.size() != size_) throw std::invalid_argument("basis vectors are linearly dependent");
  }

  std::size_t size() const { return size_; }

  /// c with sum_i c_i basis_i == target, or nullopt if target is outside the span.
  std::optional<RationalVector> coordinates(const RationalVector& target) const {
    if (size_ == 0) {
      if (is_zero(target)) return RationalVector{};
      return std::nullopt;
    }
    if (target.size() != reduced_.front().size())
      throw std::invalid_argument("coordinates: length mismatch");
    RationalVector y(size_);
    for (std::size_t r = 0; r < size_; ++r) y[r] = target[pivots_[r]];
    RationalVector residual = target;
    for (std::size_t r = 0; r < size_; ++r) {
      if (y[r] == 0) continue;
      for (std::size_t j = 0; j < residual.size(); ++j)
        if (reduced_[r][j] != 0) residual[j] -= y[r] * reduced_[r][j];
    }
    if (!is_zero(residual)) return std::nullopt;
    RationalVector c(size_);
    for (std::size_t r = 0; r < size_; ++r) {
      if (y[r] == 0) continue;
      for (std::size_t j = 0; j < size_; ++j)
        if (transform_[r][j] != 0) c[j] += y[r] * transform_[r][j];
    }
    return c;
  }

 private:
  std::size_t size_ = 0;
  RationalMatrix reduced_;
  RationalMatrix transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liealg
