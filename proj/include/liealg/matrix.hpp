#pragma once

#include "liealg/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

/// Dense square matrix over the rationals. Read as a linear combination of
/// digraph edges: entry (i, j) is the coefficient of the edge i -> j.
class EdgeMatrix {
 public:
  EdgeMatrix() = default;

  explicit EdgeMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static EdgeMatrix zero(std::size_t dim) { return EdgeMatrix(dim); }

  static EdgeMatrix identity(std::size_t dim) {
    EdgeMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  /// Elementary matrix with a single 1 at (row, col), zero-based.
  static EdgeMatrix unit(std::size_t dim, std::size_t row, std::size_t col) {
    EdgeMatrix m(dim);
    m(row, col) = 1;
    return m;
  }

  static EdgeMatrix diagonal(const RationalVector& d) {
    EdgeMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Row-major entries; used to treat a matrix as a vector of length dim^2.
  const RationalVector& flat() const { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  RationalVector diagonal_entries() const {
    RationalVector d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i);
    return d;
  }

  EdgeMatrix transpose() const {
    EdgeMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  EdgeMatrix& operator+=(const EdgeMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  EdgeMatrix& operator-=(const EdgeMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  EdgeMatrix& operator*=(const Rational& c) {
    for (auto& x : entries_) x *= c;
    return *this;
  }

  friend EdgeMatrix operator+(EdgeMatrix a, const EdgeMatrix& b) { return a += b; }
  friend EdgeMatrix operator-(EdgeMatrix a, const EdgeMatrix& b) { return a -= b; }
  friend EdgeMatrix operator*(const Rational& c, EdgeMatrix a) { return a *= c; }
  friend EdgeMatrix operator-(EdgeMatrix a) { return a *= Rational(-1); }

  friend bool operator==(const EdgeMatrix& a, const EdgeMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) out += ", ";
        out += (*this)(i, j).get_str();
      }
      out += "]";
    }
    return out + "]";
  }

  void require_same_dim(const EdgeMatrix& o) const {
    if (o.dim_ != dim_)
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(dim_) +
                                  " vs " + std::to_string(o.dim_));
  }

 private:
  std::size_t dim_ = 0;
  RationalVector entries_;
};

/// Matrix product. On edges, (i->j)(k->l) = delta_jk (i->l); zero entries of
/// the left factor are skipped since algebra elements are mostly sparse.
inline EdgeMatrix mat_mul(const EdgeMatrix& a, const EdgeMatrix& b) {
  a.require_same_dim(b);
  const std::size_t n = a.dim();
  EdgeMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

inline EdgeMatrix operator*(const EdgeMatrix& a, const EdgeMatrix& b) { return mat_mul(a, b); }

/// Commutator [a, b] = ab - ba.
inline EdgeMatrix mat_bracket(const EdgeMatrix& a, const EdgeMatrix& b) {
  return mat_mul(a, b) - mat_mul(b, a);
}

/// Only loops i -> i contribute to the trace.
inline Rational mat_trace(const EdgeMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// If b == c * a for a scalar c, returns c. a must be nonzero.
inline std::optional<Rational> proportionality(const EdgeMatrix& a, const EdgeMatrix& b) {
  a.require_same_dim(b);
  const auto& fa = a.flat();
  const auto& fb = b.flat();
  std::optional<Rational> c;
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] == 0) {
      if (fb[k] != 0) return std::nullopt;
      continue;
    }
    Rational ratio = fb[k] / fa[k];
    if (!c) c = ratio;
    else if (*c != ratio) return std::nullopt;
  }
  return c;
}

}  // namespace liealg
