#pragma once

// Sparse multivariate polynomials over the rationals, keyed by exponent
// vector. Zero coefficients are never stored, so equal polynomials compare
// equal term by term.

#include "liealg/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace liealg {

using Exponent = std::vector<unsigned>;

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  /// The variable x_{index+1}.
  static MultiPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    MultiPoly p(nvars);
    p.add_term(std::move(e), 1);
    return p;
  }

  static MultiPoly monomial(Exponent e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponent e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest total degree among the terms; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned k : e) s += static_cast<int>(k);
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous() const {
    std::optional<unsigned> deg;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned k : e) s += k;
      if (deg && *deg != s) return false;
      deg = s;
    }
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  /// Partial derivative with respect to x_{index+1}.
  MultiPoly derivative(std::size_t index) const {
    if (index >= nvars_) throw std::out_of_range("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponent d = e;
      --d[index];
      r.add_term(std::move(d), c * e[index]);
    }
    return r;
  }

  Rational eval(const RationalVector& point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                  " coordinates, polynomial has " + std::to_string(nvars_) +
                                  " variables");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (unsigned p = 0; p < e[k]; ++p) t *= point[k];
      total += t;
    }
    return total;
  }

  /// Substitutes x_{i+1} := images[i]; the result lives in the images' ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("compose: wrong number of images");
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    for (const auto& q : images)
      if (q.nvars() != m) throw std::invalid_argument("compose: images live in different rings");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    MultiPoly r(m);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(m, c);
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(constant(m, 1));
        while (cache.size() <= e[k]) cache.push_back(cache.back() * images[k]);
        t = t * cache[e[k]];
      }
      r += t;
    }
    return r;
  }

  /// p(x) -> p(y) with y_i = signs[i] * x_{source[i]} (zero-based indices).
  /// Monomial-to-monomial, so this avoids the general compose.
  MultiPoly substitute_signed(const std::vector<std::size_t>& source,
                              const std::vector<int>& signs) const {
    if (source.size() != nvars_ || signs.size() != nvars_)
      throw std::invalid_argument("substitution size mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent out(nvars_, 0);
      int sign = 1;
      for (std::size_t i = 0; i < nvars_; ++i) {
        out[source[i]] += e[i];
        if (signs[i] < 0 && (e[i] & 1u)) sign = -sign;
      }
      r.add_term(std::move(out), sign > 0 ? c : Rational(-c));
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest exponents first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool unit_monomial = true;
      for (unsigned k : e) unit_monomial = unit_monomial && k == 0;
      Rational mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (unit_monomial) out += mag.get_str();
      else if (mag == 1) out += mono;
      else out += mag.get_str() + "*" + mono;
    }
    return out;
  }

  void require_same_vars(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant over the polynomial ring by Laplace expansion along rows,
/// memoized on the set of columns still available.
inline MultiPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  if (n > 20) throw std::invalid_argument("poly_det: matrix too large for cofactor expansion");
  const std::size_t nvars = m.front().empty() ? 0 : m.front().front().nvars();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix is not square");
    for (const auto& p : row)
      if (p.nvars() != nvars) throw std::invalid_argument("poly_det: entries live in different rings");
  }
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  auto expand = [&](auto& self, std::size_t row, std::uint32_t cols) -> MultiPoly {
    if (row == n) return MultiPoly::constant(nvars, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MultiPoly acc(nvars);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const MultiPoly& entry = m[row][c];
      if (!entry.is_zero()) {
        MultiPoly term = entry * self(self, row + 1, cols & ~(1u << c));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return expand(expand, 0, (n == 32 ? 0u : (1u << n)) - 1u);
}

/// c with p == c * q, if one exists. q must be nonzero.
inline std::optional<Rational> proportionality_constant(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_vars(q);
  if (q.is_zero()) throw std::invalid_argument("proportionality_constant: zero reference polynomial");
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end()) return p.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  Rational c = it->second / c0;
  if (p == c * q) return c;
  return std::nullopt;
}

}  // namespace liealg
