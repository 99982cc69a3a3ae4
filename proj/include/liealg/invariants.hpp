#pragma once

// Basic invariant polynomials of the classical Weyl groups, their
// invariance under signed permutations and the Jacobian criterion.

#include "liealg/family.hpp"
#include "liealg/polynomial.hpp"
#include "liealg/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

struct InvariantSuite {
  std::optional<AlgebraFamily> family;
  std::size_t rank = 0;
  std::size_t nvars = 0;
  std::vector<MultiPoly> polys;
  std::vector<unsigned> degrees;
  /// Type A: the polynomials live on n+1 variables and are restricted to
  /// x_{n+1} = -(x_1 + ... + x_n) before differentiating.
  bool sum_zero_restriction = false;

  std::uint64_t degree_product() const {
    std::uint64_t p = 1;
    for (auto d : degrees) p *= d;
    return p;
  }

  /// Suite from arbitrary polynomials on a common ring, without restriction.
  static InvariantSuite custom(std::vector<MultiPoly> polys) {
    if (polys.empty()) throw std::invalid_argument("custom suite needs at least one polynomial");
    InvariantSuite s;
    s.nvars = polys.front().nvars();
    for (const auto& p : polys) {
      p.require_same_vars(polys.front());
      s.degrees.push_back(static_cast<unsigned>(std::max(p.total_degree(), 0)));
    }
    s.rank = polys.size();
    s.polys = std::move(polys);
    return s;
  }
};

/// x_1^k + ... + x_m^k.
inline MultiPoly power_sum(std::size_t nvars, unsigned k) {
  MultiPoly p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = k;
    p.add_term(std::move(e), 1);
  }
  return p;
}

inline MultiPoly product_of_variables(std::size_t nvars) {
  return MultiPoly::monomial(Exponent(nvars, 1), 1);
}

/// The generator list for the Weyl group of the given family at Lie rank
/// `rank`: power sums of degree 2..n+1 on n+1 variables (sl), even power
/// sums up to 2n (sp, so-odd), even power sums up to 2n-2 and x_1...x_n
/// (so-even).
inline InvariantSuite build_suite(AlgebraFamily family, std::size_t rank) {
  const std::size_t minimum = family == AlgebraFamily::SO_EVEN ? 2 : 1;
  if (rank < minimum || rank > 16)
    throw std::invalid_argument("build_suite: rank " + std::to_string(rank) + " is out of range for " +
                                family_name(family));
  InvariantSuite s;
  s.family = family;
  s.rank = rank;
  switch (family) {
    case AlgebraFamily::SL:
      s.nvars = rank + 1;
      s.sum_zero_restriction = true;
      for (unsigned k = 2; k <= rank + 1; ++k) s.degrees.push_back(k);
      break;
    case AlgebraFamily::SP:
    case AlgebraFamily::SO_ODD:
      s.nvars = rank;
      for (unsigned k = 1; k <= rank; ++k) s.degrees.push_back(2 * k);
      break;
    case AlgebraFamily::SO_EVEN:
      s.nvars = rank;
      for (unsigned k = 1; k + 1 <= rank; ++k) s.degrees.push_back(2 * k);
      s.degrees.push_back(static_cast<unsigned>(rank));
      break;
  }
  for (std::size_t i = 0; i < s.degrees.size(); ++i) {
    const bool product = family == AlgebraFamily::SO_EVEN && i + 1 == s.degrees.size();
    s.polys.push_back(product ? product_of_variables(s.nvars) : power_sum(s.nvars, s.degrees[i]));
  }
  return s;
}

/// p o g as a polynomial: x_i -> a_i x_{pi^-1(i)}.
inline MultiPoly act(const MultiPoly& p, const SignedPermutation& g) {
  if (p.nvars() != g.size()) throw std::invalid_argument("act: polynomial and group element sizes differ");
  std::vector<std::size_t> source(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) source[static_cast<std::size_t>(g.perm()[j])] = j;
  return p.substitute_signed(source, g.signs());
}

inline bool check_invariance(const InvariantSuite& s, const std::vector<SignedPermutation>& gens) {
  for (const auto& g : gens)
    if (g.size() != s.nvars)
      throw std::invalid_argument("check_invariance: generator acts on " + std::to_string(g.size()) +
                                  " coordinates, suite has " + std::to_string(s.nvars) + " variables");
  for (const auto& p : s.polys)
    for (const auto& g : gens)
      if (!(act(p, g) == p)) return false;
  return true;
}

/// The polynomials in the variables the Jacobian is taken over.
inline std::vector<MultiPoly> effective_polys(const InvariantSuite& s) {
  if (!s.sum_zero_restriction) return s.polys;
  if (s.nvars < 2) throw std::invalid_argument("sum-zero restriction needs at least two variables");
  const std::size_t m = s.nvars - 1;
  std::vector<MultiPoly> images;
  MultiPoly last(m);
  for (std::size_t i = 0; i < m; ++i) {
    images.push_back(MultiPoly::variable(m, i));
    last -= images.back();
  }
  images.push_back(last);
  std::vector<MultiPoly> out;
  for (const auto& p : s.polys) out.push_back(p.compose(images));
  return out;
}

inline PolyMatrix jacobian_matrix(const InvariantSuite& s) {
  const auto polys = effective_polys(s);
  const std::size_t m = polys.empty() ? 0 : polys.front().nvars();
  if (polys.size() != m)
    throw std::invalid_argument("jacobian: " + std::to_string(polys.size()) + " polynomials in " +
                                std::to_string(m) + " variables");
  PolyMatrix jm(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) jm[i].push_back(polys[i].derivative(j));
  return jm;
}

inline MultiPoly jacobian(const InvariantSuite& s) { return poly_det(jacobian_matrix(s)); }

/// Algebraic independence over a field of characteristic zero.
inline bool jacobian_criterion(const InvariantSuite& s) { return !jacobian(s).is_zero(); }

/// prod_{i<j} (x_j^e - x_i^e).
inline MultiPoly vandermonde(std::size_t nvars, unsigned e) {
  MultiPoly v = MultiPoly::constant(nvars, 1);
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j)
      v = v * (MultiPoly::variable(nvars, j).pow(e) - MultiPoly::variable(nvars, i).pow(e));
  return v;
}

/// Closed forms for each family:
/// sp/so-odd: 2^n n! x_1...x_n prod (x_j^2 - x_i^2).
/// so-even:   (-2)^{n-1} (n-1)! prod (x_j^2 - x_i^2).
/// sl:        prod (x_j - x_i) prod_i (x_1 + ... + 2x_i + ... + x_n).
inline MultiPoly jacobian_closed_form(AlgebraFamily family, std::size_t rank) {
  const std::size_t n = rank;
  Rational fact = 1;
  switch (family) {
    case AlgebraFamily::SP:
    case AlgebraFamily::SO_ODD: {
      for (std::size_t k = 1; k <= n; ++k) fact *= 2 * static_cast<long>(k);
      return fact * (product_of_variables(n) * vandermonde(n, 2));
    }
    case AlgebraFamily::SO_EVEN: {
      for (std::size_t k = 1; k + 1 <= n; ++k) fact *= -2 * static_cast<long>(k);
      return fact * vandermonde(n, 2);
    }
    case AlgebraFamily::SL: {
      MultiPoly p = vandermonde(n, 1);
      const MultiPoly sum = power_sum(n, 1);
      for (std::size_t i = 0; i < n; ++i) p = p * (sum + MultiPoly::variable(n, i));
      return p;
    }
  }
  throw std::invalid_argument("unknown family");
}

/// c with jacobian(suite) = c * closed form, or nullopt if they are not
/// proportional.
inline std::optional<Rational> jacobian_constant(const InvariantSuite& s) {
  if (!s.family) throw std::invalid_argument("jacobian_constant: suite has no family");
  return proportionality_constant(jacobian(s), jacobian_closed_form(*s.family, s.rank));
}

}  // namespace liealg
