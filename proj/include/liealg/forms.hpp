#pragma once

#include "liealg/catalog.hpp"
#include "liealg/linalg.hpp"
#include "liealg/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

/// Integer Cartan matrix. The classical invariants (A_ii = 2, A_ij in
/// {0,-1,-2,-3}, A_ij = 0 iff A_ji = 0) are checked by problems(), not
/// enforced, so that deliberately corrupted matrices can be represented.
struct CartanMatrix {
  std::vector<std::vector<int>> entries;

  std::size_t rank() const { return entries.size(); }
  int operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    const std::size_t n = entries.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (entries[i].size() != n) {
        out.push_back("row " + std::to_string(i + 1) + " has the wrong length");
        return out;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int a = entries[i][j];
        const std::string at = "A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (i == j && a != 2) out.push_back(at + " must be 2");
        if (i != j && (a > 0 || a < -3)) out.push_back(at + " must lie in {0,-1,-2,-3}");
        if (i != j && ((a == 0) != (entries[j][i] == 0)))
          out.push_back(at + " and its transpose must vanish together");
      }
    return out;
  }

  bool is_valid() const { return problems().empty(); }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

/// ad(x) in the canonical basis: column j holds the coordinates of [x, b_j].
inline RationalMatrix ad_matrix(const AlgebraRealization& r, const EdgeMatrix& x) {
  const std::size_t d = r.dimension();
  RationalMatrix ad(d, RationalVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    auto c = r.coordinates(mat_bracket(x, r.element(j)));
    if (!c) throw std::invalid_argument("ad(x) leaves the algebra; x is not a member");
    for (std::size_t i = 0; i < d; ++i) ad[i][j] = (*c)[i];
  }
  return ad;
}

/// tr(ad(x) o ad(y)), computed as the diagonal of ad(x)ad(y) in the
/// canonical basis.
inline Rational killing_form_ad(const AlgebraRealization& r, const EdgeMatrix& x, const EdgeMatrix& y) {
  if (!check_membership(x, r.spec()) || !check_membership(y, r.spec()))
    throw std::invalid_argument("killing_form_ad: argument is not in " + r.spec().name());
  Rational total = 0;
  for (std::size_t j = 0; j < r.dimension(); ++j) {
    const EdgeMatrix inner = mat_bracket(y, r.element(j));
    if (inner.is_zero()) continue;
    auto c = r.coordinates(mat_bracket(x, inner));
    if (!c) throw std::logic_error("bracket leaves the span of the basis");
    total += (*c)[j];
  }
  return total;
}

inline bool is_cartan_element(const AlgebraRealization& r, const EdgeMatrix& x) {
  return x.dim() == static_cast<std::size_t>(r.spec().realization_dim()) && x.is_diagonal() &&
         check_membership(x, r.spec());
}

/// sum over Phi of a(x) a(y).
inline Rational killing_form_roots(const RootDatum& rd, const EdgeMatrix& x, const EdgeMatrix& y) {
  if (!is_cartan_element(rd.realization(), x) || !is_cartan_element(rd.realization(), y))
    throw std::invalid_argument("killing_form_roots: argument is not in the Cartan subalgebra");
  Rational total = 0;
  for (const auto& a : rd.roots()) total += evaluate(a, x) * evaluate(a, y);
  return total;
}

/// sum_i x_i y_i over the n diagonal coordinates the weights use.
inline Rational coordinate_product(const AlgebraSpec& spec, const EdgeMatrix& x, const EdgeMatrix& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.coordinate_count()); ++i) s += x(i, i) * y(i, i);
  return s;
}

/// Constants c with kappa(x, y) = c * (reference form) on the Cartan
/// subalgebra, or nullopt where no single constant fits.
struct KillingConstants {
  std::optional<Rational> sigma_coefficient;  // against sum_i x_i y_i
  std::optional<Rational> trace_coefficient;  // against tr(xy)
};

namespace detail {

template <typename Kappa, typename Reference>
std::optional<Rational> fit_constant(const AlgebraRealization& r, Kappa&& kappa, Reference&& ref) {
  std::optional<Rational> c;
  std::vector<std::pair<Rational, Rational>> samples;
  for (std::size_t k = 0; k < r.cartan_size(); ++k)
    for (std::size_t l = k; l < r.cartan_size(); ++l)
      samples.emplace_back(kappa(r.element(k), r.element(l)), ref(r.element(k), r.element(l)));
  for (const auto& [kv, rv] : samples)
    if (rv != 0) {
      c = kv / rv;
      break;
    }
  if (!c) return std::nullopt;
  for (const auto& [kv, rv] : samples)
    if (kv != *c * rv) return std::nullopt;
  return c;
}

}  // namespace detail

inline KillingConstants killing_constants(const RootDatum& rd, bool use_adjoint_route = false) {
  const auto& r = rd.realization();
  auto kappa = [&](const EdgeMatrix& x, const EdgeMatrix& y) {
    return use_adjoint_route ? killing_form_ad(r, x, y) : killing_form_roots(rd, x, y);
  };
  KillingConstants out;
  out.sigma_coefficient = detail::fit_constant(
      r, kappa, [&](const EdgeMatrix& x, const EdgeMatrix& y) { return coordinate_product(r.spec(), x, y); });
  out.trace_coefficient = detail::fit_constant(
      r, kappa, [](const EdgeMatrix& x, const EdgeMatrix& y) { return mat_trace(x * y); });
  return out;
}

/// The sigma coefficient each family is expected to show: 2n, 4(n+1),
/// 4(n-1) and 4n-2 for sl_n, sp_2n, so_2n and so_2n+1.
inline Rational killing_sigma_closed_form(const AlgebraSpec& spec) {
  const long n = spec.n;
  switch (spec.family) {
    case AlgebraFamily::SL: return 2 * n;
    case AlgebraFamily::SP: return 4 * (n + 1);
    case AlgebraFamily::SO_EVEN: return 4 * (n - 1);
    case AlgebraFamily::SO_ODD: return 4 * n - 2;
  }
  throw std::invalid_argument("unknown family");
}

/// The form on weights induced by the Killing form through h -> h*,
/// f(x)(y) = kappa(x, y). Gram matrix in a-coordinates is M K^-1 M^t with
/// K the Killing Gram matrix of the Cartan basis and M_ik = a_i(h_k).
inline BilinearForm killing_inner_product(const RootDatum& rd) {
  const auto& r = rd.realization();
  const std::size_t rk = r.cartan_size();
  const auto n = static_cast<std::size_t>(r.spec().coordinate_count());
  RationalMatrix k(rk, RationalVector(rk));
  for (std::size_t a = 0; a < rk; ++a)
    for (std::size_t b = a; b < rk; ++b) k[a][b] = k[b][a] = killing_form_ad(r, r.element(a), r.element(b));
  const RationalMatrix kinv = inverse(k);
  RationalMatrix m(n, RationalVector(rk));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < rk; ++a) m[i][a] = r.element(a)(i, i);
  BilinearForm f;
  f.gram.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < rk; ++a)
        for (std::size_t b = 0; b < rk; ++b)
          if (m[i][a] != 0 && m[j][b] != 0) s += m[i][a] * kinv[a][b] * m[j][b];
      f.gram[i][j] = s;
    }
  return f;
}

/// A_ij = 2<a_i, a_j>/<a_j, a_j> = a_i(h_j) for fundamental roots a_i under
/// `inner`. With this orientation the double-edge entry of C_n sits in the
/// last row and that of B_n in the last column. Throws std::logic_error if
/// a ratio is not an integer.
inline CartanMatrix cartan_matrix(const std::vector<Weight>& fundamental, const BilinearForm& inner) {
  CartanMatrix a;
  const std::size_t n = fundamental.size();
  a.entries.assign(n, std::vector<int>(n));
  RationalVector len(n);
  for (std::size_t j = 0; j < n; ++j) {
    len[j] = inner(fundamental[j], fundamental[j]);
    if (len[j] == 0) throw std::logic_error("fundamental root of zero length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = 2 * inner(fundamental[i], fundamental[j]) / len[j];
      if (!is_integer(v))
        throw std::logic_error("non-integral Cartan integer " + v.get_str() + " at (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ")");
      a.entries[i][j] = static_cast<int>(v.get_num().get_si());
    }
  }
  return a;
}

inline CartanMatrix cartan_matrix(const RootDatum& rd) {
  return cartan_matrix(rd.fundamental_roots(), killing_inner_product(rd));
}

/// <a_i, a_i> for each fundamental root.
inline RationalVector root_lengths(const std::vector<Weight>& fundamental, const BilinearForm& inner) {
  RationalVector out;
  for (const auto& a : fundamental) out.push_back(inner(a, a));
  return out;
}

inline RationalVector root_lengths(const RootDatum& rd) {
  return root_lengths(rd.fundamental_roots(), killing_inner_product(rd));
}

/// S_a(b) = b - 2<a,b>/<a,a> a.
inline Weight reflect(const BilinearForm& inner, const Weight& a, const Weight& b) {
  const Rational aa = inner(a, a);
  if (is_zero(a) || aa == 0) throw std::invalid_argument("reflect: reflection in a zero-length vector");
  const Rational c = 2 * inner(a, b) / aa;
  return b - c * a;
}

}  // namespace liealg
