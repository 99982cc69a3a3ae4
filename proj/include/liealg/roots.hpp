#pragma once

// Root data read off the adjoint action of the diagonal Cartan subalgebra.
//
// Weights are coordinate vectors over a_1..a_n, where a_i(h) is the i-th
// diagonal entry of h. For sl_n the a_i satisfy sum a_i = 0 on the Cartan,
// and every weight is stored as its unique lift with coordinate sum zero.

#include "liealg/catalog.hpp"
#include "liealg/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

using Weight = RationalVector;

/// lambda(h) = sum_i lambda_i h_ii over the first n diagonal entries.
inline Rational evaluate(const Weight& w, const EdgeMatrix& h) {
  if (w.size() > h.dim()) throw std::invalid_argument("weight longer than matrix size");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * h(i, i);
  return s;
}

/// Positive iff the first nonzero coordinate is positive.
inline bool is_positive(const Weight& w) {
  for (const auto& x : w) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

/// The weight with prescribed values on the Cartan basis.
inline Weight weight_from_values(const AlgebraRealization& r, const RationalVector& values) {
  const auto& spec = r.spec();
  const std::size_t n = static_cast<std::size_t>(spec.coordinate_count());
  RationalMatrix a;
  RationalVector b;
  for (std::size_t k = 0; k < r.cartan_size(); ++k) {
    const EdgeMatrix& h = r.element(k);
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = h(i, i);
    a.push_back(std::move(row));
    b.push_back(values.at(k));
  }
  if (spec.family == AlgebraFamily::SL) {
    a.emplace_back(n, Rational(1));
    b.emplace_back(0);
  }
  auto w = solve(a, b);
  if (!w || rank(a) != n) throw std::logic_error("weight is not determined by its Cartan values");
  return *w;
}

/// The simultaneous eigenvalue functional of x under the Cartan action, or
/// nullopt if x is zero or not a common eigenvector.
inline std::optional<Weight> weight_of(const AlgebraRealization& r, const EdgeMatrix& x) {
  if (x.is_zero()) return std::nullopt;
  RationalVector values;
  for (std::size_t k = 0; k < r.cartan_size(); ++k) {
    auto c = proportionality(x, mat_bracket(r.element(k), x));
    if (!c) return std::nullopt;
    values.push_back(*c);
  }
  return weight_from_values(r, values);
}

/// "a1 - a2", "2*a3", "1/2*a1 + 1/2*a2".
inline std::string weight_str(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    const Rational mag = abs(w[i]);
    if (out.empty()) out += w[i] < 0 ? "-" : "";
    else out += w[i] < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

class RootDatum {
 public:
  const AlgebraSpec& spec() const { return realization_->spec(); }
  const AlgebraRealization& realization() const { return *realization_; }

  /// Roots in basis order: roots()[k] belongs to basis element cartan_size + k.
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& fundamental_roots() const { return fundamental_; }
  const std::vector<EdgeMatrix>& fundamental_coroots() const { return fundamental_coroots_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }

  bool is_root(const Weight& a) const { return root_index_.count(a) != 0; }

  std::size_t root_vector_index(const Weight& a) const {
    auto it = root_index_.find(a);
    if (it == root_index_.end()) throw std::invalid_argument(weight_str(a) + " is not a root");
    return it->second;
  }
  const EdgeMatrix& root_vector(const Weight& a) const {
    return realization_->element(root_vector_index(a));
  }

  const EdgeMatrix& coroot(const Weight& a) const {
    auto it = coroots_.find(a);
    if (it == coroots_.end()) throw std::invalid_argument(weight_str(a) + " is not a root");
    return it->second;
  }

  /// Number of a-coordinates the roots span: n - 1 for sl_n, n otherwise.
  std::size_t ambient_dimension() const { return static_cast<std::size_t>(spec().lie_rank()); }

  /// Coefficients of a weight over the fundamental roots.
  RationalVector simple_coordinates(const Weight& w) const {
    RationalMatrix a(w.size(), RationalVector(fundamental_.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < fundamental_.size(); ++j) a[i][j] = fundamental_[j][i];
    auto c = solve(a, w);
    if (!c) throw std::invalid_argument(weight_str(w) + " is outside the root span");
    return *c;
  }

  friend RootDatum cartan_decompose(std::shared_ptr<const AlgebraRealization> r);

 private:
  std::shared_ptr<const AlgebraRealization> realization_;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_;
  std::vector<Weight> fundamental_;
  std::vector<EdgeMatrix> fundamental_coroots_;
  std::vector<Weight> fundamental_weights_;
  std::map<Weight, std::size_t> root_index_;
  std::map<Weight, EdgeMatrix> coroots_;
};

/// Fundamental roots for each family: a_i - a_{i+1}, then 2a_n
/// (sp), a_{n-1} + a_n (so-even) or a_n (so-odd).
inline std::vector<Weight> family_fundamental_roots(const AlgebraSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<Weight> pi;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Weight a(n);
    a[i] = 1;
    a[i + 1] = -1;
    pi.push_back(std::move(a));
  }
  Weight last(n);
  switch (spec.family) {
    case AlgebraFamily::SL: return pi;
    case AlgebraFamily::SP: last[n - 1] = 2; break;
    case AlgebraFamily::SO_EVEN:
      last[n - 2] = 1;
      last[n - 1] = 1;
      break;
    case AlgebraFamily::SO_ODD: last[n - 1] = 1; break;
  }
  pi.push_back(std::move(last));
  return pi;
}

/// Reads Phi off the canonical basis, fixes the fundamental system,
/// normalizes coroots so that alpha(h_alpha) = 2 and solves for the
/// fundamental weights. Throws std::logic_error when the basis is not a
/// root-vector basis or a normalization degenerates.
inline RootDatum cartan_decompose(std::shared_ptr<const AlgebraRealization> r) {
  RootDatum rd;
  rd.realization_ = std::move(r);
  const AlgebraRealization& real = *rd.realization_;
  const auto& spec = real.spec();

  for (std::size_t idx = real.cartan_size(); idx < real.dimension(); ++idx) {
    auto w = weight_of(real, real.element(idx));
    if (!w)
      throw std::logic_error("basis element " + real.basis()[idx].label +
                             " is not a simultaneous eigenvector of the Cartan subalgebra");
    if (is_zero(*w))
      throw std::logic_error("basis element " + real.basis()[idx].label +
                             " commutes with the Cartan subalgebra");
    if (!rd.root_index_.emplace(*w, idx).second)
      throw std::logic_error("root " + weight_str(*w) + " has a root space of dimension > 1");
    rd.roots_.push_back(std::move(*w));
  }

  for (std::size_t k = 0; k < real.positive_count(); ++k) {
    const Weight& a = rd.roots_[k];
    if (!is_positive(a)) throw std::logic_error("basis vector for " + weight_str(a) + " is not positive");
    if (rd.roots_[real.positive_count() + k] != -a)
      throw std::logic_error("T-image of the root vector for " + weight_str(a) +
                             " does not carry the negated root");
    rd.positive_.push_back(a);
  }

  for (const Weight& a : rd.roots_) {
    const EdgeMatrix& xa = real.element(rd.root_index_.at(a));
    const EdgeMatrix& xm = real.element(rd.root_index_.at(-a));
    const EdgeMatrix b = mat_bracket(xa, xm);
    if (b.is_zero()) throw std::logic_error("[x_a, x_-a] vanishes for a = " + weight_str(a));
    const Rational ab = evaluate(a, b);
    if (ab == 0) throw std::logic_error("a([x_a, x_-a]) vanishes for a = " + weight_str(a));
    rd.coroots_.emplace(a, Rational(2 / ab) * b);
  }

  rd.fundamental_ = family_fundamental_roots(spec);
  for (const Weight& a : rd.fundamental_) {
    if (!rd.is_root(a)) throw std::logic_error("listed fundamental root " + weight_str(a) + " is not a root");
    rd.fundamental_coroots_.push_back(rd.coroots_.at(a));
  }
  for (const Weight& a : rd.positive_) {
    const auto c = rd.simple_coordinates(a);
    for (const auto& x : c)
      if (x < 0 || !is_integer(x))
        throw std::logic_error("positive root " + weight_str(a) +
                               " is not a nonnegative integer combination of fundamental roots");
  }

  // w_i(h_j) = delta_ij, plus the sum-zero normalization for sl.
  const auto n = static_cast<std::size_t>(spec.coordinate_count());
  RationalMatrix a;
  for (const auto& h : rd.fundamental_coroots_) {
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = h(i, i);
    a.push_back(std::move(row));
  }
  if (spec.family == AlgebraFamily::SL) a.emplace_back(n, Rational(1));
  if (rank(a) != n) throw std::logic_error("fundamental coroots do not determine the weights");
  for (std::size_t i = 0; i < rd.fundamental_coroots_.size(); ++i) {
    RationalVector rhs(a.size());
    rhs[i] = 1;
    auto w = solve(a, rhs);
    if (!w) throw std::logic_error("no fundamental weight solves w_i(h_j) = delta_ij");
    rd.fundamental_weights_.push_back(std::move(*w));
  }
  return rd;
}

inline RootDatum cartan_decompose(const AlgebraRealization& r) {
  return cartan_decompose(std::make_shared<const AlgebraRealization>(r));
}

inline RootDatum cartan_decompose(const AlgebraSpec& spec) {
  return cartan_decompose(std::make_shared<const AlgebraRealization>(build(spec)));
}

/// Symmetric bilinear form on weight coordinates, given by its Gram matrix.
struct BilinearForm {
  RationalMatrix gram;

  static BilinearForm standard(std::size_t n) {
    BilinearForm f;
    f.gram.assign(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) f.gram[i][i] = 1;
    return f;
  }

  std::size_t size() const { return gram.size(); }

  Rational operator()(const Weight& a, const Weight& b) const {
    if (a.size() != gram.size() || b.size() != gram.size())
      throw std::invalid_argument("bilinear form: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0 && gram[i][j] != 0) s += a[i] * gram[i][j] * b[j];
    }
    return s;
  }
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RootAxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const AxiomCheck& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no axiom check named " + name);
  }
};

/// Checks the root-system axioms for `roots` in a space of dimension
/// `ambient_dim` (defaults to the coordinate length) under `inner`:
///   euclidean    - the form is positive definite on the span of the roots
///   spanning     - the roots span the ambient space
///   negatives    - alpha in Phi implies -alpha in Phi
///   multiples    - no other multiple k*alpha (k != +-1) is a root
///   reflection   - every S_alpha maps Phi to itself
///   integrality  - 2<alpha,beta>/<alpha,alpha> is an integer
/// Failures are reported, never thrown.
inline RootAxiomReport verify_root_axioms(const std::vector<Weight>& roots, const BilinearForm& inner,
                                          std::optional<std::size_t> ambient_dim = std::nullopt) {
  RootAxiomReport report;
  if (roots.empty()) throw std::invalid_argument("verify_root_axioms: empty root list");
  const std::size_t len = roots.front().size();
  for (const auto& a : roots)
    if (a.size() != len) throw std::invalid_argument("verify_root_axioms: ragged root list");
  const std::size_t dim = ambient_dim.value_or(len);
  std::map<Weight, bool> present;
  for (const auto& a : roots) present[a] = true;

  {
    AxiomCheck c{"euclidean", true, ""};
    bool symmetric = inner.size() == len;
    for (std::size_t i = 0; symmetric && i < len; ++i)
      for (std::size_t j = 0; j < len; ++j)
        if (inner.gram[i][j] != inner.gram[j][i]) symmetric = false;
    if (!symmetric) {
      c.passed = false;
      c.detail = "form is not symmetric or has the wrong size";
    } else {
      // Gram matrix of a maximal independent subset of the roots.
      std::vector<Weight> basis;
      for (const auto& a : roots) {
        basis.push_back(a);
        if (rank(basis) < basis.size()) basis.pop_back();
      }
      RationalMatrix g(basis.size(), RationalVector(basis.size()));
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = inner(basis[i], basis[j]);
      for (const auto& m : leading_principal_minors(g))
        if (m <= 0) {
          c.passed = false;
          c.detail = "form is not positive definite on the span of the roots";
          break;
        }
    }
    report.checks.push_back(c);
  }
  const bool euclidean = report.checks.back().passed;

  {
    const std::size_t rk = rank(roots);
    AxiomCheck c{"spanning", rk == dim, ""};
    if (!c.passed) c.detail = "roots span " + std::to_string(rk) + " of " + std::to_string(dim) + " dimensions";
    report.checks.push_back(c);
  }

  {
    AxiomCheck c{"negatives", true, ""};
    for (const auto& a : roots)
      if (!present.count(-a)) {
        c.passed = false;
        c.detail = "-(" + weight_str(a) + ") is missing";
        break;
      }
    report.checks.push_back(c);
  }

  {
    AxiomCheck c{"multiples", true, ""};
    for (std::size_t i = 0; i < roots.size() && c.passed; ++i) {
      if (is_zero(roots[i])) {
        c.passed = false;
        c.detail = "zero vector in root list";
        break;
      }
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (rank({roots[i], roots[j]}) != 1) continue;
        // roots[j] = k * roots[i]; k must be +-1.
        std::size_t p = 0;
        while (roots[i][p] == 0) ++p;
        const Rational k = roots[j][p] / roots[i][p];
        if (k != 1 && k != -1) {
          c.passed = false;
          c.detail = weight_str(roots[j]) + " is " + k.get_str() + " times " + weight_str(roots[i]);
          break;
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    AxiomCheck refl{"reflection", true, ""};
    AxiomCheck integ{"integrality", true, ""};
    for (const auto& a : roots) {
      const Rational aa = inner(a, a);
      if (aa <= 0 || !euclidean) {
        refl.passed = integ.passed = false;
        refl.detail = integ.detail = "<a,a> is not positive for a = " + weight_str(a);
        break;
      }
      for (const auto& b : roots) {
        const Rational cartan_int = 2 * inner(a, b) / aa;
        if (integ.passed && !is_integer(cartan_int)) {
          integ.passed = false;
          integ.detail = "2<a,b>/<a,a> = " + cartan_int.get_str() + " for a = " + weight_str(a) +
                         ", b = " + weight_str(b);
        }
        if (refl.passed && !present.count(b - cartan_int * a)) {
          refl.passed = false;
          refl.detail = "S_(" + weight_str(a) + ") maps " + weight_str(b) + " outside Phi";
        }
      }
    }
    report.checks.push_back(refl);
    report.checks.push_back(integ);
  }
  return report;
}

/// Checks [x_a, x_-a] = h_a, [h_a, x_a] = 2x_a, [h_a, x_-a] = -2x_-a and
/// a(h_a) = 2, with x_-a rescaled so that the first relation can hold.
inline bool verify_sl2_triple(const RootDatum& rd, const Weight& a) {
  if (!rd.is_root(a)) throw std::invalid_argument(weight_str(a) + " is not a root");
  const EdgeMatrix& h = rd.coroot(a);
  const EdgeMatrix& x = rd.root_vector(a);
  const EdgeMatrix& y0 = rd.root_vector(-a);
  const auto c = proportionality(mat_bracket(x, y0), h);
  if (!c || *c == 0) return false;
  const EdgeMatrix y = Rational(*c) * y0;
  return mat_bracket(x, y) == h && mat_bracket(h, x) == Rational(2) * x &&
         mat_bracket(h, y) == Rational(-2) * y && evaluate(a, h) == 2;
}

}  // namespace liealg
