#pragma once

// Weyl groups of the classical families as groups of signed permutations,
// generated from the simple reflections by breadth-first closure.

#include "liealg/rational.hpp"
#include "liealg/roots.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace liealg {

/// The pair (a, pi) acting by ((a, pi) x)_i = a_i x_{pi^-1(i)}.
/// perm[i] = pi(i) and signs[i] = a_i, zero-based.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  SignedPermutation(std::vector<int> perm, std::vector<int> signs)
      : perm_(std::move(perm)), signs_(std::move(signs)) {
    const std::size_t n = perm_.size();
    if (signs_.size() != n) throw std::invalid_argument("sign vector length mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm_) {
      if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }

  static SignedPermutation identity(std::size_t n) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return {std::move(p), std::vector<int>(n, 1)};
  }

  /// Transposition of the zero-based indices i and j.
  static SignedPermutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    auto g = identity(n);
    std::swap(g.perm_.at(i), g.perm_.at(j));
    return g;
  }

  static SignedPermutation sign_flip(std::size_t n, std::size_t i) {
    auto g = identity(n);
    g.signs_.at(i) = -1;
    return g;
  }

  std::size_t size() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  int sign_product() const {
    int s = 1;
    for (int x : signs_) s *= x;
    return s;
  }

  bool is_identity() const { return *this == identity(size()); }

  SignedPermutation inverse() const {
    const std::size_t n = size();
    std::vector<int> p(n), s(n);
    // g^-1 = (pi^-1(a), pi^-1) with (pi^-1 a)_i = a_{pi(i)}.
    for (std::size_t i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
      s[i] = signs_[static_cast<std::size_t>(perm_[i])];
    }
    return {std::move(p), std::move(s)};
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += " ";
      out += (signs_[i] < 0 ? "-" : "") + std::to_string(perm_[i] + 1);
    }
    return out + "]";
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// (a, pi)(b, sigma) = (a . pi(b), pi o sigma) with (pi b)_i = b_{pi^-1(i)}.
inline SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("compose: size mismatch");
  const std::size_t n = g.size();
  std::vector<int> p(n), s(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto hj = static_cast<std::size_t>(h.perm()[j]);
    p[j] = g.perm()[hj];
  }
  // (pi b)_{pi(j)} = b_j
  for (std::size_t j = 0; j < n; ++j) {
    const auto gj = static_cast<std::size_t>(g.perm()[j]);
    s[gj] = g.signs()[gj] * h.signs()[j];
  }
  return {std::move(p), std::move(s)};
}

inline SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
  return compose(g, h);
}

inline RationalVector apply(const SignedPermutation& g, const RationalVector& x) {
  if (g.size() != x.size()) throw std::invalid_argument("apply: length mismatch");
  RationalVector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto i = static_cast<std::size_t>(g.perm()[j]);
    out[i] = g.signs()[i] < 0 ? Rational(-x[j]) : x[j];
  }
  return out;
}

/// Smallest k >= 1 with g^k = 1.
inline std::size_t order(const SignedPermutation& g) {
  auto p = g;
  std::size_t k = 1;
  while (!p.is_identity()) {
    p = compose(p, g);
    ++k;
  }
  return k;
}

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto v = static_cast<std::size_t>(g.perm()[i] * 2 + (g.signs()[i] < 0 ? 1 : 0));
      h = (h ^ v) * 1099511628211ull;
    }
    return h;
  }
};

/// Simple reflection S_a as the linear map x -> x - a(x) c on coordinate
/// space, where c is the diagonal of h_a; recognized as a signed
/// permutation from the images of the unit vectors.
inline SignedPermutation reflection_as_signed_permutation(const Weight& a, const EdgeMatrix& coroot) {
  const std::size_t n = a.size();
  RationalVector c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = coroot(i, i);
  std::vector<int> perm(n, -1), signs(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector e(n);
    e[k] = 1;
    const RationalVector image = e - dot(a, e) * c;
    std::size_t target = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i] == 0) continue;
      if (target != n || (image[i] != 1 && image[i] != -1))
        throw std::logic_error("reflection in " + weight_str(a) + " is not a signed permutation");
      target = i;
    }
    if (target == n) throw std::logic_error("reflection in " + weight_str(a) + " is singular");
    perm[k] = static_cast<int>(target);
    signs[target] = image[target] > 0 ? 1 : -1;
  }
  return {std::move(perm), std::move(signs)};
}

inline std::vector<SignedPermutation> simple_reflections(const RootDatum& rd) {
  std::vector<SignedPermutation> gens;
  const auto& pi = rd.fundamental_roots();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    auto g = reflection_as_signed_permutation(pi[i], rd.fundamental_coroots()[i]);
    if (rd.spec().family == AlgebraFamily::SL && g.sign_product() != 1)
      throw std::logic_error("sl reflection with a sign change");
    gens.push_back(std::move(g));
  }
  return gens;
}

class WeylOverflow : public std::length_error {
 public:
  explicit WeylOverflow(std::size_t cap)
      : std::length_error("group order exceeds the cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultWeylCap = 100000;

/// Breadth-first closure of the generators under composition. Throws
/// WeylOverflow as soon as more than `cap` elements are found.
inline std::set<SignedPermutation> generate(const std::vector<SignedPermutation>& gens,
                                            std::size_t cap = kDefaultWeylCap) {
  if (cap == 0) throw std::invalid_argument("generate: cap must be positive");
  if (gens.empty()) throw std::invalid_argument("generate: no generators");
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n) throw std::invalid_argument("generate: generators act on different sizes");

  std::unordered_set<SignedPermutation, SignedPermutationHash> seen;
  std::deque<SignedPermutation> frontier;
  const auto e = SignedPermutation::identity(n);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    const SignedPermutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      SignedPermutation h = compose(s, g);
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw WeylOverflow(cap);
        frontier.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// Coxeter exponent m_ij for n_ij = 0, 1, 2, 3.
inline std::size_t coxeter_exponent(int nij) {
  switch (nij) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::invalid_argument("n_ij outside {0,1,2,3}");
}

}  // namespace liealg
