#pragma once

// Single-edge digraphs on n vertices and the opposite-graph antimorphism T.
// Vertices are 1-indexed.

#include "liealg/family.hpp"
#include "liealg/matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

struct Edge {
  int source;
  int target;
  int dim;

  Edge(int from, int to, int n) : source(from), target(to), dim(n) {
    if (n < 1 || from < 1 || from > n || to < 1 || to > n)
      throw std::out_of_range("edge " + std::to_string(from) + "->" + std::to_string(to) +
                              " outside 1.." + std::to_string(n));
  }
};

inline EdgeMatrix edge_to_matrix(const Edge& e) {
  return EdgeMatrix::unit(static_cast<std::size_t>(e.dim), static_cast<std::size_t>(e.source - 1),
                          static_cast<std::size_t>(e.target - 1));
}

/// Shorthand for the elementary matrix of the edge i -> j (1-indexed).
inline EdgeMatrix edge(int i, int j, int dim) { return edge_to_matrix(Edge(i, j, dim)); }

/// Per-vertex signs d with T(x) = D x^t D, D = diag(d).
///
/// sl: no signs. sp and so-even: the second block of n vertices carries -1,
/// so edges crossing between the blocks change sign. so-odd: only the border
/// vertex 2n+1 carries -1; a block sign there would not preserve the
/// defining relation X^t S + S X = 0.
inline std::vector<int> antimorphism_signs(const AlgebraSpec& spec) {
  const int dim = spec.realization_dim();
  std::vector<int> d(static_cast<std::size_t>(dim), 1);
  switch (spec.family) {
    case AlgebraFamily::SL: break;
    case AlgebraFamily::SP:
    case AlgebraFamily::SO_EVEN:
      for (int i = spec.n; i < 2 * spec.n; ++i) d[static_cast<std::size_t>(i)] = -1;
      break;
    case AlgebraFamily::SO_ODD: d.back() = -1; break;
  }
  return d;
}

/// T: sends every edge i -> j to its opposite j -> i, with the family's sign
/// rule. T(ab) = T(b)T(a), T(T(x)) = x, and T maps each root space of the
/// canonical Cartan subalgebra onto the root space of the negated root.
inline EdgeMatrix opposite_antimorphism(const EdgeMatrix& x, const AlgebraSpec& spec) {
  const auto dim = static_cast<std::size_t>(spec.realization_dim());
  if (x.dim() != dim)
    throw std::invalid_argument("opposite_antimorphism: matrix of size " + std::to_string(x.dim()) +
                                " does not realize " + spec.name());
  const auto d = antimorphism_signs(spec);
  EdgeMatrix t(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational& v = x(j, i);
      if (v != 0) t(i, j) = d[i] * d[j] > 0 ? v : Rational(-v);
    }
  return t;
}

}  // namespace liealg
