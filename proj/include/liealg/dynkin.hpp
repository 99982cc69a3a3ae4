#pragma once

// Dynkin diagrams from Cartan matrices: construction, the positive-definite
// test, classification of connected diagrams, ASCII rendering and the Serre
// presentation with its check inside a matrix realization.

#include "liealg/digraph.hpp"
#include "liealg/forms.hpp"
#include "liealg/linalg.hpp"
#include "liealg/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

struct DynkinDiagram {
  std::size_t nvertices = 0;
  std::vector<std::vector<int>> multiplicity;
  /// (longer, shorter) for every edge of multiplicity 2 or 3.
  std::vector<std::pair<std::size_t, std::size_t>> arrows;

  /// The vertex the arrow between i and j points toward, if any.
  std::optional<std::size_t> arrow_target(std::size_t i, std::size_t j) const {
    for (const auto& [from, to] : arrows)
      if ((from == i && to == j) || (from == j && to == i)) return to;
    return std::nullopt;
  }

  std::vector<std::size_t> neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < nvertices; ++u)
      if (multiplicity[v][u] > 0) out.push_back(u);
    return out;
  }

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

/// n_ij = A_ij A_ji edges; arrows point toward the strictly shorter root.
inline DynkinDiagram build_diagram(const CartanMatrix& a, const RationalVector& lengths) {
  if (const auto p = a.problems(); !p.empty()) throw std::invalid_argument("invalid Cartan matrix: " + p.front());
  const std::size_t n = a.rank();
  if (lengths.size() != n) throw std::invalid_argument("build_diagram: one length per vertex required");
  DynkinDiagram d;
  d.nvertices = n;
  d.multiplicity.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = a(i, j) * a(j, i);
      if (m > 3)
        throw std::invalid_argument("A_ij A_ji = " + std::to_string(m) + " between vertices " +
                                    std::to_string(i + 1) + " and " + std::to_string(j + 1));
      d.multiplicity[i][j] = d.multiplicity[j][i] = m;
      if (m < 2) continue;
      if (lengths[i] == lengths[j])
        throw std::invalid_argument("multiple edge between roots of equal length at vertices " +
                                    std::to_string(i + 1) + " and " + std::to_string(j + 1));
      d.arrows.emplace_back(lengths[i] > lengths[j] ? std::pair{i, j} : std::pair{j, i});
    }
  return d;
}

/// Positive d with A_ij d_j = A_ji d_i, normalized so the smallest entry of
/// each connected component is 1; nullopt if A is not symmetrizable.
inline std::optional<RationalVector> symmetrizing_lengths(const CartanMatrix& a) {
  const std::size_t n = a.rank();
  RationalVector d(n);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    d[root] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const std::size_t i = comp[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        if (a(j, i) == 0) return std::nullopt;
        Rational ratio(a(j, i), a(i, j));
        ratio.canonicalize();
        const Rational dj = d[i] * ratio;
        if (dj <= 0) return std::nullopt;
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Rational lo = d[comp.front()];
    for (auto v : comp) lo = std::min(lo, d[v]);
    for (auto v : comp) d[v] /= lo;
  }
  return d;
}

/// Decides positive definiteness of the diagram's quadratic form through the
/// rational symmetrized matrix A_ij d_j, which is congruent to it by a
/// positive diagonal scaling.
inline bool check_positive_definite(const DynkinDiagram& d, const CartanMatrix& a, const RationalVector& lengths) {
  const std::size_t n = a.rank();
  if (d.nvertices != n || lengths.size() != n) return false;
  for (const auto& l : lengths)
    if (l <= 0) return false;
  RationalMatrix b(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d.multiplicity[i][j] != a(i, j) * a(j, i)) return false;
      b[i][j] = a(i, j) * lengths[j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (b[i][j] != b[j][i]) return false;
  for (const auto& m : leading_principal_minors(b))
    if (m <= 0) return false;
  return true;
}

struct ComponentType {
  std::string name;  // "A_3", "E_8", or "NotSimple"
  std::string reason;
  std::vector<std::size_t> vertices;

  bool simple() const { return name != "NotSimple"; }
};

struct Classification {
  std::vector<ComponentType> components;

  bool all_simple() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.simple(); });
  }

  /// "A_2", "A_1 + A_1", or "NotSimple: <reason>".
  std::string str() const {
    for (const auto& c : components)
      if (!c.simple()) return "NotSimple: " + c.reason;
    std::string out;
    for (const auto& c : components) out += (out.empty() ? "" : " + ") + c.name;
    return out;
  }
};

inline std::vector<std::vector<std::size_t>> connected_components(const DynkinDiagram& d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(d.nvertices, false);
  for (std::size_t s = 0; s < d.nvertices; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto u : d.neighbours(comp[k]))
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace detail {

inline std::string type_name(char letter, std::size_t rank) { return std::string(1, letter) + "_" + std::to_string(rank); }

// Vertices of a path component in order, starting from an end point.
inline std::vector<std::size_t> path_order(const DynkinDiagram& d, const std::vector<std::size_t>& comp) {
  std::size_t start = comp.front();
  for (auto v : comp)
    if (d.neighbours(v).size() == 1) {
      start = v;
      break;
    }
  std::vector<std::size_t> order{start};
  std::size_t prev = comp.size() + d.nvertices;
  while (order.size() < comp.size()) {
    const std::size_t cur = order.back();
    for (auto u : d.neighbours(cur))
      if (u != prev) {
        prev = cur;
        order.push_back(u);
        break;
      }
  }
  return order;
}

inline ComponentType classify_component(const DynkinDiagram& d, std::vector<std::size_t> comp) {
  ComponentType t{"NotSimple", "", comp};
  const std::size_t m = comp.size();
  std::size_t edges = 0, doubles = 0, triples = 0, max_degree = 0;
  std::vector<std::size_t> branch_points;
  for (auto v : comp) {
    const auto nb = d.neighbours(v);
    max_degree = std::max(max_degree, nb.size());
    if (nb.size() == 3) branch_points.push_back(v);
    for (auto u : nb)
      if (u > v) {
        ++edges;
        if (d.multiplicity[v][u] == 2) ++doubles;
        if (d.multiplicity[v][u] == 3) ++triples;
      }
  }
  auto fail = [&](std::string why) {
    t.reason = std::move(why);
    return t;
  };
  if (edges != m - 1) return fail("diagram contains a cycle");
  if (m == 1) {
    t.name = "A_1";
    return t;
  }
  if (max_degree > 3) return fail("vertex of degree " + std::to_string(max_degree));
  if (triples > 0) {
    if (m == 2) {
      t.name = "G_2";
      return t;
    }
    return fail("triple edge in a diagram with more than two vertices");
  }
  if (doubles > 1) return fail("more than one multiple edge");
  if (doubles == 1) {
    if (max_degree > 2) return fail("branch point together with a double edge");
    const auto order = path_order(d, comp);
    std::size_t pos = 0;  // the double edge joins order[pos] and order[pos + 1]
    while (d.multiplicity[order[pos]][order[pos + 1]] != 2) ++pos;
    const std::size_t target = *d.arrow_target(order[pos], order[pos + 1]);
    if (m == 2) {
      // B_2 and C_2 coincide; the arrow toward the higher index reads as B_2.
      t.name = type_name(target == std::max(order[0], order[1]) ? 'B' : 'C', 2);
      return t;
    }
    if (pos == 0 || pos + 2 == m) {
      const std::size_t end = pos == 0 ? order[0] : order[m - 1];
      t.name = type_name(target == end ? 'B' : 'C', m);
      return t;
    }
    if (m == 4) {
      t.name = "F_4";
      return t;
    }
    return fail("double edge in the interior of a chain longer than four");
  }
  if (branch_points.empty()) {
    t.name = type_name('A', m);
    return t;
  }
  if (branch_points.size() > 1) return fail("more than one branch point");
  const std::size_t centre = branch_points.front();
  std::vector<std::size_t> arms;
  for (auto start : d.neighbours(centre)) {
    std::size_t len = 1, prev = centre, cur = start;
    for (;;) {
      std::size_t next = cur;
      for (auto u : d.neighbours(cur))
        if (u != prev) next = u;
      if (next == cur) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    t.name = type_name('D', m);
    return t;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
    t.name = type_name('E', m);
    return t;
  }
  return fail("branch arms of lengths " + std::to_string(arms[0]) + ", " + std::to_string(arms[1]) + ", " +
              std::to_string(arms[2]));
}

}  // namespace detail

/// Pattern-matches each connected component against the simple list.
inline Classification classify(const DynkinDiagram& d) {
  Classification c;
  for (auto& comp : connected_components(d)) c.components.push_back(detail::classify_component(d, std::move(comp)));
  return c;
}

/// One-line rendering when every component is a chain through consecutive
/// vertex indices, e.g. "o-o-o=>o" or "o o"; a fork hanging below vertex k
/// when the last vertex attaches to k off the chain 1..n-1:
///
///   o-o-o
///       |
///       o
///
/// Anything else falls back to an edge list such as "1-2, 2=>3, 2-4".
/// Arrows point toward the shorter root.
inline std::string render(const DynkinDiagram& d, bool unicode = false) {
  const std::string simple = unicode ? "−" : "-";
  const std::string right = unicode ? "⇒" : "=>";
  const std::string left = unicode ? "⇐" : "<=";
  const std::string triple_right = unicode ? "≡>" : "=>>";
  const std::string triple_left = unicode ? "<≡" : "<<=";
  const std::size_t n = d.nvertices;
  if (n == 0) return "";

  auto bond = [&](std::size_t i, std::size_t j) -> std::string {
    switch (d.multiplicity[i][j]) {
      case 1: return simple;
      case 2: return d.arrow_target(i, j) == j ? right : left;
      case 3: return d.arrow_target(i, j) == j ? triple_right : triple_left;
    }
    return " ";
  };
  auto consecutive_chain = [&](std::size_t last) {
    // True iff the edges among vertices 0..last are exactly chain links i, i+1
    // or absent, with no edge leaving that range.
    for (std::size_t i = 0; i <= last; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (d.multiplicity[i][j] > 0 && (j != i + 1 || j > last)) return false;
    return true;
  };

  if (consecutive_chain(n - 1)) {
    std::string out = "o";
    for (std::size_t i = 0; i + 1 < n; ++i) out += bond(i, i + 1) + "o";
    return out;
  }
  if (n >= 3) {
    const auto nb = d.neighbours(n - 1);
    bool chain_rest = true;
    for (std::size_t i = 0; i + 1 < n - 1; ++i)
      if (d.multiplicity[i][i + 1] == 0) chain_rest = false;
    for (std::size_t i = 0; i < n - 1 && chain_rest; ++i)
      for (std::size_t j = i + 2; j < n - 1; ++j)
        if (d.multiplicity[i][j] > 0) chain_rest = false;
    if (chain_rest && nb.size() == 1 && d.multiplicity[nb[0]][n - 1] == 1) {
      std::string top = "o";
      for (std::size_t i = 0; i + 2 < n; ++i) top += bond(i, i + 1) + "o";
      // Column of the branch vertex, counting code points rather than bytes.
      auto width = [](const std::string& s) {
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
          return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
        }));
      };
      std::size_t col = 0;
      for (std::size_t i = 0; i < nb[0]; ++i) col += 1 + width(bond(i, i + 1));
      return top + "\n" + std::string(col, ' ') + "|\n" + std::string(col, ' ') + "o";
    }
  }
  std::string out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.multiplicity[i][j] == 0) continue;
      if (!out.empty()) out += ", ";
      out += std::to_string(i + 1) + bond(i, j) + std::to_string(j + 1);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Serre presentation

enum class SerreKind { CartanCommute, XYDiagonal, XYOffDiagonal, HX, HY, NilpotentX, NilpotentY };

/// One relation in generators H_i, X_i, Y_i (zero-based i, j). For HX/HY the
/// value is the eigenvalue X_j picks up under H_i; for the nilpotency
/// relations it is the number of ad X_i (or ad Y_i) applications.
struct SerreRelation {
  SerreKind kind;
  std::size_t i;
  std::size_t j;
  int value = 0;

  std::string str() const {
    const std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
    auto scaled = [&](const std::string& g) {
      if (value == 0) return std::string("0");
      if (value == 1) return g;
      if (value == -1) return "-" + g;
      return std::to_string(value) + g;
    };
    auto nested = [&](const char* g) {
      std::string inner = std::string(g) + sj;
      for (int k = 0; k < value; ++k) inner = "[" + std::string(g) + si + "," + inner + "]";
      return inner + " = 0";
    };
    switch (kind) {
      case SerreKind::CartanCommute: return "[H" + si + ",H" + sj + "] = 0";
      case SerreKind::XYDiagonal: return "[X" + si + ",Y" + si + "] = H" + si;
      case SerreKind::XYOffDiagonal: return "[X" + si + ",Y" + sj + "] = 0";
      case SerreKind::HX: return "[H" + si + ",X" + sj + "] = " + scaled("X" + sj);
      case SerreKind::HY: return "[H" + si + ",Y" + sj + "] = " + scaled("Y" + sj);
      case SerreKind::NilpotentX: return nested("X");
      case SerreKind::NilpotentY: return nested("Y");
    }
    return "";
  }
};

struct SerrePresentation {
  std::size_t rank = 0;
  CartanMatrix cartan;
  std::vector<SerreRelation> relations;

  std::string str() const {
    std::string out;
    for (const auto& r : relations) out += r.str() + "\n";
    return out;
  }
};

/// With A_ij = a_i(h_j), X_j has eigenvalue A_ji under H_i and the
/// nilpotency depth of ad X_i on X_j is 1 - A_ji.
inline SerrePresentation serre_presentation(const CartanMatrix& a) {
  if (a.rank() == 0) throw std::invalid_argument("serre_presentation: empty Cartan matrix");
  for (const auto& row : a.entries)
    if (row.size() != a.rank()) throw std::invalid_argument("serre_presentation: matrix is not square");
  SerrePresentation p;
  p.rank = a.rank();
  p.cartan = a;
  const std::size_t n = p.rank;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.relations.push_back({SerreKind::CartanCommute, i, j, 0});
  for (std::size_t i = 0; i < n; ++i) p.relations.push_back({SerreKind::XYDiagonal, i, i, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) p.relations.push_back({SerreKind::XYOffDiagonal, i, j, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.relations.push_back({SerreKind::HX, i, j, a(j, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.relations.push_back({SerreKind::HY, i, j, -a(j, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        // Entries outside {0,-1,-2,-3} only occur in corrupted matrices; keep
        // at least one bracket so the relation stays meaningful.
        const int depth = std::max(1, 1 - a(j, i));
        p.relations.push_back({SerreKind::NilpotentX, i, j, depth});
        p.relations.push_back({SerreKind::NilpotentY, i, j, depth});
      }
  return p;
}

struct SerreCheck {
  SerreRelation relation;
  bool passed = false;
};

struct SerreReport {
  std::vector<SerreCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
  }
};

/// Chevalley generators of the realization: H_i = h_{a_i}, X_i = x_{a_i} and
/// Y_i = c T(x_{a_i}) with c fixed by [X_i, Y_i] = H_i.
struct ChevalleyGenerators {
  std::vector<EdgeMatrix> h, x, y;
};

inline ChevalleyGenerators chevalley_generators(const RootDatum& rd) {
  ChevalleyGenerators g;
  const auto& pi = rd.fundamental_roots();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const EdgeMatrix& h = rd.fundamental_coroots()[i];
    const EdgeMatrix& x = rd.root_vector(pi[i]);
    const EdgeMatrix t = opposite_antimorphism(x, rd.spec());
    const EdgeMatrix b = mat_bracket(x, t);
    if (b.is_zero()) throw std::logic_error("[X, T(X)] vanishes for " + weight_str(pi[i]));
    const auto c = proportionality(b, h);
    if (!c || *c == 0) throw std::logic_error("[X, T(X)] is not a multiple of the coroot of " + weight_str(pi[i]));
    g.h.push_back(h);
    g.x.push_back(x);
    g.y.push_back(Rational(*c) * t);
  }
  return g;
}

inline SerreReport verify_serre(const AlgebraRealization& r, const RootDatum& rd, const SerrePresentation& p) {
  if (r.spec() != rd.spec()) throw std::invalid_argument("verify_serre: realization and root datum disagree");
  if (p.rank != rd.fundamental_roots().size())
    throw std::invalid_argument("verify_serre: presentation rank differs from the root datum");
  const auto g = chevalley_generators(rd);
  const auto dim = static_cast<std::size_t>(r.spec().realization_dim());
  SerreReport report;
  for (const auto& rel : p.relations) {
    const std::size_t i = rel.i, j = rel.j;
    EdgeMatrix lhs(dim), rhs(dim);
    switch (rel.kind) {
      case SerreKind::CartanCommute: lhs = mat_bracket(g.h[i], g.h[j]); break;
      case SerreKind::XYDiagonal:
        lhs = mat_bracket(g.x[i], g.y[i]);
        rhs = g.h[i];
        break;
      case SerreKind::XYOffDiagonal: lhs = mat_bracket(g.x[i], g.y[j]); break;
      case SerreKind::HX:
        lhs = mat_bracket(g.h[i], g.x[j]);
        rhs = Rational(rel.value) * g.x[j];
        break;
      case SerreKind::HY:
        lhs = mat_bracket(g.h[i], g.y[j]);
        rhs = Rational(rel.value) * g.y[j];
        break;
      case SerreKind::NilpotentX:
      case SerreKind::NilpotentY: {
        const auto& gen = rel.kind == SerreKind::NilpotentX ? g.x : g.y;
        lhs = gen[j];
        for (int k = 0; k < rel.value; ++k) lhs = mat_bracket(gen[i], lhs);
        break;
      }
    }
    report.checks.push_back({rel, lhs == rhs});
  }
  return report;
}

inline SerreReport verify_serre(const RootDatum& rd) {
  return verify_serre(rd.realization(), rd, serre_presentation(cartan_matrix(rd)));
}

}  // namespace liealg
