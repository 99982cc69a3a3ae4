// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "liealg_cli.hpp"
#include "oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace liealg;

namespace {

const std::vector<AlgebraFamily> kFamilies{AlgebraFamily::SL, AlgebraFamily::SP, AlgebraFamily::SO_EVEN,
                                           AlgebraFamily::SO_ODD};

// Lie rank r -> family index n.
AlgebraSpec at_rank(AlgebraFamily f, int r) { return AlgebraSpec(f, f == AlgebraFamily::SL ? r + 1 : r); }
int min_rank(AlgebraFamily f) { return f == AlgebraFamily::SO_EVEN ? 2 : 1; }

char letter(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::SL: return 'A';
    case AlgebraFamily::SP: return 'C';
    case AlgebraFamily::SO_EVEN: return 'D';
    case AlgebraFamily::SO_ODD: return 'B';
  }
  return '?';
}

// Collects the first few failure messages of a criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::uint64_t weyl_closed_form(AlgebraFamily f, std::uint64_t r) {
  const std::uint64_t fact = oracle::factorial(r);
  switch (f) {
    case AlgebraFamily::SL: return oracle::factorial(r + 1);
    case AlgebraFamily::SP:
    case AlgebraFamily::SO_ODD: return (std::uint64_t{1} << r) * fact;
    case AlgebraFamily::SO_EVEN: return (std::uint64_t{1} << (r - 1)) * fact;
  }
  return 0;
}

void dimensions(Criterion& c) {
  for (auto f : kFamilies) {
    // sl is covered both as n = 2..8 and as Lie rank 1..8.
    const int lo = f == AlgebraFamily::SL || f == AlgebraFamily::SO_EVEN ? 2 : 1;
    const int hi = f == AlgebraFamily::SL ? 9 : 8;
    for (int n = lo; n <= hi; ++n) {
      const AlgebraSpec spec(f, n);
      const auto r = build(spec);
      const std::size_t m = static_cast<std::size_t>(n);
      std::size_t formula = 0;
      switch (f) {
        case AlgebraFamily::SL: formula = m * m - 1; break;
        case AlgebraFamily::SP:
        case AlgebraFamily::SO_ODD: formula = m * (2 * m + 1); break;
        case AlgebraFamily::SO_EVEN: formula = m * (2 * m - 1); break;
      }
      RationalMatrix flat;
      for (const auto& b : r.basis()) flat.push_back(b.matrix.flat());
      c.require(r.dimension() == formula, spec.name() + " dimension " + std::to_string(r.dimension()));
      c.require(oracle::row_rank(flat) == formula, spec.name() + " basis not independent");
      c.require(oracle::solution_space_dimension(spec) == formula, spec.name() + " oracle dimension differs");
    }
  }
}

void root_systems(Criterion& c) {
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 4; ++r) {
      const auto spec = at_rank(f, r);
      const auto rd = cartan_decompose(spec);
      const std::set<Weight> got(rd.roots().begin(), rd.roots().end());
      c.require(got.size() == rd.roots().size(), spec.name() + " repeated roots");
      c.require(got == oracle::expected_roots(spec), spec.name() + " root set differs from the expected set");
      const auto report = verify_root_axioms(rd.roots(), killing_inner_product(rd), rd.ambient_dimension());
      for (const auto& ax : report.checks) c.require(ax.passed, spec.name() + " axiom " + ax.name);
    }
}

void killing(Criterion& c) {
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 6; ++r) {
      const auto spec = at_rank(f, r);
      const auto rd = cartan_decompose(spec);
      const long n = spec.n;
      Rational expected = 0;
      switch (f) {
        case AlgebraFamily::SL: expected = 2 * n; break;
        case AlgebraFamily::SP: expected = 4 * (n + 1); break;
        case AlgebraFamily::SO_EVEN: expected = 4 * (n - 1); break;
        case AlgebraFamily::SO_ODD: expected = 4 * n - 2; break;
      }
      const auto kc = killing_constants(rd);
      c.require(kc.sigma_coefficient == std::optional<Rational>(expected),
                spec.name() + " sigma coefficient " +
                    (kc.sigma_coefficient ? kc.sigma_coefficient->get_str() : std::string("none")));
      const auto& alg = rd.realization();
      for (std::size_t i = 0; i < alg.cartan_size(); ++i)
        for (std::size_t j = i; j < alg.cartan_size(); ++j)
          c.require(killing_form_ad(alg, alg.element(i), alg.element(j)) ==
                        killing_form_roots(rd, alg.element(i), alg.element(j)),
                    spec.name() + " ad and root routes differ");
    }
}

void sl2_triples(Criterion& c) {
  std::size_t count = 0;
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 4; ++r) {
      const auto rd = cartan_decompose(at_rank(f, r));
      for (const auto& a : rd.roots()) {
        c.require(verify_sl2_triple(rd, a), rd.spec().name() + " " + weight_str(a));
        c.require(evaluate(a, rd.coroot(a)) == 2, rd.spec().name() + " a(h_a) != 2 for " + weight_str(a));
        ++count;
      }
    }
  c.note = std::to_string(count) + " roots";
}

void cartan_matrices(Criterion& c) {
  for (auto f : kFamilies)
    for (int r = 2; r <= 8; ++r) {
      const auto rd = cartan_decompose(at_rank(f, r));
      c.require(cartan_matrix(rd).entries == oracle::standard_cartan(letter(f), static_cast<std::size_t>(r)),
                rd.spec().name());
    }
}

void weyl_groups(Criterion& c) {
  const std::map<AlgebraFamily, int> top{
      {AlgebraFamily::SL, 7}, {AlgebraFamily::SP, 6}, {AlgebraFamily::SO_ODD, 6}, {AlgebraFamily::SO_EVEN, 6}};
  std::map<std::pair<AlgebraFamily, int>, std::set<SignedPermutation>> groups;
  for (const auto& [f, hi] : top)
    for (int r = min_rank(f); r <= hi; ++r) {
      const auto spec = at_rank(f, r);
      const auto rd = cartan_decompose(spec);
      const auto w = generate(simple_reflections(rd), 50000);
      const auto expected = weyl_closed_form(f, static_cast<std::uint64_t>(r));
      c.require(expected <= 50000, spec.name() + " beyond the enumeration bound");
      c.require(w.size() == expected, spec.name() + " |W| = " + std::to_string(w.size()));
      const std::set<Weight> roots(rd.roots().begin(), rd.roots().end());
      for (const auto& g : w) {
        bool ok = true;
        for (const auto& a : rd.roots()) ok = ok && roots.count(liealg::apply(g, a)) > 0;
        if (!ok) {
          c.require(false, spec.name() + " " + g.str() + " does not permute the roots");
          break;
        }
      }
      if (f == AlgebraFamily::SP || f == AlgebraFamily::SO_ODD) groups[{f, r}] = w;
    }
  for (int r = 1; r <= 6; ++r)
    c.require(groups[{AlgebraFamily::SP, r}] == groups[{AlgebraFamily::SO_ODD, r}],
              "B_" + std::to_string(r) + " and C_" + std::to_string(r) + " differ");
}

struct Diagram {
  CartanMatrix a;
  RationalVector lengths;
  DynkinDiagram d;
};

Diagram diagram_of(const CartanMatrix& a) {
  const auto lengths = symmetrizing_lengths(a);
  if (!lengths) throw std::invalid_argument("not symmetrizable");
  return {a, *lengths, build_diagram(a, *lengths)};
}

void dynkin(Criterion& c) {
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 8; ++r) {
      const auto spec = at_rank(f, r);
      const auto rd = cartan_decompose(spec);
      const auto dg = diagram_of(cartan_matrix(rd));
      std::string expected = std::string(1, letter(f)) + "_" + std::to_string(r);
      if (r == 1) expected = "A_1";
      if (f == AlgebraFamily::SO_EVEN && r == 2) expected = "A_1 + A_1";
      if (f == AlgebraFamily::SO_EVEN && r == 3) expected = "A_3";
      const auto name = classify(dg.d).str();
      c.require(name == expected, spec.name() + " classified as " + name);
      c.require(check_positive_definite(dg.d, dg.a, dg.lengths), spec.name() + " not positive definite");
    }
  for (int r = 2; r <= 8; ++r) {
    const auto b = diagram_of(cartan_matrix(cartan_decompose(AlgebraSpec(AlgebraFamily::SO_ODD, r)))).d;
    const auto cc = diagram_of(cartan_matrix(cartan_decompose(AlgebraSpec(AlgebraFamily::SP, r)))).d;
    c.require(b.multiplicity == cc.multiplicity, "B/C multiplicities differ at rank " + std::to_string(r));
    const auto rev = [](std::vector<std::pair<std::size_t, std::size_t>> v) {
      for (auto& [x, y] : v) std::swap(x, y);
      return v;
    };
    c.require(b.arrows.size() == 1 && rev(b.arrows) == cc.arrows,
              "B/C arrows not opposite at rank " + std::to_string(r));
  }
  // Affine controls: the triangle, a chain with two double bonds, and the
  // star with four leaves.
  std::vector<std::vector<int>> star(5, std::vector<int>(5, 0));
  for (std::size_t i = 0; i < 5; ++i) star[i][i] = 2;
  for (std::size_t i = 1; i < 5; ++i) star[0][i] = star[i][0] = -1;
  const std::vector<CartanMatrix> controls{CartanMatrix{{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}},
                                           CartanMatrix{{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}}, CartanMatrix{star}};
  for (std::size_t k = 0; k < controls.size(); ++k) {
    const auto dg = diagram_of(controls[k]);
    c.require(!check_positive_definite(dg.d, dg.a, dg.lengths), "affine control " + std::to_string(k + 1) + " accepted");
    c.require(!classify(dg.d).all_simple(), "affine control " + std::to_string(k + 1) + " classified as simple");
  }
}

void serre(Criterion& c) {
  std::size_t relations = 0, deep = 0;
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 4; ++r) {
      const auto rd = cartan_decompose(at_rank(f, r));
      const auto report = verify_serre(rd);
      for (const auto& chk : report.checks) {
        c.require(chk.passed, rd.spec().name() + " " + chk.relation.str());
        if ((chk.relation.kind == SerreKind::NilpotentX || chk.relation.kind == SerreKind::NilpotentY) &&
            chk.relation.value == 3)
          ++deep;
      }
      relations += report.checks.size();
      const bool has_minus_two = (f == AlgebraFamily::SP || f == AlgebraFamily::SO_ODD) && r >= 2;
      if (has_minus_two) {
        bool found = false;
        for (const auto& chk : report.checks)
          if (chk.relation.kind == SerreKind::NilpotentX && chk.relation.value == 3 && chk.passed) found = true;
        c.require(found, rd.spec().name() + " has no depth-3 relation");
      }
    }
  c.note = std::to_string(relations) + " relations, " + std::to_string(deep) + " of depth 3";
}

void invariants(Criterion& c) {
  std::ostringstream constants;
  for (auto f : kFamilies)
    for (int r = min_rank(f); r <= 4; ++r) {
      const auto rd = cartan_decompose(at_rank(f, r));
      const auto name = rd.spec().name();
      const auto gens = simple_reflections(rd);
      const auto suite = build_suite(f, static_cast<std::size_t>(r));
      c.require(suite.degree_product() == generate(gens).size(), name + " degree product differs from |W|");
      c.require(check_invariance(suite, gens), name + " not invariant");
      const MultiPoly j = jacobian(suite);
      c.require(!j.is_zero(), name + " Jacobian vanishes");
      const auto k = jacobian_constant(suite);
      c.require(k.has_value(), name + " Jacobian not proportional to the closed form");
      if (f == AlgebraFamily::SP) c.require(j == jacobian_closed_form(f, static_cast<std::size_t>(r)), name + " C closed form");
      if (k && (f == AlgebraFamily::SL || f == AlgebraFamily::SO_EVEN))
        constants << (constants.tellp() > 0 ? ", " : "") << letter(f) << "_" << r << "=" << k->get_str();
    }
  c.note = "constants " + constants.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cli_contract(Criterion& c) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{{{"info", "sl", "3"}, "info_sl_3"},
                                                                             {{"info", "sp", "3"}, "info_sp_6"},
                                                                             {{"info", "so-even", "4"}, "info_so_8"},
                                                                             {{"info", "so-odd", "3"}, "info_so_7"}};
  for (const auto& [args, name] : cases)
    for (const char* fmt : {"text", "json"}) {
      auto full = args;
      full.insert(full.end(), {"--format", fmt});
      for (int rep = 0; rep < 2; ++rep) {
        std::ostringstream out, err;
        const int code = cli::run(full, out, err);
        const std::string ext = std::string(fmt) == "text" ? ".txt" : ".json";
        c.require(code == 0, name + ext + " exit " + std::to_string(code));
        c.require(out.str() == read_file(std::string(LIEALG_GOLDEN_DIR) + "/" + name + ext), name + ext + " differs");
      }
    }
  const std::string samples = LIEALG_SAMPLES_DIR;
  const std::vector<std::pair<std::string, int>> exits{
      {"affine_a2_cycle.json", 1}, {"not_a_root_system.json", 1}, {"malformed.json", 2}, {"sl3_roots.json", 0}};
  for (const auto& [file, expected] : exits) {
    std::ostringstream out, err;
    const int code = cli::run({"classify", samples + "/" + file}, out, err);
    c.require(code == expected, "classify " + file + " exit " + std::to_string(code));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"dimension formulas", dimensions},
      {"root systems", root_systems},
      {"Killing coefficients", killing},
      {"sl2-triples", sl2_triples},
      {"Cartan matrices", cartan_matrices},
      {"Weyl group orders", weyl_groups},
      {"Dynkin round trip", dynkin},
      {"Serre relations", serre},
      {"invariants", invariants},
      {"CLI golden files and exit codes", cli_contract}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << " [" << ms << " ms]\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::cout << "  " << c.failures[k] << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
