#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace liealg;

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Exceptional Cartan matrices with A_ij = a_i(h_j), written out by hand.
IntMatrix chain(std::size_t r) { return oracle::standard_cartan('A', r); }

IntMatrix e_type(std::size_t r) {
  // Chain of r-1 vertices; vertex r hangs off chain vertex 3 (0-based 2)
  // for E_6 and 4 (0-based 3) for E_7, E_8, giving arms 1, 2, r-4.
  IntMatrix a = chain(r);
  a[r - 2][r - 1] = a[r - 1][r - 2] = 0;
  const std::size_t hub = r == 6 ? 2 : r - 4;
  a[hub][r - 1] = a[r - 1][hub] = -1;
  return a;
}

const IntMatrix kF4{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
const IntMatrix kG2{{2, -1}, {-3, 2}};

struct Analysis {
  bool symmetrizable = false;
  bool built = false;
  bool positive_definite = false;
  Classification classification;
  DynkinDiagram diagram;
};

Analysis analyse(const IntMatrix& m) {
  Analysis out;
  const CartanMatrix a{m};
  const auto lengths = symmetrizing_lengths(a);
  if (!lengths) return out;
  out.symmetrizable = true;
  try {
    out.diagram = build_diagram(a, *lengths);
  } catch (const std::invalid_argument&) {
    return out;
  }
  out.built = true;
  out.positive_definite = check_positive_definite(out.diagram, a, *lengths);
  out.classification = classify(out.diagram);
  return out;
}

std::string expected_family_name(AlgebraFamily f, int rank) {
  const std::string r = std::to_string(rank);
  switch (f) {
    case AlgebraFamily::SL: return "A_" + r;
    case AlgebraFamily::SP: return rank == 1 ? "A_1" : "C_" + r;
    case AlgebraFamily::SO_ODD: return rank == 1 ? "A_1" : "B_" + r;
    case AlgebraFamily::SO_EVEN:
      if (rank == 2) return "A_1 + A_1";
      if (rank == 3) return "A_3";
      return "D_" + r;
  }
  return "";
}

}  // namespace

TEST(Diagram, ArrowsPointToTheShorterRoot) {
  const auto b3 = analyse(cartan_matrix(cartan_decompose(AlgebraSpec(AlgebraFamily::SO_ODD, 3))).entries);
  ASSERT_TRUE(b3.built);
  EXPECT_EQ(b3.diagram.arrows, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}}));
  const auto c3 = analyse(cartan_matrix(cartan_decompose(AlgebraSpec(AlgebraFamily::SP, 3))).entries);
  ASSERT_TRUE(c3.built);
  EXPECT_EQ(c3.diagram.arrows, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}}));
  EXPECT_EQ(c3.diagram.arrow_target(1, 2), std::optional<std::size_t>(1));
  EXPECT_EQ(c3.diagram.arrow_target(0, 1), std::nullopt);
}

TEST(Diagram, BuildRejectsBadInput) {
  EXPECT_THROW(build_diagram(CartanMatrix{{{2, -2}, {-2, 2}}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(build_diagram(CartanMatrix{{{2, -1}, {-2, 2}}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(build_diagram(CartanMatrix{{{2, 1}, {-1, 2}}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(build_diagram(CartanMatrix{{{2, 0}, {0, 2}}}, {1}), std::invalid_argument);
}

TEST(Diagram, SymmetrizingLengths) {
  EXPECT_EQ(symmetrizing_lengths(CartanMatrix{kG2}), std::optional<RationalVector>({1, 3}));
  EXPECT_EQ(symmetrizing_lengths(CartanMatrix{{{2, -2}, {-1, 2}}}), std::optional<RationalVector>({2, 1}));
  // Cycle whose edge ratios multiply to 2 around the loop.
  EXPECT_EQ(symmetrizing_lengths(CartanMatrix{{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}}), std::nullopt);
}

TEST(Diagram, FamiliesArePositiveDefiniteAndClassifyBack) {
  for (auto f : {AlgebraFamily::SL, AlgebraFamily::SP, AlgebraFamily::SO_EVEN, AlgebraFamily::SO_ODD})
    for (int rank = f == AlgebraFamily::SO_EVEN ? 2 : 1; rank <= 8; ++rank) {
      const AlgebraSpec spec(f, f == AlgebraFamily::SL ? rank + 1 : rank);
      const auto an = analyse(cartan_matrix(cartan_decompose(spec)).entries);
      ASSERT_TRUE(an.built) << spec.name();
      EXPECT_TRUE(an.positive_definite) << spec.name();
      EXPECT_EQ(an.classification.str(), expected_family_name(f, rank)) << spec.name();
    }
}

TEST(Diagram, ExceptionalTypes) {
  const std::vector<std::pair<IntMatrix, std::string>> cases{
      {e_type(6), "E_6"}, {e_type(7), "E_7"}, {e_type(8), "E_8"}, {kF4, "F_4"}, {kG2, "G_2"}};
  for (const auto& [m, name] : cases) {
    const auto an = analyse(m);
    ASSERT_TRUE(an.built) << name;
    EXPECT_TRUE(an.positive_definite) << name;
    EXPECT_EQ(an.classification.str(), name);
  }
}

TEST(Diagram, AffineControlsAreRejected) {
  const IntMatrix cycle{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  const IntMatrix double_double{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}};
  IntMatrix star(5, std::vector<int>(5, 0));
  for (std::size_t i = 0; i < 5; ++i) star[i][i] = 2;
  for (std::size_t i = 1; i < 5; ++i) star[0][i] = star[i][0] = -1;
  const IntMatrix e9 = [] {
    IntMatrix a = chain(9);
    a[7][8] = a[8][7] = 0;
    a[5][8] = a[8][5] = -1;  // arms 1, 2, 5
    return a;
  }();
  for (const auto& m : {cycle, double_double, star, e9}) {
    const auto an = analyse(m);
    ASSERT_TRUE(an.built);
    EXPECT_FALSE(an.positive_definite);
    EXPECT_FALSE(an.classification.all_simple()) << an.classification.str();
    EXPECT_EQ(an.classification.str().rfind("NotSimple: ", 0), 0u);
  }
  EXPECT_EQ(analyse(cycle).classification.str(), "NotSimple: diagram contains a cycle");
  EXPECT_EQ(analyse(star).classification.str(), "NotSimple: vertex of degree 4");
}

TEST(Diagram, SimpleIffPositiveDefiniteOnSmallMatrices) {
  // Every symmetric zero pattern with off-diagonal pairs from the list below,
  // on three and four vertices.
  const std::vector<std::pair<int, int>> bonds{{0, 0}, {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3}, {-3, -1}, {-2, -2}};
  for (std::size_t n : {3u, 4u}) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> pick(pairs.size(), 0);
    std::size_t tested = 0;
    for (;;) {
      IntMatrix m(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        m[pairs[k].first][pairs[k].second] = bonds[pick[k]].first;
        m[pairs[k].second][pairs[k].first] = bonds[pick[k]].second;
      }
      const auto an = analyse(m);
      if (an.built) {
        ++tested;
        // Independent check of definiteness on the symmetrized matrix.
        RationalMatrix b(n, RationalVector(n));
        const auto d = *symmetrizing_lengths(CartanMatrix{m});
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) b[i][j] = m[i][j] * d[j];
        bool pd = true;
        for (std::size_t k = 1; k <= n; ++k) {
          RationalMatrix minor(k, RationalVector(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = b[i][j];
          if (oracle::leibniz_det(minor) <= 0) pd = false;
        }
        EXPECT_EQ(an.positive_definite, pd);
        EXPECT_EQ(an.classification.all_simple(), pd) << an.classification.str();
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == bonds.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    EXPECT_GT(tested, 0u);
  }
}

TEST(Diagram, Render) {
  auto draw = [](const IntMatrix& m, bool unicode = false) { return render(analyse(m).diagram, unicode); };
  EXPECT_EQ(draw(chain(3)), "o-o-o");
  EXPECT_EQ(draw(oracle::standard_cartan('B', 3)), "o-o=>o");
  EXPECT_EQ(draw(oracle::standard_cartan('C', 3)), "o-o<=o");
  EXPECT_EQ(draw(oracle::standard_cartan('C', 3), true), "o−o⇐o");
  EXPECT_EQ(draw(kF4), "o-o=>o-o");
  EXPECT_EQ(draw(kG2), "o<<=o");
  EXPECT_EQ(draw(kG2, true), "o<≡o");
  EXPECT_EQ(draw(oracle::standard_cartan('D', 2)), "o o");
  EXPECT_EQ(draw(oracle::standard_cartan('D', 4)), "o-o-o\n  |\n  o");
  EXPECT_EQ(draw(e_type(8)), "o-o-o-o-o-o-o\n        |\n        o");
  EXPECT_EQ(draw({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), "1-2, 1-3, 2-3");
}

TEST(Serre, PresentationText) {
  const auto c2 = serre_presentation(CartanMatrix{{{2, -1}, {-2, 2}}});
  const std::string text = c2.str();
  for (const char* line : {"[H1,H2] = 0", "[X1,Y1] = H1", "[X1,Y2] = 0", "[H1,X1] = 2X1", "[H1,X2] = -2X2",
                           "[H2,X1] = -X1", "[H1,Y2] = 2Y2", "[X1,[X1,[X1,X2]]] = 0", "[X2,[X2,X1]] = 0",
                           "[Y1,[Y1,[Y1,Y2]]] = 0"})
    EXPECT_NE(text.find(std::string(line) + "\n"), std::string::npos) << line;
  // 1 + 2 + 2 + 4 + 4 + 2 + 2 relations for rank 2.
  EXPECT_EQ(c2.relations.size(), 17u);
  EXPECT_THROW(serre_presentation(CartanMatrix{}), std::invalid_argument);
}

TEST(Serre, HoldsInEveryRealization) {
  for (auto f : {AlgebraFamily::SL, AlgebraFamily::SP, AlgebraFamily::SO_EVEN, AlgebraFamily::SO_ODD})
    for (int rank = f == AlgebraFamily::SO_EVEN ? 2 : 1; rank <= 4; ++rank) {
      const AlgebraSpec spec(f, f == AlgebraFamily::SL ? rank + 1 : rank);
      const auto report = verify_serre(cartan_decompose(spec));
      EXPECT_TRUE(report.all_passed()) << spec.name() << ": " << report.failures() << " failures";
    }
}

TEST(Serre, DepthThreeRelationIsSharp) {
  // In sp_4 three brackets kill X2 but two do not.
  const auto rd = cartan_decompose(AlgebraSpec(AlgebraFamily::SP, 2));
  const auto g = chevalley_generators(rd);
  const EdgeMatrix two = mat_bracket(g.x[0], mat_bracket(g.x[0], g.x[1]));
  EXPECT_FALSE(two.is_zero());
  EXPECT_TRUE(mat_bracket(g.x[0], two).is_zero());
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(mat_bracket(g.x[i], g.y[i]), g.h[i]);
}

TEST(Serre, CorruptedMatrixFails) {
  const auto rd = cartan_decompose(AlgebraSpec(AlgebraFamily::SP, 2));
  const auto report = verify_serre(rd.realization(), rd, serre_presentation(CartanMatrix{{{2, -2}, {-1, 2}}}));
  EXPECT_FALSE(report.all_passed());
  EXPECT_GT(report.failures(), 0u);
  const auto three = cartan_decompose(AlgebraSpec(AlgebraFamily::SL, 4));
  EXPECT_THROW(verify_serre(rd.realization(), rd, serre_presentation(cartan_matrix(three))), std::invalid_argument);
}
