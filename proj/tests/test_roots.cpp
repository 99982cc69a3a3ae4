#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace liealg;

namespace {

std::vector<AlgebraSpec> small_specs() {
  std::vector<AlgebraSpec> out;
  for (int n = 2; n <= 5; ++n) out.emplace_back(AlgebraFamily::SL, n);
  for (int n = 1; n <= 4; ++n) out.emplace_back(AlgebraFamily::SP, n);
  for (int n = 2; n <= 4; ++n) out.emplace_back(AlgebraFamily::SO_EVEN, n);
  for (int n = 1; n <= 4; ++n) out.emplace_back(AlgebraFamily::SO_ODD, n);
  return out;
}

}  // namespace

TEST(Roots, MatchTheListedSets) {
  for (const auto& spec : small_specs()) {
    const auto rd = cartan_decompose(spec);
    const std::set<Weight> got(rd.roots().begin(), rd.roots().end());
    EXPECT_EQ(got.size(), rd.roots().size()) << spec.name();
    EXPECT_EQ(got, oracle::expected_roots(spec)) << spec.name();
    EXPECT_EQ(static_cast<int>(got.size()), root_count(spec));
  }
}

TEST(Roots, BasisVectorsAreEigenvectors) {
  for (const auto& spec : small_specs()) {
    const auto rd = cartan_decompose(spec);
    const auto& r = rd.realization();
    for (const auto& a : rd.roots()) {
      const EdgeMatrix& x = rd.root_vector(a);
      for (std::size_t k = 0; k < r.cartan_size(); ++k) {
        const EdgeMatrix& h = r.element(k);
        Rational value = 0;
        for (std::size_t i = 0; i < a.size(); ++i) value += a[i] * h(i, i);
        EXPECT_EQ(mat_bracket(h, x), value * x) << spec.name() << " " << weight_str(a);
      }
    }
  }
}

TEST(Roots, AxiomsHoldUnderKillingAndStandardForms) {
  for (const auto& spec : small_specs()) {
    const auto rd = cartan_decompose(spec);
    const auto killing = verify_root_axioms(rd.roots(), killing_inner_product(rd), rd.ambient_dimension());
    EXPECT_TRUE(killing.all_passed()) << spec.name();
    const auto standard =
        verify_root_axioms(rd.roots(), BilinearForm::standard(rd.roots().front().size()), rd.ambient_dimension());
    EXPECT_TRUE(standard.all_passed()) << spec.name();
  }
}

TEST(Roots, AxiomCheckerCatchesEachFailure) {
  const auto std2 = BilinearForm::standard(2);
  auto v = [](long a, long b) { return integer_vector({a, b}); };
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(0, 1), v(0, -1)}, std2).check("negatives").passed);
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(-1, 0), v(2, 0), v(-2, 0)}, std2, 1).check("multiples").passed);
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(-1, 0), v(1, 1), v(-1, -1)}, std2).check("reflection").passed);
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(-1, 0), v(1, 2), v(-1, -2)}, std2).check("integrality").passed);
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(-1, 0)}, std2).check("spanning").passed);
  BilinearForm indefinite{{{1, 0}, {0, -1}}};
  EXPECT_FALSE(verify_root_axioms({v(1, 0), v(-1, 0), v(0, 1), v(0, -1)}, indefinite).check("euclidean").passed);
  EXPECT_THROW(verify_root_axioms({}, std2), std::invalid_argument);
}

TEST(Roots, Sl2TriplesForEveryRoot) {
  for (const auto& spec : small_specs()) {
    if (spec.lie_rank() > 4) continue;
    const auto rd = cartan_decompose(spec);
    for (const auto& a : rd.roots()) {
      ASSERT_TRUE(verify_sl2_triple(rd, a)) << spec.name() << " " << weight_str(a);
      // Recheck by hand: y = c x_-a with [x, y] = h.
      const EdgeMatrix& h = rd.coroot(a);
      const EdgeMatrix& x = rd.root_vector(a);
      const EdgeMatrix b = mat_bracket(x, rd.root_vector(-a));
      Rational scale = 0;
      for (std::size_t i = 0; i < h.dim() && scale == 0; ++i)
        if (b(i, i) != 0) scale = h(i, i) / b(i, i);
      const EdgeMatrix y = scale * rd.root_vector(-a);
      EXPECT_EQ(mat_bracket(x, y), h);
      EXPECT_EQ(mat_bracket(h, x), Rational(2) * x);
      EXPECT_EQ(mat_bracket(h, y), Rational(-2) * y);
      EXPECT_EQ(evaluate(a, h), Rational(2));
    }
  }
}

TEST(Roots, CorootExamples) {
  const auto sl = cartan_decompose(AlgebraSpec(AlgebraFamily::SL, 3));
  EXPECT_EQ(sl.coroot(integer_vector({1, 0, -1})), edge(1, 1, 3) - edge(3, 3, 3));
  const auto sp = cartan_decompose(AlgebraSpec(AlgebraFamily::SP, 2));
  EXPECT_EQ(sp.coroot(integer_vector({0, 2})), edge(2, 2, 4) - edge(4, 4, 4));
  const auto so = cartan_decompose(AlgebraSpec(AlgebraFamily::SO_ODD, 2));
  EXPECT_EQ(so.coroot(integer_vector({0, 1})), Rational(2) * (edge(2, 2, 5) - edge(4, 4, 5)));
}

TEST(Roots, FundamentalSystemAndWeights) {
  for (const auto& spec : small_specs()) {
    const auto rd = cartan_decompose(spec);
    const auto& pi = rd.fundamental_roots();
    EXPECT_EQ(static_cast<int>(pi.size()), spec.lie_rank());
    for (const auto& a : rd.positive_roots())
      for (const auto& c : rd.simple_coordinates(a)) {
        EXPECT_GE(c, 0);
        EXPECT_TRUE(is_integer(c));
      }
    for (std::size_t i = 0; i < pi.size(); ++i)
      for (std::size_t j = 0; j < pi.size(); ++j)
        EXPECT_EQ(evaluate(rd.fundamental_weights()[i], rd.fundamental_coroots()[j]), Rational(i == j ? 1 : 0));
  }
  const auto so = cartan_decompose(AlgebraSpec(AlgebraFamily::SO_EVEN, 3));
  EXPECT_EQ(so.fundamental_roots().back(), integer_vector({0, 1, 1}));
}

TEST(Roots, WeightFormatting) {
  EXPECT_EQ(weight_str(integer_vector({1, -1, 0})), "a1 - a2");
  EXPECT_EQ(weight_str(integer_vector({0, 0, 2})), "2*a3");
  EXPECT_EQ(weight_str({Rational(-1, 2), Rational(0), Rational(1, 2)}), "-1/2*a1 + 1/2*a3");
  EXPECT_EQ(weight_str(integer_vector({0, 0})), "0");
}

TEST(Roots, WeightOfRejectsNonEigenvectors) {
  const auto r = build(AlgebraSpec(AlgebraFamily::SL, 3));
  EXPECT_EQ(weight_of(r, edge(1, 2, 3) + edge(2, 3, 3)), std::nullopt);
  EXPECT_EQ(weight_of(r, EdgeMatrix(3)), std::nullopt);
  EXPECT_EQ(weight_of(r, edge(2, 3, 3)), std::optional<Weight>(integer_vector({0, 1, -1})));
}
