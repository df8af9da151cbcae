#include <gtest/gtest.h>

#include "support.hpp"

using namespace wlpkit;
using namespace wlpkit::testing;

namespace {

// Standard monomials of a monomial ideal: those divisible by no generator.
std::vector<std::int64_t> monomial_hilbert(std::size_t n, const std::vector<Monomial>& gens) {
  const Ring r = qq_ring(n);
  std::vector<std::int64_t> h;
  for (int d = 0;; ++d) {
    std::int64_t count = 0;
    for (const auto& m : r->basis(d)) {
      bool in = false;
      for (const auto& g : gens) in = in || g.divides(m);
      if (!in) ++count;
    }
    if (count == 0) break;
    h.push_back(count);
  }
  return h;
}

}  // namespace

TEST(IdealComponent, Examples) {
  const Ring r = parse_ring("QQ[x,y,z]");
  const GradedIdeal I = ideal(r, "x^2, y^2, z^2");
  EXPECT_EQ(I.component(2).rank(), 3U);
  EXPECT_EQ(I.component(3).rank(), 9U);  // every cubic except x*y*z
  std::size_t divisible = 0;
  for (const auto& m : r->basis(3)) {
    divisible += (m.exps[0] >= 2 || m.exps[1] >= 2 || m.exps[2] >= 2) ? 1 : 0;
  }
  EXPECT_EQ(I.component(3).rank(), divisible);
  EXPECT_EQ(I.component(1).rank(), 0U);
  EXPECT_EQ(I.component(0).rank(), 0U);
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(seq(algebra("QQ[x1,x2,x3]", "x1^3, x2^3, x3^3, x1*x2*x3").hilbert()), (std::vector<std::int64_t>{1, 3, 6, 6, 3}));
  EXPECT_EQ(seq(algebra("QQ[x,y,z]", "x, y, z").hilbert()), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(seq(algebra("QQ[x,y,z]", "x^2, y^2, z^2").hilbert()), (std::vector<std::int64_t>{1, 3, 3, 1}));
  EXPECT_EQ(seq(algebra("GF(2)[x,y,z]", "x^2, y^2, z^2").hilbert()), (std::vector<std::int64_t>{1, 3, 3, 1}));
}

TEST(HilbertFunction, NonArtinianIsRejected) {
  const Ring r = parse_ring("QQ[x,y,z]");
  for (const char* gens : {"x^2", "x^2, y^3", "x*y, x*z, y*z"}) {
    try {
      (void)hilbert_function(ideal(r, gens));
      FAIL() << gens;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::not_artinian) << gens;
    }
  }
  try {
    (void)hilbert_function(ideal(r, "x^9, y^9, z^9"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_artinian);
  }
}

TEST(HilbertFunction, MonomialIdealsMatchStandardMonomialCount) {
  Rng rng(kSuiteSeed + 20);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto gens = random_monomial_generators(n, rng);
    const Ring r = qq_ring(n);
    std::vector<HomogeneousForm> forms;
    for (const auto& g : gens) forms.push_back(HomogeneousForm::monomial(r, g));
    EXPECT_EQ(seq(hilbert_function(GradedIdeal(r, forms))), monomial_hilbert(n, gens));
  }
}

TEST(HilbertFunction, EveryComputedSequenceIsAnOSequence) {
  Rng rng(kSuiteSeed + 21);
  for (int i = 0; i < 60; ++i) {
    const Ring r = (i % 3 == 0) ? gf_ring(2, 3) : (i % 3 == 1 ? qq_ring(3) : qq_ring(4));
    const HilbertSeq h = hilbert_function(random_artinian_ideal(r, rng));
    EXPECT_TRUE(is_o_sequence(h)) << h.to_string();
  }
}

TEST(QuotientBasis, Examples) {
  const QuotientAlgebra A = algebra("QQ[x,y,z]", "x^2, x*y, x*z, y^2, y*z, z^2");
  std::vector<std::string> names;
  for (const auto& m : A.quotient_basis(1)) names.push_back(monomial_to_string(*A.ring(), m));
  EXPECT_EQ(names, (std::vector<std::string>{"x", "y", "z"}));
  const QuotientAlgebra B = algebra("QQ[x,y,z]", "x^2, y^2, z^2");
  ASSERT_EQ(B.quotient_basis(3).size(), 1U);
  EXPECT_EQ(monomial_to_string(*B.ring(), B.quotient_basis(3)[0]), "x*y*z");
  EXPECT_TRUE(B.quotient_basis(4).empty());
  EXPECT_TRUE(B.quotient_basis(9).empty());
}

TEST(Socle, Examples) {
  const QuotientAlgebra cubes = algebra("QQ[x1,x2,x3]", "x1^3, x2^3, x3^3, x1*x2*x3");
  EXPECT_EQ(cubes.socle_dims(), (std::vector<std::int64_t>{0, 0, 0, 0, 3}));
  const QuotientAlgebra square = algebra("QQ[x,y,z]", "x^2, x*y, x*z, y^2, y*z, z^2");
  EXPECT_EQ(square.socle_dims(), (std::vector<std::int64_t>{0, 3}));
  // Not level: x*y and x*z kill x, leaving socle in degrees 1 and 2.
  const QuotientAlgebra mixed = algebra("QQ[x,y,z]", "x^2, x*y, x*z, y^3, z^3, y^2*z, y*z^2");
  const auto& c = mixed.classification();
  EXPECT_FALSE(c.is_level);
  EXPECT_EQ(mixed.socle_dims()[1], 1);
}

TEST(Classify, Examples) {
  const auto& ci = algebra("QQ[x,y,z]", "x^2, y^2, z^2").classification();
  EXPECT_TRUE(ci.is_gorenstein);
  EXPECT_EQ(ci.codim, 3);
  EXPECT_EQ(ci.initial_degree, 2);
  EXPECT_EQ(ci.socle_degree, 3);
  EXPECT_EQ(ci.type, 1);
  const auto& cubes = algebra("QQ[x1,x2,x3]", "x1^3, x2^3, x3^3, x1*x2*x3").classification();
  EXPECT_TRUE(cubes.is_level);
  EXPECT_FALSE(cubes.is_gorenstein);
  EXPECT_EQ(cubes.type, 3);
  EXPECT_EQ(cubes.initial_degree, 3);
  EXPECT_EQ(cubes.socle_degree, 4);
}

TEST(IdealPlusForm, Examples) {
  const Ring r = parse_ring("QQ[x,y,z]");
  const GradedIdeal I = ideal(r, "x^2, y^2");
  const GradedIdeal J = I.plus(form(r, "z^2"));
  EXPECT_EQ(hilbert_function(J), hilbert_function(ideal(r, "x^2, y^2, z^2")));
  const QuotientAlgebra A = algebra("QQ[x,y,z]", "x^2, y^2, z^2");
  const HilbertSeq h = hilbert_function(A.ideal().plus(form(A.ring(), "x + 2*y + 3*z")));
  EXPECT_EQ(h[1], A.h(1) - 1);
  EXPECT_EQ(A.ideal().plus(form(A.ring(), "x + y")).generators().size(), 4U);
}

TEST(IdealColonForm, Examples) {
  const Ring r = parse_ring("QQ[x,y]");
  const GradedIdeal I = ideal(r, "x^2, y^2");
  const DegreeBasis c = ideal_colon_form(I, form(r, "x"), 1);
  EXPECT_EQ(c.rank(), 1U);
  EXPECT_TRUE(c.echelon.contains(form(r, "x").coords()));
  EXPECT_FALSE(c.echelon.contains(form(r, "y").coords()));
  const HomogeneousForm one = HomogeneousForm::constant(r, Scalar::one(r->field()));
  for (int d = 0; d <= 4; ++d) EXPECT_TRUE(ideal_colon_form(I, one, d).echelon == I.component(d).echelon);
}

TEST(IdealColonForm, GeneralLinearFormOnCompleteIntersection) {
  // h_{R/I} = (1,3,3,1) and h_{R/(I,L)} = (1,2), so the colon has (1,3,1), shifted by one.
  const QuotientAlgebra A = algebra("QQ[x,y,z]", "x^2, y^2, z^2");
  const HomogeneousForm L = form(A.ring(), "3*x + 5*y + 7*z");
  const GradedIdeal colon = colon_ideal(A, L);
  EXPECT_EQ(seq(hilbert_function(colon)), (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_TRUE(QuotientAlgebra(colon).classification().is_gorenstein);
  EXPECT_EQ(seq(hilbert_function(A.ideal().plus(L))), (std::vector<std::int64_t>{1, 2}));
}

TEST(ComponentGcd, Examples) {
  const Ring r = parse_ring("QQ[x,y,z]");
  const auto [g1, d1] = component_gcd(ideal(r, "x^2, x*y"), 2);
  EXPECT_EQ(g1.to_string(), "x");
  EXPECT_EQ(d1, 1);
  const auto [g2, d2] = component_gcd(ideal(r, "x^2, y^2, z^2"), 2);
  EXPECT_EQ(d2, 0);
  EXPECT_TRUE(g2.leading_coefficient().is_one());
  try {
    (void)component_gcd(ideal(r, "x^2, y^2, z^2"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_component);
  }
}

TEST(MinimalGenerators, CountsNewGeneratorsPerDegree) {
  // x1^4 lies in R_1 * I_3; x1^2*x2^2 does not.
  const QuotientAlgebra A = algebra("QQ[x1,x2,x3]", "x1^3, x2^3, x3^3, x1*x2*x3, x1^4, x1^2*x2^2");
  EXPECT_EQ(A.ideal().num_minimal_generators(2), 0U);
  EXPECT_EQ(A.ideal().num_minimal_generators(3), 4U);
  EXPECT_EQ(A.ideal().num_minimal_generators(4), 1U);
  EXPECT_EQ(seq(A.hilbert()), (std::vector<std::int64_t>{1, 3, 6, 6, 2}));
}

TEST(ExactSequence, HoldsOnRandomPairs) {
  Rng rng(kSuiteSeed + 22);
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Ring r = (i % 4 == 0) ? gf_ring(3, 3) : qq_ring(3);
    const QuotientAlgebra A(random_artinian_ideal(r, rng));
    const HomogeneousForm F = nonzero_form(r, 1 + i % 2, rng);
    const ExactSequenceCheck c = check_exact_sequence(A, F);
    EXPECT_TRUE(c.holds) << A.hilbert().to_string();
    // Independent route: the colon row from the colon ideal's own Hilbert function.
    if (!c.degenerate) {
      const HilbertSeq hc = hilbert_function(colon_ideal(A, F));
      for (std::size_t t = 0; t < c.algebra.size(); ++t) {
        const int u = static_cast<int>(t) - F.degree();
        EXPECT_EQ(c.colon_shifted[t], u < 0 ? 0 : hc[u]);
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 150U);
}

TEST(ColonGorenstein, ColonByFormIsGorensteinOfLowerSocleDegree) {
  Rng rng(kSuiteSeed + 23);
  std::size_t checked = 0;
  for (int i = 0; i < 60; ++i) {
    const int e = 3 + i % 4;
    const DualAlgebra g = random_gorenstein_small(e, rng);
    const HomogeneousForm F = nonzero_form(g.algebra.ring(), 1 + i % 3, rng, -3, 3);
    if (g.algebra.ideal().contains(F)) continue;
    const QuotientAlgebra C(colon_ideal(g.algebra, F));
    EXPECT_TRUE(C.classification().is_gorenstein);
    EXPECT_EQ(C.socle_degree(), e - F.degree());
    ++checked;
  }
  EXPECT_GE(checked, 50U);
}

TEST(NoGcd, GorensteinComponentsAboveHalfAreCoprime) {
  Rng rng(kSuiteSeed + 24);
  std::size_t checked = 0;
  for (int i = 0; i < 60; ++i) {
    const int e = 2 + i % 7;
    const DualAlgebra g = random_gorenstein_small(e, rng);
    for (int d = e / 2 + 1; d <= e + 1; ++d) {
      if (g.algebra.ideal().component(d).rank() == 0) continue;
      EXPECT_EQ(component_gcd(g.algebra.ideal(), d).second, 0) << "e=" << e << " d=" << d;
      ++checked;
    }
  }
  EXPECT_GE(checked, 50U);
}

TEST(GorensteinShape, RandomGorensteinSequencesAreSi) {
  Rng rng(kSuiteSeed + 25);
  for (int i = 0; i < 60; ++i) {
    const DualAlgebra g = random_gorenstein_small(2 + i % 7, rng);
    EXPECT_TRUE(is_symmetric(g.algebra.hilbert()));
    EXPECT_TRUE(is_si_sequence(g.algebra.hilbert())) << g.algebra.hilbert().to_string();
    EXPECT_TRUE(g.algebra.classification().is_gorenstein);
  }
}
