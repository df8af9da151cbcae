#pragma once

// Shared helpers and seeded instance generators for the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wlpkit/wlpkit.hpp"

namespace wlpkit::testing {

inline constexpr std::uint64_t kSuiteSeed = 20240601;

inline Ring qq_ring(std::size_t n, const std::string& prefix = "x") {
  return RingCtx::make_indexed(FieldSpec::rationals(), n, prefix);
}

inline Ring gf_ring(std::uint64_t p, std::size_t n, const std::string& prefix = "x") {
  return RingCtx::make_indexed(FieldSpec::prime_field(p), n, prefix);
}

inline HomogeneousForm form(const Ring& ring, const std::string& text) { return parse_poly(ring, text); }

inline GradedIdeal ideal(const Ring& ring, const std::string& text) { return GradedIdeal(ring, parse_form_list(ring, text)); }

inline QuotientAlgebra algebra(const std::string& ring, const std::string& gens) {
  const Ring r = parse_ring(ring);
  return QuotientAlgebra(ideal(r, gens));
}

inline std::vector<std::int64_t> seq(const HilbertSeq& h) { return h.values(); }

/// Random form of degree d with coefficients in [lo, hi], possibly zero.
inline HomogeneousForm small_form(const Ring& ring, int d, Rng& rng, long long lo = -5, long long hi = 5) {
  return random_form(ring, d, rng, lo, hi);
}

inline HomogeneousForm nonzero_form(const Ring& ring, int d, Rng& rng, long long lo = -5, long long hi = 5) {
  while (true) {
    HomogeneousForm f = random_form(ring, d, rng, lo, hi);
    if (!f.is_zero()) return f;
  }
}

/// Artinian ideal: powers of every variable plus a few random forms.
inline GradedIdeal random_artinian_ideal(const Ring& ring, Rng& rng) {
  std::vector<HomogeneousForm> gens;
  std::uniform_int_distribution<int> pw(2, 4);
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    gens.push_back(power(HomogeneousForm::variable(ring, i), pw(rng)));
  }
  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> deg(2, 3);
  const int k = extra(rng);
  for (int i = 0; i < k; ++i) gens.push_back(nonzero_form(ring, deg(rng), rng));
  return GradedIdeal(ring, gens);
}

/// Random artinian monomial ideal in n variables.
inline std::vector<Monomial> random_monomial_generators(std::size_t n, Rng& rng) {
  std::vector<Monomial> gens;
  std::uniform_int_distribution<int> pw(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = pw(rng);
    gens.emplace_back(e);
  }
  std::uniform_int_distribution<int> extra(0, 3);
  std::uniform_int_distribution<int> ex(0, 2);
  const int k = extra(rng);
  for (int j = 0; j < k; ++j) {
    std::vector<int> e(n);
    for (auto& v : e) v = ex(rng);
    Monomial m(e);
    if (m.degree() > 0) gens.push_back(m);
  }
  return gens;
}

/// Random Gorenstein algebra in 3 variables from a dual form with small coefficients.
inline DualAlgebra random_gorenstein_small(int e, Rng& rng, std::size_t n = 3) {
  const Ring dual = dual_ring(FieldSpec::rationals(), n);
  const HomogeneousForm F = nonzero_form(dual, e, rng, -9, 9);
  DualModule M{dual, {F}};
  return DualAlgebra{M, algebra_from_dual(M), "random"};
}

/// Random level algebra of type t in n variables, small coefficients.
inline DualAlgebra random_level_small(std::size_t n, int e, std::size_t t, Rng& rng) {
  const Ring dual = dual_ring(FieldSpec::rationals(), n);
  while (true) {
    std::vector<HomogeneousForm> gens;
    Echelon span(dual->field(), dual->dim(e));
    for (std::size_t i = 0; i < t; ++i) {
      HomogeneousForm g = nonzero_form(dual, e, rng, -9, 9);
      span.insert(g.coords());
      gens.push_back(std::move(g));
    }
    if (span.rank() != t) continue;
    DualModule M{dual, gens};
    return DualAlgebra{M, algebra_from_dual(M), "random"};
  }
}

inline LefschetzOptions with_form(const LinearForm& L) {
  LefschetzOptions o;
  o.forms = {L};
  return o;
}

inline LinearForm sampled(const Ring& ring, std::uint64_t seed) { return random_linear_form(ring, seed, 0, kDefaultBound); }

/// Odd seeds give a 0/1 form, which is often special; even seeds a sampled one.
inline LinearForm alternating(const Ring& ring, std::uint64_t seed) {
  if (seed % 2 == 0) return sampled(ring, seed);
  Rng rng(seed);
  return LinearForm::given(nonzero_form(ring, 1, rng, 0, 1));
}

/// Ideal whose low-degree part shares a common factor G, cut down to be artinian by variable powers.
inline GradedIdeal gcd_rich_ideal(Rng& rng) {
  const Ring r = qq_ring(3);
  std::uniform_int_distribution<int> gdeg(1, 2);
  std::uniform_int_distribution<int> qdeg(1, 2);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> pw(4, 6);
  const HomogeneousForm G = nonzero_form(r, gdeg(rng), rng, -3, 3);
  std::vector<HomogeneousForm> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(G * nonzero_form(r, qdeg(rng), rng, -3, 3));
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(power(HomogeneousForm::variable(r, i), pw(rng)));
  return GradedIdeal(r, gens);
}

/// Dual module spanned by t distinct random monomials of degree e.
inline DualModule random_monomial_dual(std::size_t n, int e, std::size_t t, Rng& rng) {
  const Ring dual = dual_ring(FieldSpec::rationals(), n);
  std::vector<Monomial> basis = dual->basis(e);
  std::shuffle(basis.begin(), basis.end(), rng);
  std::vector<HomogeneousForm> gens;
  for (std::size_t i = 0; i < std::min(t, basis.size()); ++i) gens.push_back(HomogeneousForm::monomial(dual, basis[i]));
  return DualModule(dual, gens);
}

/// A mix of artinian ideals, Gorenstein and monomial level algebras in three variables.
inline QuotientAlgebra mixed_instance(int i, Rng& rng) {
  switch (i % 3) {
    case 0: return QuotientAlgebra(random_artinian_ideal(qq_ring(3), rng));
    case 1: return random_gorenstein_small(3 + i % 4, rng).algebra;
    default: {
      std::uniform_int_distribution<int> t(2, 6);
      return algebra_from_dual(random_monomial_dual(3, 3 + i % 2, static_cast<std::size_t>(t(rng)), rng));
    }
  }
}

}  // namespace wlpkit::testing
