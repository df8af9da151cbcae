#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlpkit/lefschetz.hpp"
#include "wlpkit/quotient.hpp"

namespace wlpkit {

inline constexpr int kDualCoefficientBound = 999;
inline constexpr int kMaxRetries = 50;

/// Ring acting on a dual ring by contraction: same field, each leading 'y'
/// in a variable name becomes 'x'.
inline Ring primal_ring(const Ring& dual) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dual->num_vars(); ++i) {
    std::string s = dual->names()[i];
    if (!s.empty() && s[0] == 'y') s[0] = 'x';
    names.push_back(s);
  }
  return RingCtx::make(dual->field(), names);
}

inline Ring dual_ring(FieldSpec field, std::size_t n) { return RingCtx::make_indexed(field, n, "y"); }

/// A submodule of the dual ring generated under contraction.
struct DualModule {
  Ring ring;
  std::vector<HomogeneousForm> generators;

  DualModule() = default;
  DualModule(Ring r, std::vector<HomogeneousForm> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (!same_ring(ring, g.ring())) throw Error(Errc::context_mismatch, "dual generator from another ring");
      if (g.is_zero()) throw Error(Errc::invalid_argument, "zero dual generator");
      generators.push_back(std::move(g));
    }
    if (generators.empty()) throw Error(Errc::invalid_argument, "empty dual module");
  }

  int top_degree() const {
    int e = 0;
    for (const auto& g : generators) e = std::max(e, g.degree());
    return e;
  }
};

namespace detail {

// Coordinates of every m o g with g a generator and deg m = deg g - d.
inline std::vector<Vec> contraction_vectors(const DualModule& M, int d) {
  std::vector<Vec> out;
  for (const auto& g : M.generators) {
    if (g.degree() < d) continue;
    for (const Monomial& m : M.ring->basis(g.degree() - d)) out.push_back(contract(m, g).coords());
  }
  return out;
}

}  // namespace detail

/// M_d = span{m o g : g a generator, m a monomial of degree deg g - d}.
inline Echelon derivative_span(const DualModule& M, int d) {
  if (d < 0) throw Error(Errc::invalid_argument, "negative degree");
  return row_echelon(M.ring->field(), M.ring->dim(d), detail::contraction_vectors(M, d));
}

inline HilbertSeq dual_hilbert(const DualModule& M) {
  std::vector<std::int64_t> h;
  for (int d = 0; d <= M.top_degree(); ++d) h.push_back(static_cast<std::int64_t>(derivative_span(M, d).rank()));
  return HilbertSeq(h);
}

/// Ann(M)_d as the orthogonal complement of M_d under <x^a, y^b> = [a = b],
/// in the coordinates of the primal ring's degree-d basis. Eliminating M_d
/// with the column order reversed makes the complement come out already
/// reduced: its vector for free column f is 1 at f and zero at every other
/// free column and left of f.
inline DegreeBasis annihilator_component(const DualModule& M, int d) {
  if (d < 0) throw Error(Errc::invalid_argument, "negative degree");
  const FieldSpec field = M.ring->field();
  const std::size_t n = M.ring->dim(d);
  std::vector<Vec> vecs = detail::contraction_vectors(M, d);
  for (Vec& v : vecs) std::reverse(v.begin(), v.end());
  std::vector<Vec> kernel = row_echelon(field, n, vecs).nullspace();
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  for (auto it = kernel.rbegin(); it != kernel.rend(); ++it) {
    std::reverse(it->begin(), it->end());
    std::size_t lead = 0;
    while (it->at(lead).is_zero()) ++lead;
    pivots.push_back(lead);
    rows.push_back(std::move(*it));
  }
  return DegreeBasis{d, Echelon::from_rref(field, n, std::move(rows), std::move(pivots))};
}

/// The ideal Ann(M), known exactly in degrees 0..e+1 where it is everything.
inline GradedIdeal annihilator_ideal(const DualModule& M, const Ring& primal) {
  if (!primal->compatible(*M.ring)) throw Error(Errc::context_mismatch, "primal ring does not match the dual ring");
  std::vector<Echelon> comps;
  for (int d = 0; d <= M.top_degree() + 1; ++d) comps.push_back(annihilator_component(M, d).echelon);
  return GradedIdeal::from_components(primal, std::move(comps));
}

inline QuotientAlgebra algebra_from_dual(const DualModule& M, int cap = kDefaultCap) {
  return QuotientAlgebra(annihilator_ideal(M, primal_ring(M.ring)), cap);
}

/// A dual module together with R/Ann of it.
struct DualAlgebra {
  DualModule module;
  QuotientAlgebra algebra;
  std::string strategy;
};

/// Every monomial gets an independent integer coefficient in [lo, hi].
inline HomogeneousForm random_form(const Ring& ring, int d, Rng& rng, long long lo = -kDualCoefficientBound,
                                   long long hi = kDualCoefficientBound) {
  HomogeneousForm f(ring, d);
  for (const Monomial& m : ring->basis(d)) f.add_term(m, random_integer_scalar(ring->field(), rng, lo, hi));
  return f;
}

inline DualAlgebra random_gorenstein(const Ring& dual, int e, Rng& rng) {
  if (e < 1) throw Error(Errc::invalid_argument, "socle degree must be >= 1");
  HomogeneousForm F = random_form(dual, e, rng);
  while (F.is_zero()) F = random_form(dual, e, rng);
  DualModule M(dual, {F});
  QuotientAlgebra A = algebra_from_dual(M);
  return DualAlgebra{std::move(M), std::move(A), "random"};
}

/// h_degree <= max_value.
struct HilbertConstraint {
  int degree = 2;
  std::int64_t max_value = 0;
};

/// Over QQ: the integer multiple of F with coprime coefficients and positive
/// leading coefficient. Over GF(p): F itself.
inline HomogeneousForm primitive_integer_form(const HomogeneousForm& F) {
  if (!F.ring()->field().is_rational() || F.is_zero()) return F;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [m, c] : F.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational().get_num_mpz_t());
  }
  if (F.leading_coefficient().sign() < 0) num = -num;
  return F.scaled(Scalar::from_fraction(F.ring()->field(), den, num));
}

namespace detail {

// Degree-e dual forms killed by contraction with every form in qs.
inline std::vector<Vec> contraction_kernel(const Ring& dual, int e, const std::vector<HomogeneousForm>& qs) {
  const FieldSpec field = dual->field();
  const auto& basis = dual->basis(e);
  std::vector<Vec> columns;
  for (const Monomial& m : basis) {
    const HomogeneousForm ym = HomogeneousForm::monomial(dual, m);
    Vec col;
    for (const auto& q : qs) {
      const Vec part = contract(q, ym).coords();
      col.insert(col.end(), part.begin(), part.end());
    }
    columns.push_back(std::move(col));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  if (rows == 0) {
    std::vector<Vec> all;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vec v = zero_vec(field, basis.size());
      v[j] = Scalar::one(field);
      all.push_back(std::move(v));
    }
    return all;
  }
  const std::vector<Vec> matrix = columns_to_rows(field, rows, columns);
  if (rank_mod_prime_lower_bound(matrix) == basis.size()) return {};
  return nullspace(field, basis.size(), matrix);
}

inline HomogeneousForm random_combination(const Ring& dual, int e, const std::vector<Vec>& basis, Rng& rng) {
  Vec acc = zero_vec(dual->field(), dual->dim(e));
  for (const Vec& v : basis) {
    const Scalar c = random_integer_scalar(dual->field(), rng, -kDualCoefficientBound, kDualCoefficientBound);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) acc[j] += c * v[j];
    }
  }
  return primitive_integer_form(HomogeneousForm::from_coords(dual, e, acc));
}

// Coefficients in [-9, 9]: the e-th power stays small.
inline HomogeneousForm random_small_linear(const Ring& dual, Rng& rng) {
  HomogeneousForm L = random_form(dual, 1, rng, -9, 9);
  while (L.is_zero()) L = random_form(dual, 1, rng, -9, 9);
  return L;
}

}  // namespace detail

/// Inverse of divided_power_form (defined below): each y^b is multiplied by b!, so that
/// contraction on the result matches differentiation on F.
inline HomogeneousForm differential_to_contraction(const HomogeneousForm& F) {
  const FieldSpec field = F.ring()->field();
  HomogeneousForm out(F.ring(), F.degree());
  for (const auto& [m, c] : F.terms()) {
    mpz_class fact = 1;
    for (int e : m.exps) {
      for (int k = 2; k <= e; ++k) fact *= k;
    }
    out.add_term(m, c * Scalar::from_mpz(field, fact));
  }
  return out;
}

/// Random Gorenstein algebra with h_s <= c and h_1 = n. First choice: F in the
/// contraction kernel of dim R_s - c random forms of degree s, which puts
/// them into Ann(F). Otherwise F is the contraction image of a sum of c
/// powers of random linear forms, so h_d <= c in every degree.
inline DualAlgebra random_gorenstein_constrained(const Ring& dual, int e, HilbertConstraint constraint, Rng& rng,
                                                 int max_retries = kMaxRetries) {
  if (e < 1) throw Error(Errc::invalid_argument, "socle degree must be >= 1");
  const int s = constraint.degree;
  const std::int64_t c = constraint.max_value;
  const auto n = static_cast<std::int64_t>(dual->num_vars());
  if (s < 0 || c < 0) throw Error(Errc::invalid_argument, "bad constraint");
  const auto dim_s = static_cast<std::int64_t>(dual->dim(s));
  if (c >= dim_s) return random_gorenstein(dual, e, rng);
  const Ring primal = primal_ring(dual);
  auto accept = [&](const QuotientAlgebra& A) { return A.h(1) == n && A.h(s) <= c; };
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const bool kernel_route = attempt % 2 == 0;
    HomogeneousForm F;
    if (kernel_route && s <= e) {
      std::vector<HomogeneousForm> qs;
      for (std::int64_t k = 0; k < dim_s - c; ++k) qs.push_back(random_form(primal, s, rng));
      const auto ker = detail::contraction_kernel(dual, e, qs);
      if (ker.empty()) continue;
      F = detail::random_combination(dual, e, ker, rng);
    } else {
      if (c < 1) continue;
      F = HomogeneousForm(dual, e);
      for (std::int64_t k = 0; k < c; ++k) F += differential_to_contraction(power(detail::random_small_linear(dual, rng), e));
      F = primitive_integer_form(F);
    }
    if (F.is_zero()) continue;
    DualModule M(dual, {F});
    QuotientAlgebra A = algebra_from_dual(M);
    if (accept(A)) return DualAlgebra{std::move(M), std::move(A), kernel_route ? "kernel" : "power-sum"};
  }
  throw Error(Errc::constraint_unsatisfied, "no instance with h_" + std::to_string(s) + " <= " + std::to_string(c) +
                                                " after " + std::to_string(max_retries) + " attempts");
}

/// R/Ann of t independent random forms of degree e: level of type t.
inline DualAlgebra random_level(const Ring& dual, int e, int t, Rng& rng, int max_retries = kMaxRetries) {
  if (t < 1 || e < 0) throw Error(Errc::invalid_argument, "random_level needs t >= 1, e >= 0");
  if (static_cast<std::size_t>(t) > dual->dim(e)) throw Error(Errc::dependent_generators, "type exceeds dim R_e");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<HomogeneousForm> gens;
    Echelon span(dual->field(), dual->dim(e));
    bool independent = true;
    for (int i = 0; i < t; ++i) {
      HomogeneousForm g = random_form(dual, e, rng);
      if (!span.insert(g.coords())) {
        independent = false;
        break;
      }
      gens.push_back(std::move(g));
    }
    if (!independent) continue;
    DualModule M(dual, std::move(gens));
    QuotientAlgebra A = algebra_from_dual(M);
    return DualAlgebra{std::move(M), std::move(A), "random"};
  }
  throw Error(Errc::dependent_generators, "could not draw independent generators");
}

/// Level algebra of type t whose dual generators lie in the contraction
/// kernel of k random forms of degree `low` (so h_low <= dim R_low - k).
inline DualAlgebra random_level_in_kernel(const Ring& dual, int e, int t, int low, int k, Rng& rng,
                                          int max_retries = kMaxRetries) {
  const Ring primal = primal_ring(dual);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<HomogeneousForm> qs;
    for (int i = 0; i < k; ++i) qs.push_back(random_form(primal, low, rng));
    const auto ker = detail::contraction_kernel(dual, e, qs);
    if (ker.size() < static_cast<std::size_t>(t)) continue;
    std::vector<HomogeneousForm> gens;
    Echelon span(dual->field(), dual->dim(e));
    for (int i = 0; i < t; ++i) {
      HomogeneousForm g = detail::random_combination(dual, e, ker, rng);
      if (span.insert(g.coords())) gens.push_back(std::move(g));
    }
    if (gens.size() != static_cast<std::size_t>(t)) continue;
    DualModule M(dual, std::move(gens));
    QuotientAlgebra A = algebra_from_dual(M);
    return DualAlgebra{std::move(M), std::move(A), "kernel"};
  }
  throw Error(Errc::constraint_unsatisfied, "no level instance in the requested kernel");
}

/// The form G with G's differential apolar algebra equal to the contraction
/// apolar algebra of F: each y^b is divided by b!.
inline HomogeneousForm divided_power_form(const HomogeneousForm& F) {
  const FieldSpec field = F.ring()->field();
  if (field.characteristic() != 0 && field.characteristic() <= static_cast<std::uint64_t>(F.degree())) {
    throw Error(Errc::char_too_small, "factorials vanish in this characteristic");
  }
  HomogeneousForm out(F.ring(), F.degree());
  for (const auto& [m, c] : F.terms()) {
    mpz_class fact = 1;
    for (int e : m.exps) {
      for (int k = 2; k <= e; ++k) fact *= k;
    }
    out.add_term(m, c / Scalar::from_mpz(field, fact));
  }
  return out;
}

struct WatanabeResult {
  bool hessian_zero = false;
  bool map_full_rank = false;
  bool consistent = false;
  std::int64_t h1 = 0;
  std::int64_t rank = 0;
};

/// Hessian of the differential form vs. the rank of x L^{s-2} : A_1 -> A_{s-1}
/// for A = R/Ann(F). Full rank means h_1 = n and the map is bijective.
inline WatanabeResult watanabe_check(const HomogeneousForm& F, const SamplingOptions& opts = {}) {
  if (F.ring()->field().characteristic() != 0) throw Error(Errc::char_not_zero, "Hessian criterion needs characteristic 0");
  const int s = F.degree();
  if (s < 3) throw Error(Errc::invalid_argument, "Hessian criterion needs degree >= 3");
  WatanabeResult out;
  out.hessian_zero = hessian_det(divided_power_form(F)).is_zero();
  const DualModule M(F.ring(), {F});
  const QuotientAlgebra A = algebra_from_dual(M);
  out.h1 = A.h(1);
  for (const auto& L : sample_general_form(A.ring(), opts)) {
    out.rank = std::max(out.rank, static_cast<std::int64_t>(mult_map(A, L, 1, s - 2).rank));
  }
  const auto n = static_cast<std::int64_t>(F.ring()->num_vars());
  out.map_full_rank = out.h1 == n && out.rank == out.h1;
  out.consistent = out.hessian_zero == !out.map_full_rank;
  return out;
}

}  // namespace wlpkit
