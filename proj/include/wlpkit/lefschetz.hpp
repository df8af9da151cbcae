#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlpkit/quotient.hpp"

namespace wlpkit {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 20;
inline constexpr std::size_t kDefaultSamples = 3;
// Projective form counts up to this size are enumerated instead of sampled.
inline constexpr std::uint64_t kExhaustiveLimit = 1024;

enum class Provenance { sampled, exhaustive, user_given };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::sampled: return "sampled";
    case Provenance::exhaustive: return "exhaustive";
    case Provenance::user_given: return "user_given";
  }
  return "?";
}

struct LinearForm {
  HomogeneousForm form;
  Provenance provenance = Provenance::user_given;
  std::uint64_t seed = 0;
  std::size_t index = 0;

  static LinearForm given(HomogeneousForm f) {
    if (f.degree() != 1 || f.is_zero()) throw Error(Errc::invalid_argument, "not a nonzero linear form");
    return LinearForm{std::move(f), Provenance::user_given, 0, 0};
  }
};

struct SamplingOptions {
  std::size_t num_samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t bound = kDefaultBound;
  /// Enumerate every projective form over GF(p) even above kExhaustiveLimit.
  bool force_exhaustive = false;
};

/// Number of points of P^{n-1}(GF(p)), saturating at UINT64_MAX.
inline std::uint64_t projective_count(std::uint64_t p, std::size_t n) {
  unsigned __int128 total = 0;
  unsigned __int128 pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    pw *= p;
    if (total > UINT64_MAX || pw > (static_cast<unsigned __int128>(1) << 100)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

/// All linear forms over GF(p) up to scaling: first nonzero coefficient 1.
inline std::vector<LinearForm> enumerate_projective_forms(const Ring& ring) {
  const FieldSpec field = ring->field();
  if (!field.is_prime_field()) throw Error(Errc::invalid_argument, "enumeration needs a finite field");
  const std::size_t n = ring->num_vars();
  const std::uint64_t p = field.modulus();
  std::vector<LinearForm> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint64_t> tail(n - lead - 1, 0);
    while (true) {
      HomogeneousForm f(ring, 1);
      f.add_term(Monomial::variable(n, lead), Scalar::one(field));
      for (std::size_t k = 0; k < tail.size(); ++k) {
        f.add_term(Monomial::variable(n, lead + 1 + k), Scalar::from_int(field, static_cast<long long>(tail[k])));
      }
      out.push_back(LinearForm{std::move(f), Provenance::exhaustive, 0, out.size()});
      std::size_t k = tail.size();
      while (k > 0 && tail[k - 1] + 1 == p) tail[--k] = 0;
      if (k == 0) break;
      ++tail[k - 1];
    }
  }
  return out;
}

inline LinearForm random_linear_form(const Ring& ring, std::uint64_t seed, std::size_t index, std::uint64_t bound) {
  Rng rng(seed + index);
  const std::size_t n = ring->num_vars();
  HomogeneousForm f(ring, 1);
  for (std::size_t i = 0; i < n; ++i) f.add_term(Monomial::variable(n, i), random_scalar(ring->field(), rng, bound));
  return LinearForm{std::move(f), Provenance::sampled, seed, index};
}

/// Candidates for a general linear form: num_samples seeded random forms
/// (sample i uses seed + i), or every projective form over a small GF(p).
inline std::vector<LinearForm> sample_general_form(const Ring& ring, const SamplingOptions& opts = {}) {
  if (opts.num_samples < 1) throw Error(Errc::invalid_argument, "num_samples must be >= 1");
  const FieldSpec field = ring->field();
  if (field.is_prime_field()) {
    const std::uint64_t count = projective_count(field.modulus(), ring->num_vars());
    if (count <= kExhaustiveLimit || (opts.force_exhaustive && count <= (std::uint64_t{1} << 20))) {
      return enumerate_projective_forms(ring);
    }
  }
  std::vector<LinearForm> out;
  for (std::size_t i = 0; i < opts.num_samples; ++i) out.push_back(random_linear_form(ring, opts.seed, i, opts.bound));
  return out;
}

struct MultiplicationMap {
  int degree = 0;
  int power = 1;
  std::vector<Vec> matrix;  // h_{d+s} rows, h_d columns
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
};

/// Matrix of x L^s : A_d -> A_{d+s} in standard-monomial coordinates.
inline MultiplicationMap mult_map(const QuotientAlgebra& A, const HomogeneousForm& L, int d, int s = 1) {
  if (d < 0 || s < 1) throw Error(Errc::invalid_argument, "mult_map needs d >= 0, s >= 1");
  MultiplicationMap out;
  out.degree = d;
  out.power = s;
  out.cols = static_cast<std::size_t>(A.h(d));
  out.rows = static_cast<std::size_t>(A.h(d + s));
  if (out.cols == 0 || out.rows == 0) {
    out.matrix.assign(out.rows, zero_vec(A.field(), out.cols));
    return out;
  }
  const HomogeneousForm Ls = power(L, s);
  std::vector<Vec> columns;
  for (const Monomial& m : A.quotient_basis(d)) columns.push_back(A.standard_coords(d + s, monomial_times_coords(m, Ls)));
  out.matrix = columns_to_rows(A.field(), out.rows, columns);
  out.rank = rank(A.field(), out.matrix);
  return out;
}

inline MultiplicationMap mult_map(const QuotientAlgebra& A, const LinearForm& L, int d, int s = 1) {
  return mult_map(A, L.form, d, s);
}

/// Forms w in A_d with L^s w = 0, lifted to R_d through standard monomials.
inline std::vector<HomogeneousForm> kernel_forms(const QuotientAlgebra& A, const MultiplicationMap& map) {
  const Echelon e = row_echelon(A.field(), map.cols, map.matrix);
  std::vector<HomogeneousForm> out;
  for (const Vec& v : e.nullspace()) out.push_back(A.lift(map.degree, v));
  return out;
}

/// L^s w in I and w not in I.
inline bool verify_kernel_witness(const QuotientAlgebra& A, const HomogeneousForm& L, const HomogeneousForm& w, int s = 1) {
  if (w.is_zero() || A.ideal().contains(w)) return false;
  return A.ideal().contains(multiply(power(L, s), w));
}

inline const char* expectation_label(std::int64_t h_src, std::int64_t h_dst) {
  if (h_src < h_dst) return "injective";
  if (h_src > h_dst) return "surjective";
  return "bijective-expected";
}

struct DegreeRow {
  int degree = 0;
  int power = 1;
  std::int64_t h_source = 0;
  std::int64_t h_target = 0;
  std::int64_t expected = 0;
  std::int64_t achieved = 0;
  std::string expectation;
  bool inferred = false;
  std::vector<std::int64_t> profile;  // rank per candidate form, empty when inferred
};

struct Witness {
  int degree = 0;
  int power = 1;
  HomogeneousForm linear_form;
  std::optional<HomogeneousForm> kernel_form;
  std::int64_t kernel_dim = 0;
  std::int64_t cokernel_dim = 0;
  bool verified = false;
};

struct SamplingInfo {
  std::string field;
  std::string mode;  // "sampled", "exhaustive" or "user_given"
  std::size_t num_forms = 0;
  std::uint64_t seed = 0;
  std::uint64_t bound = 0;
};

struct LefschetzReport {
  bool strong = false;
  bool has_property = true;
  HilbertSeq hilbert;
  std::vector<DegreeRow> rows;
  std::vector<int> failing_degrees;
  std::optional<Witness> witness;
  SamplingInfo sampling;
  bool used_shortcut = false;
  std::optional<int> pivotal_degree;
  std::vector<std::string> notes;
};

struct LefschetzOptions {
  SamplingOptions sampling;
  bool use_level_shortcut = false;
  /// Candidate forms to use instead of sampling.
  std::vector<LinearForm> forms;
};

namespace detail {

inline SamplingInfo sampling_info(const QuotientAlgebra& A, const std::vector<LinearForm>& forms, const SamplingOptions& o) {
  SamplingInfo s;
  s.field = A.field().to_string();
  s.mode = forms.empty() ? "sampled" : provenance_name(forms.front().provenance);
  s.num_forms = forms.size();
  if (s.mode == std::string("sampled")) {
    s.seed = o.seed;
    s.bound = o.bound;
  }
  return s;
}

struct RankResult {
  DegreeRow row;
  std::size_t best = 0;
};

inline RankResult scan_degree(const QuotientAlgebra& A, const std::vector<LinearForm>& forms, int d, int s) {
  RankResult r;
  r.row.degree = d;
  r.row.power = s;
  r.row.h_source = A.h(d);
  r.row.h_target = A.h(d + s);
  r.row.expected = std::min(r.row.h_source, r.row.h_target);
  r.row.expectation = expectation_label(r.row.h_source, r.row.h_target);
  r.row.achieved = -1;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto rk = static_cast<std::int64_t>(mult_map(A, forms[i], d, s).rank);
    r.row.profile.push_back(rk);
    if (rk > r.row.achieved) {
      r.row.achieved = rk;
      r.best = i;
    }
  }
  return r;
}

inline Witness make_witness(const QuotientAlgebra& A, const LinearForm& L, int d, int s) {
  const MultiplicationMap map = mult_map(A, L, d, s);
  Witness w;
  w.degree = d;
  w.power = s;
  w.linear_form = L.form;
  w.kernel_dim = static_cast<std::int64_t>(map.cols - map.rank);
  w.cokernel_dim = static_cast<std::int64_t>(map.rows - map.rank);
  const auto ker = kernel_forms(A, map);
  if (!ker.empty()) w.kernel_form = ker.front();
  w.verified = w.kernel_form ? verify_kernel_witness(A, L.form, *w.kernel_form, s) : w.cokernel_dim > 0;
  return w;
}

}  // namespace detail

/// Weak Lefschetz check: for d = 0..e-1 the best rank of x L over the
/// candidate forms against min(h_d, h_{d+1}).
inline LefschetzReport wlp_check(const QuotientAlgebra& A, const LefschetzOptions& opts = {}) {
  const std::vector<LinearForm> forms = opts.forms.empty() ? sample_general_form(A.ring(), opts.sampling) : opts.forms;
  LefschetzReport rep;
  rep.hilbert = A.hilbert();
  rep.sampling = detail::sampling_info(A, forms, opts.sampling);
  const int e = A.socle_degree();

  if (opts.use_level_shortcut && A.classification().is_level && e >= 1) {
    int d0 = 0;
    while (d0 < e && A.h(d0) < A.h(d0 + 1)) ++d0;
    const auto surj = detail::scan_degree(A, forms, d0, 1);
    const bool surj_ok = surj.row.achieved == surj.row.expected;
    std::optional<detail::RankResult> inj;
    if (d0 >= 1) inj = detail::scan_degree(A, forms, d0 - 1, 1);
    const bool inj_ok = !inj || inj->row.achieved == inj->row.expected;
    if (surj_ok && inj_ok) {
      rep.used_shortcut = true;
      rep.pivotal_degree = d0;
      for (int d = 0; d < e; ++d) {
        if (d == d0) {
          rep.rows.push_back(surj.row);
        } else if (inj && d == d0 - 1) {
          rep.rows.push_back(inj->row);
        } else {
          DegreeRow row;
          row.degree = d;
          row.h_source = A.h(d);
          row.h_target = A.h(d + 1);
          row.expected = std::min(row.h_source, row.h_target);
          row.achieved = row.expected;
          row.expectation = expectation_label(row.h_source, row.h_target);
          row.inferred = true;
          rep.rows.push_back(row);
        }
      }
      rep.notes.push_back("surjective at d0 = " + std::to_string(d0) + " implies surjective for all d >= d0");
      if (d0 >= 2) {
        rep.notes.push_back("level and injective at d0 - 1 implies injective for all d < d0");
      }
      return rep;
    }
    rep.notes.push_back("shortcut inconclusive at pivotal degree " + std::to_string(d0) + "; full scan");
  }

  for (int d = 0; d < e; ++d) {
    const auto r = detail::scan_degree(A, forms, d, 1);
    rep.rows.push_back(r.row);
    if (r.row.achieved < r.row.expected) {
      rep.failing_degrees.push_back(d);
      if (!rep.witness) rep.witness = detail::make_witness(A, forms[r.best], d, 1);
    }
  }
  rep.has_property = rep.failing_degrees.empty();
  return rep;
}

/// Strong Lefschetz check over every (d, s) with s >= 1 and d + s <= e.
inline LefschetzReport slp_check(const QuotientAlgebra& A, const LefschetzOptions& opts = {}) {
  const std::vector<LinearForm> forms = opts.forms.empty() ? sample_general_form(A.ring(), opts.sampling) : opts.forms;
  LefschetzReport rep;
  rep.strong = true;
  rep.hilbert = A.hilbert();
  rep.sampling = detail::sampling_info(A, forms, opts.sampling);
  const int e = A.socle_degree();
  for (int s = 1; s <= e; ++s) {
    for (int d = 0; d + s <= e; ++d) {
      const auto r = detail::scan_degree(A, forms, d, s);
      rep.rows.push_back(r.row);
      if (r.row.achieved < r.row.expected) {
        if (std::find(rep.failing_degrees.begin(), rep.failing_degrees.end(), d) == rep.failing_degrees.end()) {
          rep.failing_degrees.push_back(d);
        }
        if (!rep.witness) rep.witness = detail::make_witness(A, forms[r.best], d, s);
      }
    }
  }
  std::sort(rep.failing_degrees.begin(), rep.failing_degrees.end());
  rep.has_property = rep.failing_degrees.empty();
  return rep;
}

/// Hilbert function of R/(I, L).
inline HilbertSeq quotient_by_linear_hf(const QuotientAlgebra& A, const HomogeneousForm& L) {
  return hilbert_function(A.ideal().plus(L), A.socle_degree() + 2);
}

inline HilbertSeq quotient_by_linear_hf(const QuotientAlgebra& A, const LinearForm& L) {
  return quotient_by_linear_hf(A, L.form);
}

/// max(h_d - h_{d-1}, 0) for every d.
inline HilbertSeq positive_first_difference(const HilbertSeq& h) {
  std::vector<std::int64_t> out;
  for (int d = 0; d <= h.socle_degree(); ++d) out.push_back(std::max<std::int64_t>(h[d] - h[d - 1], 0));
  return HilbertSeq(out);
}

struct GcdCriterionResult {
  int a = 0;
  int b = 0;
  std::int64_t quotient_dim = 0;  // dim [R/(J,L)]_b, minimized over the candidate forms
  HomogeneousForm gcd;
  int gcd_degree = 0;
  bool consistent = false;
  std::size_t num_forms = 0;
};

/// Compares dim [R/(J,L)]_b with the degree of gcd(F, G1, G2) for
/// J = (F, G1, G2), deg F = a >= 2, deg G_i = b >= a: a GCD of degree a-1
/// goes with dimension a-1, otherwise the dimension is a-2.
inline GcdCriterionResult gcd_criterion_check(const GradedIdeal& J, const LefschetzOptions& opts = {},
                                              bool allow_positive_char = false) {
  const Ring& ring = J.ring();
  if (ring->field().characteristic() != 0 && !allow_positive_char) {
    throw Error(Errc::char_not_zero, "the criterion is stated in characteristic 0");
  }
  std::vector<HomogeneousForm> gens = J.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const auto& x, const auto& y) { return x.degree() < y.degree(); });
  if (gens.size() != 3) throw Error(Errc::wrong_shape, "need exactly three generators F, G1, G2");
  const int a = gens[0].degree();
  const int b = gens[1].degree();
  if (a < 2 || gens[2].degree() != b || b < a) {
    throw Error(Errc::wrong_shape, "need deg F = a >= 2 and deg G1 = deg G2 = b >= a");
  }
  std::size_t minimal = 0;
  for (int d = 0; d <= b; ++d) minimal += J.num_minimal_generators(d);
  if (minimal != 3) throw Error(Errc::wrong_shape, "generators are not minimal");

  const std::vector<LinearForm> forms = opts.forms.empty() ? sample_general_form(ring, opts.sampling) : opts.forms;
  GcdCriterionResult out;
  out.a = a;
  out.b = b;
  out.num_forms = forms.size();
  out.quotient_dim = -1;
  for (const auto& L : forms) {
    const auto dim = static_cast<std::int64_t>(ring->dim(b) - J.plus(L.form).component(b).rank());
    if (out.quotient_dim < 0 || dim < out.quotient_dim) out.quotient_dim = dim;
  }
  out.gcd = gcd_forms(std::span<const HomogeneousForm>(gens));
  out.gcd_degree = out.gcd.degree();
  out.consistent = out.gcd_degree == a - 1 ? out.quotient_dim == a - 1 : out.quotient_dim == a - 2;
  return out;
}

}  // namespace wlpkit
