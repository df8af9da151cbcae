#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "wlpkit/linalg.hpp"
#include "wlpkit/macaulay.hpp"
#include "wlpkit/poly_gcd.hpp"
#include "wlpkit/polyring.hpp"

namespace wlpkit {

inline constexpr int kDefaultCap = 64;

/// Degree-d piece of an ideal: a reduced row echelon basis in the
/// coordinates of ring->basis(d).
struct DegreeBasis {
  int degree = 0;
  Echelon echelon;

  std::size_t rank() const noexcept { return echelon.rank(); }

  /// Indices (into ring->basis(d)) of the standard monomials.
  std::vector<std::size_t> standard_columns() const { return echelon.free_columns(); }

  std::vector<HomogeneousForm> forms(const Ring& ring) const {
    std::vector<HomogeneousForm> out;
    for (const Vec& row : echelon.rows()) out.push_back(HomogeneousForm::from_coords(ring, degree, row));
    return out;
  }
};

inline Echelon full_echelon(FieldSpec field, std::size_t dim) {
  Echelon e(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v = zero_vec(field, dim);
    v[i] = Scalar::one(field);
    e.insert(std::move(v));
  }
  return e;
}

/// Inserts x_i * (each row of prev) for every variable into target.
inline void insert_variable_multiples(const Ring& ring, int prev_degree, const Echelon& prev, Echelon& target) {
  const auto& basis = ring->basis(prev_degree);
  const std::size_t n = ring->num_vars();
  for (const Vec& row : prev.rows()) {
    for (std::size_t i = 0; i < n && !target.full(); ++i) {
      Vec v = zero_vec(ring->field(), target.cols());
      const Monomial xi = Monomial::variable(n, i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) v[ring->index_of(basis[j] * xi)] = row[j];
      }
      target.insert(std::move(v));
    }
  }
}

/// A homogeneous ideal. Copies share one component cache; the ideal itself
/// never changes after construction.
class GradedIdeal {
 public:
  GradedIdeal() = default;

  GradedIdeal(Ring ring, std::vector<HomogeneousForm> generators) : s_(std::make_shared<State>()) {
    s_->ring = std::move(ring);
    for (auto& g : generators) {
      if (!same_ring(s_->ring, g.ring())) throw Error(Errc::context_mismatch, "generator from another ring");
      if (g.is_zero()) continue;
      s_->gens.push_back(std::move(g));
    }
    s_->gens_known = true;
    s_->kind = Kind::generated;
  }

  /// Ideal known degreewise: components[d] for d <= top, everything in degrees
  /// above top (components.back() must be all of R_top). Generators are
  /// extracted lazily.
  static GradedIdeal from_components(Ring ring, std::vector<Echelon> components) {
    if (components.empty() || !components.back().full()) {
      throw Error(Errc::invalid_argument, "top component must be the full degree piece");
    }
    GradedIdeal I;
    I.s_ = std::make_shared<State>();
    I.s_->ring = std::move(ring);
    I.s_->kind = Kind::components;
    I.s_->preset = std::move(components);
    return I;
  }

  const Ring& ring() const { return s_->ring; }

  const std::vector<HomogeneousForm>& generators() const {
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    if (!s_->gens_known) {
      if (s_->kind == Kind::components) {
        s_->gens = extract_generators();
      } else {
        s_->gens = GradedIdeal(s_->base).generators();
        s_->gens.push_back(s_->extra);
      }
      s_->gens_known = true;
    }
    return s_->gens;
  }

  /// A degree from which I_d = R_d is known without computation, if any.
  std::optional<int> known_full_degree() const {
    switch (s_->kind) {
      case Kind::components: return static_cast<int>(s_->preset.size()) - 1;
      case Kind::sum: return GradedIdeal(s_->base).known_full_degree();
      case Kind::generated: break;
    }
    return std::nullopt;
  }

  int max_generator_degree() const {
    int m = -1;
    for (const auto& g : generators()) m = std::max(m, g.degree());
    return m;
  }

  const DegreeBasis& component(int d) const {
    if (d < 0) throw Error(Errc::invalid_argument, "negative degree");
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    auto it = s_->cache.find(d);
    if (it != s_->cache.end()) return *it->second;
    auto basis = std::make_unique<DegreeBasis>(DegreeBasis{d, compute(d)});
    return *s_->cache.emplace(d, std::move(basis)).first->second;
  }

  /// Number of minimal generators in degree d: dim I_d - dim (R_1 I_{d-1}).
  std::size_t num_minimal_generators(int d) const {
    const DegreeBasis& cd = component(d);
    if (d == 0) return cd.rank();
    Echelon span(ring()->field(), ring()->dim(d));
    insert_variable_multiples(ring(), d - 1, component(d - 1).echelon, span);
    return cd.rank() - span.rank();
  }

  /// I + (F), sharing this ideal's components.
  GradedIdeal plus(const HomogeneousForm& F) const {
    if (!same_ring(ring(), F.ring())) throw Error(Errc::context_mismatch, "form from another ring");
    GradedIdeal J;
    J.s_ = std::make_shared<State>();
    J.s_->ring = ring();
    J.s_->kind = Kind::sum;
    J.s_->base = s_;
    J.s_->extra = F;
    return J;
  }

  bool contains(const HomogeneousForm& f) const {
    if (f.is_zero()) return true;
    return component(f.degree()).echelon.contains(f.coords());
  }

 private:
  enum class Kind { generated, components, sum };
  struct State;

  explicit GradedIdeal(std::shared_ptr<State> s) : s_(std::move(s)) {}

  struct State {
    Ring ring;
    Kind kind = Kind::generated;
    std::vector<HomogeneousForm> gens;
    bool gens_known = false;
    std::vector<Echelon> preset;
    std::shared_ptr<State> base;
    HomogeneousForm extra;
    std::recursive_mutex mu;
    std::map<int, std::unique_ptr<DegreeBasis>> cache;
  };

  Echelon compute(int d) const {
    const FieldSpec field = ring()->field();
    const std::size_t dim = ring()->dim(d);
    switch (s_->kind) {
      case Kind::components: {
        const auto top = static_cast<int>(s_->preset.size()) - 1;
        return d <= top ? s_->preset[static_cast<std::size_t>(d)] : full_echelon(field, dim);
      }
      case Kind::sum: {
        Echelon e = GradedIdeal(s_->base).component(d).echelon;
        const int k = s_->extra.degree();
        if (d >= k && !s_->extra.is_zero()) {
          for (const Monomial& m : ring()->basis(d - k)) {
            if (e.full()) break;
            e.insert(monomial_times_coords(m, s_->extra));
          }
        }
        return e;
      }
      case Kind::generated:
        break;
    }
    Echelon e(field, dim);
    if (d > 0) {
      const Echelon& prev = component(d - 1).echelon;
      if (prev.full() && prev.cols() > 0) return full_echelon(field, dim);
      insert_variable_multiples(ring(), d - 1, prev, e);
    }
    for (const auto& g : s_->gens) {
      if (g.degree() == d) e.insert(g.coords());
    }
    return e;
  }

  std::vector<HomogeneousForm> extract_generators() const {
    std::vector<HomogeneousForm> out;
    const auto top = static_cast<int>(s_->preset.size()) - 1;
    for (int d = 0; d <= top; ++d) {
      const Echelon& cd = s_->preset[static_cast<std::size_t>(d)];
      Echelon span(ring()->field(), ring()->dim(d));
      if (d > 0) insert_variable_multiples(ring(), d - 1, s_->preset[static_cast<std::size_t>(d - 1)], span);
      for (const Vec& row : cd.rows()) {
        if (span.insert(row)) out.push_back(HomogeneousForm::from_coords(ring(), d, row));
      }
    }
    return out;
  }

  std::shared_ptr<State> s_;
};

inline GradedIdeal ideal_plus_form(const GradedIdeal& I, const HomogeneousForm& F) { return I.plus(F); }

inline const DegreeBasis& ideal_component(const GradedIdeal& I, int d) { return I.component(d); }

/// h_d = dim R_d - dim I_d until the first zero. Maximal growth at or past
/// the top generator degree persists forever (Gotzmann), which is reported as
/// NotArtinian without walking to the cap.
inline HilbertSeq hilbert_function(const GradedIdeal& I, int cap = kDefaultCap) {
  if (cap < 1) throw Error(Errc::invalid_argument, "cap must be >= 1");
  const Ring& ring = I.ring();
  const bool bounded = I.known_full_degree().has_value();
  const int top_gen = bounded ? 0 : I.max_generator_degree();
  std::vector<std::int64_t> h;
  for (int d = 0; d <= cap; ++d) {
    const auto hd = static_cast<std::int64_t>(ring->dim(d) - I.component(d).rank());
    if (hd == 0) return HilbertSeq(h);
    if (!bounded && d >= 2 && d - 1 >= top_gen && h.back() > 0 &&
        hd == macaulay_bound(h.back(), d - 1)) {
      throw Error(Errc::not_artinian, "Hilbert function grows maximally from degree " + std::to_string(d - 1));
    }
    h.push_back(hd);
  }
  throw Error(Errc::not_artinian, "h(" + std::to_string(cap) + ") > 0");
}

struct Classification {
  int codim = 0;
  int initial_degree = 0;
  int socle_degree = 0;
  bool is_level = false;
  bool is_gorenstein = false;
  int type = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// R/I for an artinian I, with Hilbert function, standard monomials, socle
/// and classification computed on construction.
class QuotientAlgebra {
 public:
  QuotientAlgebra() = default;

  explicit QuotientAlgebra(GradedIdeal ideal, int cap = kDefaultCap)
      : ideal_(std::move(ideal)), hilbert_(hilbert_function(ideal_, cap)) {
    const int e = socle_degree();
    for (int d = 0; d <= e + 1; ++d) standard_.push_back(ideal_.component(d).standard_columns());
    compute_socle();
    classify_self();
  }

  const GradedIdeal& ideal() const noexcept { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  FieldSpec field() const { return ring()->field(); }
  const HilbertSeq& hilbert() const noexcept { return hilbert_; }
  int socle_degree() const noexcept { return hilbert_.socle_degree(); }
  std::int64_t h(int d) const { return hilbert_[d]; }
  const std::vector<std::int64_t>& socle_dims() const noexcept { return socle_; }
  const Classification& classification() const noexcept { return class_; }

  const std::vector<std::size_t>& standard_columns(int d) const {
    static const std::vector<std::size_t> empty;
    if (d < 0 || d >= static_cast<int>(standard_.size())) return empty;
    return standard_[static_cast<std::size_t>(d)];
  }

  std::vector<Monomial> quotient_basis(int d) const {
    std::vector<Monomial> out;
    const auto& basis = ring()->basis(d);
    for (std::size_t j : standard_columns(d)) out.push_back(basis[j]);
    return out;
  }

  /// Coordinates in the standard-monomial basis of A_d of a vector given in R_d coordinates.
  Vec standard_coords(int d, Vec full) const {
    const auto& cols = standard_columns(d);
    if (cols.empty()) return {};
    full = ideal_.component(d).echelon.reduce(std::move(full));
    Vec out;
    out.reserve(cols.size());
    for (std::size_t j : cols) out.push_back(std::move(full[j]));
    return out;
  }

  /// Lifts standard-monomial coordinates back to a form in R_d.
  HomogeneousForm lift(int d, const Vec& coords) const {
    Vec full = zero_vec(field(), ring()->dim(d));
    const auto& cols = standard_columns(d);
    for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = coords[i];
    return HomogeneousForm::from_coords(ring(), d, full);
  }

 private:
  void compute_socle() {
    const int e = socle_degree();
    const std::size_t n = ring()->num_vars();
    socle_.assign(static_cast<std::size_t>(e + 1), 0);
    for (int d = 0; d <= e; ++d) {
      const auto hd = static_cast<std::size_t>(h(d));
      if (h(d + 1) == 0) {
        socle_[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(hd);
        continue;
      }
      // Stack the n multiplication maps A_d -> A_{d+1} and take the kernel.
      const auto& basis = ring()->basis(d);
      std::vector<Vec> columns;
      for (std::size_t j : standard_columns(d)) {
        Vec col;
        for (std::size_t i = 0; i < n; ++i) {
          Vec full = zero_vec(field(), ring()->dim(d + 1));
          full[ring()->index_of(basis[j] * Monomial::variable(n, i))] = Scalar::one(field());
          Vec part = standard_coords(d + 1, std::move(full));
          col.insert(col.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        columns.push_back(std::move(col));
      }
      const std::size_t rows = n * static_cast<std::size_t>(h(d + 1));
      const std::size_t r = rank(field(), columns_to_rows(field(), rows, columns));
      socle_[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(hd - r);
    }
  }

  void classify_self() {
    const int e = socle_degree();
    class_.codim = static_cast<int>(h(1));
    class_.socle_degree = e;
    class_.initial_degree = e + 1;
    for (int d = 0; d <= e + 1; ++d) {
      if (ideal_.component(d).rank() > 0) {
        class_.initial_degree = d;
        break;
      }
    }
    std::int64_t total = 0;
    bool level = true;
    for (int d = 0; d <= e; ++d) {
      total += socle_[static_cast<std::size_t>(d)];
      if (d < e && socle_[static_cast<std::size_t>(d)] != 0) level = false;
    }
    class_.is_level = level;
    class_.type = static_cast<int>(total);
    class_.is_gorenstein = level && total == 1;
  }

  GradedIdeal ideal_;
  HilbertSeq hilbert_;
  std::vector<std::vector<std::size_t>> standard_;
  std::vector<std::int64_t> socle_;
  Classification class_;
};

inline std::vector<Monomial> quotient_basis(const QuotientAlgebra& A, int d) { return A.quotient_basis(d); }
inline const std::vector<std::int64_t>& socle(const QuotientAlgebra& A) { return A.socle_dims(); }
inline const Classification& classify(const QuotientAlgebra& A) { return A.classification(); }

/// (I : F)_d = {g in R_d : g F in I}.
inline DegreeBasis ideal_colon_form(const GradedIdeal& I, const HomogeneousForm& F, int d) {
  if (F.is_zero()) throw Error(Errc::invalid_argument, "colon by the zero form");
  const Ring& ring = I.ring();
  const FieldSpec field = ring->field();
  const int k = F.degree();
  const Echelon& target = I.component(d + k).echelon;
  const auto free_cols = target.free_columns();
  // Rows indexed by standard monomials of degree d+k, columns by R_d.
  const auto& basis = ring->basis(d);
  std::vector<Vec> rows(free_cols.size(), zero_vec(field, basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vec v = target.reduce(monomial_times_coords(basis[j], F));
    for (std::size_t i = 0; i < free_cols.size(); ++i) rows[i][j] = v[free_cols[i]];
  }
  const Echelon map = row_echelon(field, basis.size(), rows);
  return DegreeBasis{d, row_echelon(field, basis.size(), map.nullspace())};
}

/// The full ideal (I : F) for an artinian quotient A = R/I.
inline GradedIdeal colon_ideal(const QuotientAlgebra& A, const HomogeneousForm& F) {
  const int top = std::max(0, A.socle_degree() - F.degree() + 1);
  std::vector<Echelon> comps;
  for (int t = 0; t <= top; ++t) {
    DegreeBasis b = ideal_colon_form(A.ideal(), F, t);
    comps.push_back(std::move(b.echelon));
    if (comps.back().full()) break;
  }
  return GradedIdeal::from_components(A.ring(), std::move(comps));
}

/// GCD of a basis of I_d together with its degree (0 means no common factor).
inline std::pair<HomogeneousForm, int> component_gcd(const GradedIdeal& I, int d) {
  const DegreeBasis& b = I.component(d);
  if (b.rank() == 0) throw Error(Errc::empty_component, "I_" + std::to_string(d) + " = 0");
  const auto forms = b.forms(I.ring());
  HomogeneousForm g = gcd_forms(std::span<const HomogeneousForm>(forms));
  const int deg = g.degree();
  return {std::move(g), deg};
}

struct ExactSequenceCheck {
  bool degenerate = false;  // F in I
  bool holds = false;
  int shift = 0;            // deg F
  std::vector<std::int64_t> algebra;      // h_{R/I}(t)
  std::vector<std::int64_t> colon_shifted;  // h_{R/(I:F)}(t - deg F), zero for t < deg F
  std::vector<std::int64_t> plus_form;    // h_{R/(I,F)}(t)
};

/// Checks h_{R/I}(t) = h_{R/(I:F)}(t - deg F) + h_{R/(I,F)}(t) degreewise.
inline ExactSequenceCheck check_exact_sequence(const QuotientAlgebra& A, const HomogeneousForm& F) {
  ExactSequenceCheck out;
  const Ring& ring = A.ring();
  out.degenerate = A.ideal().contains(F);
  out.shift = F.degree();
  const GradedIdeal plus = A.ideal().plus(F);
  const int e = A.socle_degree();
  out.holds = true;
  for (int t = 0; t <= e + 1; ++t) {
    const auto dim = static_cast<std::int64_t>(ring->dim(t));
    const std::int64_t ha = A.h(t);
    std::int64_t hc = 0;
    if (t >= out.shift) {
      const int u = t - out.shift;
      hc = static_cast<std::int64_t>(ring->dim(u)) -
           static_cast<std::int64_t>(ideal_colon_form(A.ideal(), F, u).rank());
    }
    const std::int64_t hp = dim - static_cast<std::int64_t>(plus.component(t).rank());
    if (t <= e) {
      out.algebra.push_back(ha);
      out.colon_shifted.push_back(hc);
      out.plus_form.push_back(hp);
    }
    if (ha != hc + hp) out.holds = false;
  }
  return out;
}

}  // namespace wlpkit
