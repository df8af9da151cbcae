#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlpkit/error.hpp"
#include "wlpkit/field.hpp"
#include "wlpkit/linalg.hpp"

namespace wlpkit {

/// Number of monomials of degree d in n variables, C(n-1+d, n-1).
inline std::size_t num_monomials(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n-1+d, n-1) computed incrementally; every prefix product is an integer.
  unsigned __int128 r = 1;
  const std::size_t k = n - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (static_cast<std::size_t>(d) + i) / i;
    if (r > static_cast<unsigned __int128>(1) << 62) throw Error(Errc::overflow, "monomial count overflow");
  }
  return static_cast<std::size_t>(r);
}

struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

  static Monomial variable(std::size_t n, std::size_t i) {
    Monomial m = one(n);
    m.exps[i] = 1;
    return m;
  }

  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  std::size_t num_vars() const { return exps.size(); }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > o.exps[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
    return m;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= b.exps[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict "comes first" relation of the graded-lexicographic order with
/// x1 > x2 > ... > xn: higher degree first, then larger leading exponents.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
  }
};

class RingCtx;
using Ring = std::shared_ptr<const RingCtx>;

/// k[x1..xn]: field, variable names and per-degree monomial bases.
class RingCtx {
 public:
  RingCtx(FieldSpec field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
    if (names_.empty()) throw Error(Errc::invalid_argument, "a ring needs at least one variable");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error(Errc::invalid_argument, "variable names must be distinct");
  }

  static Ring make(FieldSpec field, std::vector<std::string> names) {
    return std::make_shared<const RingCtx>(field, std::move(names));
  }

  /// x1..xn (or any other prefix).
  static Ring make_indexed(FieldSpec field, std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make(field, std::move(names));
  }

  FieldSpec field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::size_t dim(int d) const { return num_monomials(names_.size(), d); }

  /// Monomials of degree d, largest first in graded-lex order.
  const std::vector<Monomial>& basis(int d) const {
    static const std::vector<Monomial> empty;
    if (d < 0) return empty;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bases_.find(d);
    if (it == bases_.end()) {
      auto v = std::make_unique<std::vector<Monomial>>();
      v->reserve(dim(d));
      std::vector<int> e(names_.size(), 0);
      enumerate(*v, e, 0, d);
      it = bases_.emplace(d, std::move(v)).first;
    }
    return *it->second;
  }

  /// Position of m inside basis(deg m), without enumerating the basis.
  std::size_t index_of(const Monomial& m) const {
    const std::size_t n = names_.size();
    int rem = m.degree();
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (int k = m.exps[i] + 1; k <= rem; ++k) idx += num_monomials(n - i - 1, rem - k);
      rem -= m.exps[i];
    }
    return idx;
  }

  /// Same number of variables and same field: enough for contraction pairings.
  bool compatible(const RingCtx& o) const { return field_ == o.field_ && num_vars() == o.num_vars(); }

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

  std::string to_string() const {
    std::string s = field_.to_string() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i) s += ",";
      s += names_[i];
    }
    return s + "]";
  }

 private:
  static void enumerate(std::vector<Monomial>& out, std::vector<int>& e, std::size_t i, int rem) {
    if (i + 1 == e.size()) {
      e[i] = rem;
      out.emplace_back(e);
      e[i] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[i] = k;
      enumerate(out, e, i + 1, rem - k);
    }
    e[i] = 0;
  }

  FieldSpec field_;
  std::vector<std::string> names_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<std::vector<Monomial>>> bases_;
};

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

inline std::vector<Monomial> monomial_basis(const Ring& ring, int d) { return ring->basis(d); }

inline std::string monomial_to_string(const RingCtx& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

/// A homogeneous polynomial of a declared degree, stored sparsely in
/// graded-lex order. Zero coefficients are never stored.
class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  HomogeneousForm() = default;
  HomogeneousForm(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {
    if (degree_ < 0) throw Error(Errc::invalid_argument, "negative degree");
  }

  static HomogeneousForm monomial(const Ring& ring, const Monomial& m, const Scalar& c) {
    HomogeneousForm f(ring, m.degree());
    f.add_term(m, c);
    return f;
  }

  static HomogeneousForm monomial(const Ring& ring, const Monomial& m) {
    return monomial(ring, m, Scalar::one(ring->field()));
  }

  static HomogeneousForm variable(const Ring& ring, std::size_t i) {
    return monomial(ring, Monomial::variable(ring->num_vars(), i));
  }

  static HomogeneousForm constant(const Ring& ring, const Scalar& c) {
    return monomial(ring, Monomial::one(ring->num_vars()), c);
  }

  /// Form with the given coordinates in ring->basis(d).
  static HomogeneousForm from_coords(const Ring& ring, int d, const Vec& coords) {
    HomogeneousForm f(ring, d);
    const auto& basis = ring->basis(d);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i].is_zero()) f.terms_.emplace(basis[i], coords[i]);
    }
    return f;
  }

  const Ring& ring() const noexcept { return ring_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(ring_->field()) : it->second;
  }

  /// Graded-lex leading term; the form must be nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Scalar& c) {
    if (m.degree() != degree_ || m.num_vars() != ring_->num_vars()) {
      throw Error(Errc::not_homogeneous, "term of the wrong degree or arity");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Vec coords() const {
    Vec v = zero_vec(ring_->field(), ring_->dim(degree_));
    for (const auto& [m, c] : terms_) v[ring_->index_of(m)] = c;
    return v;
  }

  HomogeneousForm scaled(const Scalar& c) const {
    HomogeneousForm f(ring_, degree_);
    if (c.is_zero()) return f;
    for (const auto& [m, a] : terms_) f.terms_.emplace(m, a * c);
    return f;
  }

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  HomogeneousForm monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  HomogeneousForm& operator-=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Canonical text: graded-lex order, `p/q` rational coefficients, `^` powers.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c.sign() < 0;
      const Scalar mag = negative ? -c : c;
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      const bool unit_monomial = m.degree() == 0;
      if (mag.is_one() && !unit_monomial) {
        s += monomial_to_string(*ring_, m);
      } else if (unit_monomial) {
        s += mag.to_string();
      } else {
        s += mag.to_string() + "*" + monomial_to_string(*ring_, m);
      }
      first = false;
    }
    return s;
  }

 private:
  void check_compatible(const HomogeneousForm& o) const {
    if (!same_ring(ring_, o.ring_)) throw Error(Errc::context_mismatch, "forms live in different rings");
    if (degree_ != o.degree_) throw Error(Errc::not_homogeneous, "adding forms of different degrees");
  }

  Ring ring_;
  int degree_ = 0;
  Terms terms_;
};

inline HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error(Errc::context_mismatch, "multiply across rings");
  HomogeneousForm out(f.ring(), f.degree() + g.degree());
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

inline HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) { return multiply(f, g); }

inline HomogeneousForm power(const HomogeneousForm& f, int k) {
  HomogeneousForm out = HomogeneousForm::constant(f.ring(), Scalar::one(f.ring()->field()));
  for (int i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

/// Coordinates of m * f in ring->basis(deg m + deg f), accumulated into a dense vector.
inline Vec monomial_times_coords(const Monomial& m, const HomogeneousForm& f) {
  const Ring& ring = f.ring();
  Vec v = zero_vec(ring->field(), ring->dim(m.degree() + f.degree()));
  for (const auto& [t, c] : f.terms()) v[ring->index_of(m * t)] += c;
  return v;
}

/// Divided-power contraction x^a o y^b = y^(b-a) (zero unless a <= b), no factorials.
inline HomogeneousForm contract(const Monomial& m, const HomogeneousForm& F) {
  if (m.num_vars() != F.ring()->num_vars()) throw Error(Errc::context_mismatch, "contraction arity");
  if (m.degree() > F.degree()) throw Error(Errc::degree_underflow, "contracting by a monomial of larger degree");
  HomogeneousForm out(F.ring(), F.degree() - m.degree());
  for (const auto& [t, c] : F.terms()) {
    if (m.divides(t)) out.add_term(t / m, c);
  }
  return out;
}

/// Bilinear extension of the monomial contraction. g lives in the primal ring.
inline HomogeneousForm contract(const HomogeneousForm& g, const HomogeneousForm& F) {
  if (!g.ring()->compatible(*F.ring())) throw Error(Errc::context_mismatch, "contraction across incompatible rings");
  if (g.degree() > F.degree()) throw Error(Errc::degree_underflow, "contracting by a form of larger degree");
  HomogeneousForm out(F.ring(), F.degree() - g.degree());
  for (const auto& [m, a] : g.terms()) {
    for (const auto& [t, c] : F.terms()) {
      if (m.divides(t)) out.add_term(t / m, a * c);
    }
  }
  return out;
}

/// True partial derivative with integer multipliers.
inline HomogeneousForm derivative(const HomogeneousForm& F, std::size_t var) {
  if (F.degree() == 0) return HomogeneousForm(F.ring(), 0);
  HomogeneousForm out(F.ring(), F.degree() - 1);
  for (const auto& [t, c] : F.terms()) {
    if (t.exps[var] == 0) continue;
    Monomial m = t;
    m.exps[var] -= 1;
    out.add_term(m, c * Scalar::from_int(F.ring()->field(), t.exps[var]));
  }
  return out;
}

}  // namespace wlpkit
