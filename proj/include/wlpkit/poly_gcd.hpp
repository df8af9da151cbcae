#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wlpkit/polyring.hpp"

namespace wlpkit {

namespace detail {

// Not necessarily homogeneous polynomial, used by the recursive GCD.
struct Poly {
  FieldSpec field;
  std::size_t n = 0;
  std::map<Monomial, Scalar, GrlexGreater> terms;

  Poly() = default;
  Poly(FieldSpec f, std::size_t nvars) : field(f), n(nvars) {}

  static Poly from_form(const HomogeneousForm& f) {
    Poly p(f.ring()->field(), f.ring()->num_vars());
    for (const auto& [m, c] : f.terms()) p.terms.emplace(m, c);
    return p;
  }

  static Poly constant(FieldSpec f, std::size_t nvars, const Scalar& c) {
    Poly p(f, nvars);
    if (!c.is_zero()) p.terms.emplace(Monomial::one(nvars), c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  int deg_in(std::size_t v) const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m.exps[v]);
    return d;
  }

  // Coefficient of x_v^k, as a polynomial not involving x_v.
  Poly coeff_in(std::size_t v, int k) const {
    Poly out(field, n);
    for (const auto& [m, c] : terms) {
      if (m.exps[v] != k) continue;
      Monomial r = m;
      r.exps[v] = 0;
      out.terms.emplace(r, c);
    }
    return out;
  }

  Poly times_monomial(const Monomial& t, const Scalar& c) const {
    Poly out(field, n);
    if (c.is_zero()) return out;
    for (const auto& [m, a] : terms) out.terms.emplace(m * t, a * c);
    return out;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const Scalar inv = terms.begin()->second.inverse();
    return times_monomial(Monomial::one(n), inv);
  }

  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.degree() == 0); }
};

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

inline Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, -c);
  return out;
}

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.field, a.n);
  for (const auto& [m1, c1] : a.terms) {
    for (const auto& [m2, c2] : b.terms) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Poly> divide_exact(Poly a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  Poly q(a.field, a.n);
  const Monomial& lb = b.terms.begin()->first;
  const Scalar lcb_inv = b.terms.begin()->second.inverse();
  while (!a.is_zero()) {
    const auto& [la, ca] = *a.terms.begin();
    if (!lb.divides(la)) return std::nullopt;
    const Monomial t = la / lb;
    const Scalar c = ca * lcb_inv;
    q.add_term(t, c);
    a = a - b.times_monomial(t, c);
  }
  return q;
}

Poly gcd_rec(const Poly& a, const Poly& b, int v);

// GCD of the coefficients of a with respect to x_v (a polynomial in x_0..x_{v-1}).
inline Poly content_in(const Poly& a, int v) {
  Poly g(a.field, a.n);
  const int d = a.deg_in(static_cast<std::size_t>(v));
  for (int k = d; k >= 0; --k) {
    Poly c = a.coeff_in(static_cast<std::size_t>(v), k);
    if (c.is_zero()) continue;
    g = gcd_rec(g, c, v - 1);
    if (g.is_constant()) break;
  }
  return g;
}

inline Poly primitive_part(const Poly& a, int v) {
  if (a.is_zero()) return a;
  return *divide_exact(a, content_in(a, v));
}

// Pseudo-remainder of a by b with respect to x_v.
inline Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
  const int db = b.deg_in(v);
  const Poly lcb = b.coeff_in(v, db);
  while (!a.is_zero()) {
    const int da = a.deg_in(v);
    if (da < db) break;
    const Poly lca = a.coeff_in(v, da);
    Monomial shift = Monomial::one(a.n);
    shift.exps[v] = da - db;
    a = lcb * a - (lca * b).times_monomial(shift, Scalar::one(a.field));
  }
  return a;
}

// GCD of polynomials involving only x_0..x_v, by a primitive remainder
// sequence in x_v over the coefficient ring k[x_0..x_{v-1}].
inline Poly gcd_rec(const Poly& a, const Poly& b, int v) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (v < 0 || a.is_constant() || b.is_constant()) return Poly::constant(a.field, a.n, Scalar::one(a.field));
  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd_rec(ca, cb, v - 1);
  Poly p = *divide_exact(a, ca);
  Poly q = *divide_exact(b, cb);
  const auto var = static_cast<std::size_t>(v);
  if (p.deg_in(var) < q.deg_in(var)) std::swap(p, q);
  while (!q.is_zero() && q.deg_in(var) > 0) {
    Poly r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_part(r, v).monic();
  }
  // q is a nonzero constant in x_v (coprime parts) or zero (p is the gcd).
  Poly g = q.is_zero() ? p : Poly::constant(a.field, a.n, Scalar::one(a.field));
  if (g.deg_in(var) <= 0) g = Poly::constant(a.field, a.n, Scalar::one(a.field));
  return (c * g).monic();
}

inline HomogeneousForm to_form(const Ring& ring, const Poly& p) {
  if (p.is_zero()) return HomogeneousForm(ring, 0);
  HomogeneousForm f(ring, p.terms.begin()->first.degree());
  for (const auto& [m, c] : p.terms) f.add_term(m, c);
  return f;
}

}  // namespace detail

/// A greatest common divisor of the forms, normalized to leading coefficient 1.
/// Degree 0 means the forms are coprime.
inline HomogeneousForm gcd_forms(std::span<const HomogeneousForm> forms) {
  if (forms.empty()) throw Error(Errc::all_zero, "gcd of an empty family");
  const Ring& ring = forms.front().ring();
  detail::Poly g(ring->field(), ring->num_vars());
  bool any = false;
  const int top = static_cast<int>(ring->num_vars()) - 1;
  for (const auto& f : forms) {
    if (!same_ring(ring, f.ring())) throw Error(Errc::context_mismatch, "gcd across rings");
    if (f.is_zero()) continue;
    any = true;
    g = detail::gcd_rec(g, detail::Poly::from_form(f), top);
    if (g.is_constant()) break;
  }
  if (!any) throw Error(Errc::all_zero, "gcd of zero forms");
  return detail::to_form(ring, g);
}

inline HomogeneousForm gcd_forms(std::initializer_list<HomogeneousForm> forms) {
  return gcd_forms(std::span<const HomogeneousForm>(forms.begin(), forms.size()));
}

/// f / g when g divides f exactly.
inline std::optional<HomogeneousForm> divide_exact(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error(Errc::context_mismatch, "division across rings");
  if (g.degree() > f.degree()) {
    if (f.is_zero()) return HomogeneousForm(f.ring(), 0);
    return std::nullopt;
  }
  auto q = detail::divide_exact(detail::Poly::from_form(f), detail::Poly::from_form(g));
  if (!q) return std::nullopt;
  HomogeneousForm out(f.ring(), f.degree() - g.degree());
  for (const auto& [m, c] : q->terms) out.add_term(m, c);
  return out;
}

/// det of the matrix of second partial derivatives, a form of degree n(deg F - 2).
inline HomogeneousForm hessian_det(const HomogeneousForm& F) {
  if (F.degree() < 2) throw Error(Errc::invalid_argument, "Hessian needs degree >= 2");
  const Ring& ring = F.ring();
  const std::uint64_t p = ring->field().characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(F.degree())) {
    throw Error(Errc::char_too_small, "characteristic " + std::to_string(p) + " <= degree");
  }
  const std::size_t n = ring->num_vars();
  std::vector<std::vector<HomogeneousForm>> h(n, std::vector<HomogeneousForm>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const HomogeneousForm di = derivative(F, i);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = derivative(di, j);
  }
  // Laplace expansion along rows, memoized on the set of unused columns.
  std::map<std::uint32_t, HomogeneousForm> memo;
  const int entry_degree = F.degree() - 2;
  auto det = [&](auto&& self, std::size_t row, std::uint32_t cols) -> HomogeneousForm {
    if (row == n) return HomogeneousForm::constant(ring, Scalar::one(ring->field()));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    HomogeneousForm acc(ring, entry_degree * static_cast<int>(n - row));
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1U << j))) continue;
      if (!h[row][j].is_zero()) {
        HomogeneousForm minor = self(self, row + 1, cols & ~(1U << j));
        HomogeneousForm term = multiply(h[row][j], minor);
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det(det, 0, (n >= 32) ? ~0U : ((1U << n) - 1U));
}

}  // namespace wlpkit
