#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "wlpkit/error.hpp"

namespace wlpkit {

using Rng = std::mt19937_64;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// The base field: the rationals, or GF(p) for a machine-word prime p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }

  static FieldSpec prime_field(std::uint64_t p) {
    if (p >= (1ULL << 63) || !detail::is_prime_u64(p)) {
      throw Error(Errc::non_prime_modulus, std::to_string(p) + " is not a supported prime");
    }
    FieldSpec f;
    f.modulus_ = p;
    return f;
  }

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime_field() const noexcept { return modulus_ != 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const {
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(modulus_) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept canonical by GMP; residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldSpec field) : field_(field) {}

  static Scalar from_int(FieldSpec field, long long value) {
    Scalar s(field);
    if (field.is_rational()) {
      s.q_ = static_cast<long>(value);
    } else {
      const auto p = static_cast<long long>(field.modulus());
      long long r = value % p;
      if (r < 0) r += p;
      s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
  }

  static Scalar from_mpz(FieldSpec field, const mpz_class& value) {
    Scalar s(field);
    if (field.is_rational()) {
      s.q_ = value;
    } else {
      const mpz_class p(static_cast<unsigned long>(field.modulus()));
      mpz_class m = value % p;
      if (m < 0) m += p;
      s.r_ = mpz_get_ui(m.get_mpz_t());
    }
    return s;
  }

  static Scalar from_fraction(FieldSpec field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
    if (field.is_rational()) {
      Scalar s(field);
      s.q_ = mpq_class(num, den);
      s.q_.canonicalize();
      return s;
    }
    return from_mpz(field, num) / from_mpz(field, den);
  }

  static Scalar one(FieldSpec field) { return from_int(field, 1); }

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }
  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

  /// Sign for printing; residues are never negative.
  int sign() const noexcept {
    if (field_.is_rational()) return sgn(q_);
    return r_ == 0 ? 0 : 1;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      const std::uint64_t p = field_.modulus();
      r_ = (r_ >= p - o.r_) ? r_ - (p - o.r_) : r_ + o.r_;
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ -= o.q_;
    } else {
      const std::uint64_t p = field_.modulus();
      r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + (p - o.r_);
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      r_ = detail::mulmod(r_, o.r_, field_.modulus());
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero in " + field_.to_string());
    if (field_.is_rational()) {
      q_ /= o.q_;
    } else {
      r_ = detail::mulmod(r_, o.inverse().r_, field_.modulus());
    }
    return *this;
  }

  /// this -= a * b, without a temporary Scalar.
  void sub_mul(const Scalar& a, const Scalar& b) {
    check(a);
    check(b);
    if (field_.is_rational()) {
      q_ -= a.q_ * b.q_;
    } else {
      const std::uint64_t p = field_.modulus();
      const std::uint64_t t = detail::mulmod(a.r_, b.r_, p);
      r_ = (r_ >= t) ? r_ - t : r_ + (p - t);
    }
  }

  Scalar inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    Scalar s(field_);
    if (field_.is_rational()) {
      s.q_ = 1 / q_;
    } else {
      // p is prime, so Fermat's little theorem gives the inverse.
      s.r_ = detail::powmod(r_, field_.modulus() - 2, field_.modulus());
    }
    return s;
  }

  Scalar operator-() const {
    Scalar s(field_);
    s -= *this;
    return s;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  std::string to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
  }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) {
      throw Error(Errc::field_mismatch, field_.to_string() + " vs " + o.field_.to_string());
    }
  }

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// Over QQ an integer uniform in [1, bound]; over GF(p) a uniform nonzero residue.
inline Scalar random_scalar(FieldSpec field, Rng& rng, std::uint64_t bound) {
  if (bound < 2) throw Error(Errc::invalid_argument, "random_scalar bound must be >= 2");
  if (field.is_rational()) {
    std::uniform_int_distribution<std::uint64_t> dist(1, bound);
    return Scalar::from_mpz(field, mpz_class(static_cast<unsigned long>(dist(rng))));
  }
  std::uniform_int_distribution<std::uint64_t> dist(1, field.modulus() - 1);
  return Scalar::from_mpz(field, mpz_class(static_cast<unsigned long>(dist(rng))));
}

/// Integer uniform in [lo, hi], mapped into the field.
inline Scalar random_integer_scalar(FieldSpec field, Rng& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return Scalar::from_int(field, dist(rng));
}

}  // namespace wlpkit
