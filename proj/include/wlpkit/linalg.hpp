#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wlpkit/field.hpp"

namespace wlpkit {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(FieldSpec field, std::size_t n) { return Vec(n, Scalar(field)); }

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// A subspace of k^cols kept in reduced row echelon form.
///
/// Rows are sorted by pivot column, every pivot entry is 1 and each pivot
/// column is zero in all other rows, so two Echelons span the same subspace
/// exactly when their rows compare equal.
class Echelon {
 public:
  Echelon() = default;
  Echelon(FieldSpec field, std::size_t cols) : field_(field), cols_(cols) {}

  /// Adopts rows already in reduced row echelon form, sorted by pivot.
  static Echelon from_rref(FieldSpec field, std::size_t cols, std::vector<Vec> rows, std::vector<std::size_t> pivots) {
    Echelon e(field, cols);
    e.rows_ = std::move(rows);
    e.pivots_ = std::move(pivots);
    return e;
  }

  FieldSpec field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Reduces v against the stored rows; the result has zeros in every pivot column.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (v[p].is_zero()) continue;
      const Scalar c = v[p];
      const Vec& row = rows_[i];
      for (std::size_t j = p; j < cols_; ++j) {
        if (!row[j].is_zero()) v[j].sub_mul(c, row[j]);
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(Vec v) {
    if (full()) return false;
    v = reduce(std::move(v));
    std::size_t lead = 0;
    while (lead < cols_ && v[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    const Scalar inv = v[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) {
      if (!v[j].is_zero()) v[j] *= inv;
    }
    for (Vec& row : rows_) {
      if (row[lead].is_zero()) continue;
      const Scalar c = row[lead];
      for (std::size_t j = lead; j < cols_; ++j) {
        if (!v[j].is_zero()) row[j].sub_mul(c, v[j]);
      }
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
      } else {
        out.push_back(j);
      }
    }
    return out;
  }

  /// Basis of {x : row . x = 0 for every row}, one vector per free column.
  std::vector<Vec> nullspace() const {
    std::vector<Vec> out;
    for (std::size_t f : free_columns()) {
      Vec x = zero_vec(field_, cols_);
      x[f] = Scalar::one(field_);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i][f].is_zero()) x[pivots_[i]] = -rows_[i][f];
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.field_ == b.field_ && a.cols_ == b.cols_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  FieldSpec field_;
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};


namespace detail {

// Fraction-free Gaussian elimination on an integer matrix. Every
// intermediate entry is a minor of the input, so the division is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline std::vector<std::vector<mpz_class>> integer_rows(const std::vector<Vec>& rows) {
  std::vector<std::vector<mpz_class>> m;
  m.reserve(rows.size());
  for (const Vec& row : rows) {
    mpz_class den = 1;
    for (const Scalar& s : row) {
      if (!s.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
    }
    std::vector<mpz_class> irow(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) irow[j] = row[j].rational().get_num() * (den / row[j].rational().get_den());
    }
    m.push_back(std::move(irow));
  }
  return m;
}

inline std::size_t modular_rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j].sub_mul(f, m[r][j]);
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Exact rank of a matrix given by rows. Over QQ each row is scaled to an
/// integer row and Bareiss elimination is used; over GF(p) plain elimination.
inline std::size_t rank(FieldSpec field, const std::vector<Vec>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  if (field.is_prime_field()) return detail::modular_rank(rows);
  auto m = detail::integer_rows(rows);
  return detail::bareiss_rank(std::move(m));
}

namespace detail {

// Fraction-free Gauss-Jordan elimination. On return the first r rows are the
// pivot rows, every pivot entry equals the same nonzero integer and pivot
// columns vanish outside their pivot row. Divisions are exact.
inline std::vector<std::size_t> fraction_free_gauss_jordan(std::vector<std::vector<mpz_class>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form of the span of rows. Over QQ the rows are
/// integerized and eliminated fraction-free, then scaled once by the pivot.
inline Echelon row_echelon(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows) {
  if (field.is_prime_field() || rows.empty()) {
    Echelon e(field, cols);
    for (const Vec& r : rows) e.insert(r);
    return e;
  }
  auto m = detail::integer_rows(rows);
  auto pivots = detail::fraction_free_gauss_jordan(m, cols);
  std::vector<Vec> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& d = m[i][pivots[i]];
    Vec v = zero_vec(field, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (m[i][j] != 0) v[j] = Scalar::from_fraction(field, m[i][j], d);
    }
    out.push_back(std::move(v));
  }
  return Echelon::from_rref(field, cols, std::move(out), std::move(pivots));
}

/// Basis of {x : row . x = 0 for every row}, one vector per free column. Over
/// QQ the vectors are integral with coprime entries.
inline std::vector<Vec> nullspace(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows) {
  if (field.is_prime_field() || rows.empty()) return row_echelon(field, cols, rows).nullspace();
  auto m = detail::integer_rows(rows);
  const auto pivots = detail::fraction_free_gauss_jordan(m, cols);
  std::vector<Vec> out;
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (k < pivots.size() && pivots[k] == f) {
      ++k;
      continue;
    }
    std::vector<mpz_class> x(cols);
    x[f] = pivots.empty() ? mpz_class(1) : m[0][pivots[0]];
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][f];
    mpz_class g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    Vec v = zero_vec(field, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (x[j] != 0) v[j] = Scalar::from_mpz(field, x[j] / g);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// rank modulo a fixed 61-bit prime, a lower bound for the rank over QQ.
inline std::size_t rank_mod_prime_lower_bound(const std::vector<Vec>& rows) {
  const FieldSpec p = FieldSpec::prime_field(2305843009213693951ULL);
  std::vector<Vec> m;
  m.reserve(rows.size());
  for (const Vec& row : rows) {
    Vec r;
    r.reserve(row.size());
    bool ok = true;
    for (const Scalar& s : row) {
      if (s.field().is_prime_field()) return rank(s.field(), rows);
      const mpz_class& den = s.rational().get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), 2305843009213693951ULL)) {
        ok = false;
        break;
      }
      r.push_back(Scalar::from_fraction(p, s.rational().get_num(), den));
    }
    if (ok) m.push_back(std::move(r));
  }
  return detail::modular_rank(std::move(m));
}

/// Transposes a column list into a row list (rows x cols).
inline std::vector<Vec> columns_to_rows(FieldSpec field, std::size_t rows, const std::vector<Vec>& columns) {
  std::vector<Vec> out(rows, zero_vec(field, columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) out[i][j] = columns[j][i];
  }
  return out;
}

}  // namespace wlpkit
