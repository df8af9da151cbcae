#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace wlpkit;
using wlpkit::testing::kSuiteSeed;

namespace {

// Modular inverse via the extended Euclidean algorithm on plain integers.
long long euclid_inverse(long long a, long long p) {
  long long r0 = p, r1 = ((a % p) + p) % p;
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % p) + p) % p;
}

Scalar q(long long num, long long den = 1) {
  return Scalar::from_fraction(FieldSpec::rationals(), mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

// Rank of a small rational matrix as the largest nonvanishing minor (cofactor expansion).
mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const mpq_class term = m[0][j] * det(minor);
    out += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return out;
}

std::size_t minor_rank(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    // Every k-subset of rows and columns.
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<mpq_class> row;
          for (std::size_t j = 0; j < cols; ++j) {
            if (csel[j]) row.push_back(m[i][j]);
          }
          sub.push_back(row);
        }
        if (det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ((q(5, 6) - q(1, 2)).to_string(), "1/3");
  EXPECT_EQ(q(2, 4).to_string(), "1/2");
  EXPECT_EQ(q(-3, 6).to_string(), "-1/2");
}

TEST(Scalar, CharacteristicTwoKillsOnePlusOne) {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  EXPECT_TRUE((Scalar::one(f2) + Scalar::one(f2)).is_zero());
}

TEST(Scalar, DivisionInGF7MatchesEuclid) {
  const FieldSpec f7 = FieldSpec::prime_field(7);
  const Scalar r = Scalar::from_int(f7, 3) / Scalar::from_int(f7, 5);
  EXPECT_EQ(r.residue(), static_cast<std::uint64_t>((3 * euclid_inverse(5, 7)) % 7));
  EXPECT_EQ(r.residue(), 2U);
}

TEST(Scalar, EveryQuotientInSmallPrimeFieldsMatchesEuclid) {
  for (long long p : {2, 3, 5, 7, 11, 13, 31}) {
    const FieldSpec f = FieldSpec::prime_field(static_cast<std::uint64_t>(p));
    for (long long a = 0; a < p; ++a) {
      for (long long b = 1; b < p; ++b) {
        const Scalar r = Scalar::from_int(f, a) / Scalar::from_int(f, b);
        EXPECT_EQ(r.residue(), static_cast<std::uint64_t>((a * euclid_inverse(b, p)) % p)) << a << "/" << b << " mod " << p;
      }
    }
  }
}

TEST(Scalar, NegativeIntegersReduceToCanonicalResidues) {
  const FieldSpec f5 = FieldSpec::prime_field(5);
  EXPECT_EQ(Scalar::from_int(f5, -1).residue(), 4U);
  EXPECT_EQ(Scalar::from_int(f5, -10).residue(), 0U);
  EXPECT_EQ(Scalar::from_fraction(f5, -1, 2).residue(), 2U);
}

TEST(Scalar, ErrorsCarryTheirCodes) {
  const FieldSpec f7 = FieldSpec::prime_field(7);
  try {
    (void)(Scalar::one(f7) / Scalar(f7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
  try {
    (void)(Scalar::one(f7) + Scalar::one(FieldSpec::rationals()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::field_mismatch);
  }
  for (std::uint64_t bad : {0ULL, 1ULL, 4ULL, 91ULL}) {
    try {
      (void)FieldSpec::prime_field(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::non_prime_modulus);
    }
  }
}

TEST(Scalar, LargePrimeMultiplicationDoesNotOverflow) {
  const std::uint64_t p = 2305843009213693951ULL;
  const FieldSpec f = FieldSpec::prime_field(p);
  const Scalar a = Scalar::from_mpz(f, mpz_class("2305843009213693950"));
  EXPECT_TRUE((a * a).is_one());  // (-1)^2
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  Rng rng(kSuiteSeed);
  for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(101),
                            FieldSpec::prime_field(2305843009213693951ULL)}) {
    for (int i = 0; i < 200; ++i) {
      auto draw = [&] {
        const Scalar num = random_integer_scalar(f, rng, -1000, 1000);
        if (!f.is_rational()) return num;
        Scalar den = random_integer_scalar(f, rng, 1, 50);
        return num / den;
      };
      const Scalar a = draw(), b = draw(), c = draw();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      Scalar d = c;
      d.sub_mul(a, b);
      EXPECT_EQ(d, c - a * b);
    }
  }
}

TEST(Scalar, LongEliminationChainsStayInLowestTerms) {
  Rng rng(kSuiteSeed + 1);
  const FieldSpec f = FieldSpec::rationals();
  Scalar acc = Scalar::one(f);
  for (int i = 0; i < 300; ++i) {
    const Scalar x = random_integer_scalar(f, rng, -30, 30);
    const Scalar y = random_integer_scalar(f, rng, 1, 30);
    acc = (i % 3 == 0) ? acc + x / y : (i % 3 == 1 ? acc * (x / y + Scalar::one(f)) : acc - y / (x * x + Scalar::one(f)));
    if (acc.is_zero()) acc = Scalar::one(f);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), acc.rational().get_num_mpz_t(), acc.rational().get_den_mpz_t());
    ASSERT_EQ(g, 1);
    ASSERT_GT(acc.rational().get_den(), 0);
  }
}

TEST(RandomScalar, RespectsRangeAndSeed) {
  const FieldSpec qq = FieldSpec::rationals();
  Rng a(7), b(7);
  for (int i = 0; i < 500; ++i) {
    const Scalar s = random_scalar(qq, a, std::uint64_t{1} << 20);
    EXPECT_GE(s.rational(), 1);
    EXPECT_LE(s.rational(), 1 << 20);
    EXPECT_EQ(s.rational().get_den(), 1);
    EXPECT_EQ(s, random_scalar(qq, b, std::uint64_t{1} << 20));
  }
  const FieldSpec f2 = FieldSpec::prime_field(2);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(random_scalar(f2, a, 100).is_one());
  EXPECT_THROW((void)random_scalar(qq, a, 1), Error);
}

TEST(Linalg, RankMatchesMinorOracle) {
  Rng rng(kSuiteSeed + 2);
  const FieldSpec f = FieldSpec::rationals();
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    // Low-rank products make rank deficiency common.
    const std::size_t inner = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(inner)), b(inner, std::vector<mpq_class>(cols));
    std::uniform_int_distribution<int> val(-3, 3), den(1, 3);
    for (auto& r : a) {
      for (auto& v : r) v = mpq_class(val(rng), den(rng));
    }
    for (auto& r : b) {
      for (auto& v : r) v = mpq_class(val(rng), den(rng));
    }
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols, 0));
    std::vector<Vec> vm(rows, zero_vec(f, cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t k = 0; k < inner; ++k) m[i][j] += a[i][k] * b[k][j];
        m[i][j].canonicalize();
        vm[i][j] = Scalar::from_fraction(f, m[i][j].get_num(), m[i][j].get_den());
      }
    }
    const std::size_t oracle = minor_rank(m);
    EXPECT_EQ(rank(f, vm), oracle);
    EXPECT_EQ(row_echelon(f, cols, vm).rank(), oracle);
    EXPECT_LE(rank_mod_prime_lower_bound(vm), oracle);
  }
}

TEST(Linalg, EchelonIsCanonicalAcrossRoutesAndOrders) {
  Rng rng(kSuiteSeed + 3);
  for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t cols = 6;
      std::vector<Vec> rows;
      for (int i = 0; i < 4; ++i) {
        Vec v = zero_vec(f, cols);
        for (auto& s : v) s = random_integer_scalar(f, rng, -2, 2);
        rows.push_back(v);
      }
      rows.push_back(rows[0]);
      Echelon incremental(f, cols);
      for (const Vec& r : rows) incremental.insert(r);
      std::vector<Vec> shuffled = rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const Echelon batch = row_echelon(f, cols, shuffled);
      EXPECT_TRUE(incremental == batch);
      for (const Vec& r : rows) EXPECT_TRUE(batch.contains(r));
    }
  }
}

TEST(Linalg, NullspaceIsExactAndComplementary) {
  Rng rng(kSuiteSeed + 4);
  for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t cols = 7;
      std::vector<Vec> rows;
      for (int i = 0; i < 4; ++i) {
        Vec v = zero_vec(f, cols);
        for (auto& s : v) s = random_integer_scalar(f, rng, -3, 3);
        rows.push_back(v);
      }
      const std::vector<Vec> ns = nullspace(f, cols, rows);
      EXPECT_EQ(ns.size() + rank(f, rows), cols);
      for (const Vec& x : ns) {
        for (const Vec& r : rows) {
          Scalar dot(f);
          for (std::size_t j = 0; j < cols; ++j) dot += r[j] * x[j];
          EXPECT_TRUE(dot.is_zero());
        }
      }
      EXPECT_EQ(rank(f, ns), ns.size());
    }
  }
}
