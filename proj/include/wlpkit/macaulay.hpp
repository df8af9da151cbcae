#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wlpkit/error.hpp"

namespace wlpkit {

/// C(m, q), zero whenever m < q or q < 0. Throws on int64 overflow.
inline std::int64_t binomial(std::int64_t m, std::int64_t q) {
  if (q < 0 || m < q) return 0;
  q = std::min(q, m - q);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= q; ++i) {
    r = r * static_cast<unsigned __int128>(m - q + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(INT64_MAX)) throw Error(Errc::overflow, "binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

struct BinomialTerm {
  std::int64_t top;
  std::int64_t bottom;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j) with n_i > ... > n_j >= j >= 1.
struct BinomialExpansion {
  std::vector<BinomialTerm> terms;

  std::int64_t value() const {
    std::int64_t s = 0;
    for (const auto& t : terms) s += binomial(t.top, t.bottom);
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      s += "C(" + std::to_string(t.top) + "," + std::to_string(t.bottom) + ")";
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

/// The greedy i-binomial expansion. n = 0 yields the empty expansion.
inline BinomialExpansion binomial_expansion(std::int64_t n, std::int64_t i) {
  if (n < 0 || i < 1) throw Error(Errc::invalid_argument, "binomial_expansion needs n >= 0, i >= 1");
  BinomialExpansion e;
  while (n > 0 && i >= 1) {
    std::int64_t top = i;
    while (binomial(top + 1, i) <= n) ++top;
    e.terms.push_back({top, i});
    n -= binomial(top, i);
    --i;
  }
  return e;
}

/// (n_(i))^b_a: every term C(n_k, k) becomes C(n_k + b, k + a).
inline std::int64_t expansion_shift(const BinomialExpansion& e, std::int64_t a, std::int64_t b) {
  std::int64_t s = 0;
  for (const auto& t : e.terms) s += binomial(t.top + b, t.bottom + a);
  return s;
}

/// Largest admissible h_{d+1} given h_d = n.
inline std::int64_t macaulay_bound(std::int64_t n, std::int64_t d) {
  if (n == 0) return 0;
  return expansion_shift(binomial_expansion(n, d), 1, 1);
}

/// Upper bound for the Hilbert function of A/LA in degree d.
inline std::int64_t green_bound(std::int64_t n, std::int64_t d) {
  if (n == 0) return 0;
  return expansion_shift(binomial_expansion(n, d), 0, -1);
}

/// h_{d+s} under maximal growth from h_d = n.
inline std::int64_t gotzmann_growth(std::int64_t n, std::int64_t d, std::int64_t s) {
  if (s < 0) throw Error(Errc::invalid_argument, "gotzmann_growth needs s >= 0");
  if (n == 0) return 0;
  return expansion_shift(binomial_expansion(n, d), s, s);
}

/// h_0, ..., h_e with trailing zeros trimmed.
class HilbertSeq {
 public:
  HilbertSeq() = default;
  HilbertSeq(std::initializer_list<std::int64_t> values) : values_(values) { trim(); }
  explicit HilbertSeq(std::vector<std::int64_t> values) : values_(std::move(values)) { trim(); }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Top nonzero degree; -1 for the zero sequence.
  int socle_degree() const noexcept { return static_cast<int>(values_.size()) - 1; }

  /// h_d, zero outside the stored range.
  std::int64_t operator[](int d) const {
    if (d < 0 || d >= static_cast<int>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(d)];
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const HilbertSeq&, const HilbertSeq&) = default;

 private:
  void trim() {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
    for (auto v : values_) {
      if (v < 0) throw Error(Errc::invalid_argument, "Hilbert values must be non-negative");
    }
  }

  std::vector<std::int64_t> values_;
};

namespace detail {

inline bool satisfies_macaulay(const std::vector<std::int64_t>& h) {
  for (std::size_t d = 1; d + 1 < h.size(); ++d) {
    if (h[d] < 0 || h[d + 1] < 0) return false;
    if (h[d + 1] > macaulay_bound(h[d], static_cast<std::int64_t>(d))) return false;
  }
  return std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v >= 0; });
}

inline void require_standard(const std::vector<std::int64_t>& h) {
  if (h.empty() || h[0] != 1) throw Error(Errc::not_standard, "sequence must start with h_0 = 1");
}

}  // namespace detail

/// Macaulay's bound holds for every d >= 1.
inline bool is_o_sequence(const std::vector<std::int64_t>& h) {
  detail::require_standard(h);
  return detail::satisfies_macaulay(h);
}

inline bool is_o_sequence(const HilbertSeq& h) { return is_o_sequence(h.values()); }

/// (h_0, h_1 - h_0, h_2 - h_1, ...), with h_{-1} = 0.
inline std::vector<std::int64_t> first_difference(const std::vector<std::int64_t>& h) {
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (auto v : h) {
    out.push_back(v - prev);
    prev = v;
  }
  return out;
}

inline std::vector<std::int64_t> first_difference(const HilbertSeq& h) { return first_difference(h.values()); }

inline bool is_differentiable(const std::vector<std::int64_t>& h) {
  detail::require_standard(h);
  const auto diff = first_difference(h);
  return detail::satisfies_macaulay(diff);
}

inline bool is_differentiable(const HilbertSeq& h) { return is_differentiable(h.values()); }

inline bool is_symmetric(const HilbertSeq& h) {
  const auto& v = h.values();
  return std::equal(v.begin(), v.end(), v.rbegin());
}

inline bool is_unimodal(const HilbertSeq& h) {
  const auto& v = h.values();
  std::size_t i = 1;
  while (i < v.size() && v[i] >= v[i - 1]) ++i;
  while (i < v.size() && v[i] <= v[i - 1]) ++i;
  return i >= v.size();
}

/// Symmetric, with an O-sequence first difference through degree floor(e/2).
inline bool is_si_sequence(const HilbertSeq& h) {
  detail::require_standard(h.values());
  if (!is_symmetric(h)) return false;
  const auto& v = h.values();
  const std::size_t half = static_cast<std::size_t>(h.socle_degree() / 2);
  std::vector<std::int64_t> first(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half + 1));
  return detail::satisfies_macaulay(first_difference(first));
}

}  // namespace wlpkit
