#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace collatz {

// The space is N = {1, 2, 3, ...}. Values are arbitrary precision; every
// operation that could leave N is checked by its caller.
using Nat = mpz_class;
using Int = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
// mpq_class keeps arithmetic results canonical; construct through make_ratio
// when building from raw numerator/denominator.
using Ratio = mpq_class;

inline Ratio make_ratio(const Int& num, const Int& den) {
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

inline Ratio make_ratio(long num, long den = 1) {
  return make_ratio(Int(num), Int(den));
}

// rho^k for k >= 0
inline Ratio pow_ratio(const Ratio& base, unsigned long k) {
  Ratio out(1);
  Ratio b = base;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

// "p/q" with the denominator always spelled out ("3/1", "17/8", "-5/4").
inline std::string ratio_string(const Ratio& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double ratio_double(const Ratio& r) { return r.get_d(); }

// Accepts "p/q" and plain "p".
inline Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_ratio(Int(text), Int(1));
  return make_ratio(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

// Finite subsets of N are kept as sorted, duplicate-free vectors so that
// reports and set algebra are deterministic.
using NatSet = std::vector<Nat>;

inline NatSet make_set(std::vector<Nat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

inline NatSet make_set(std::initializer_list<long> values) {
  std::vector<Nat> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return make_set(std::move(v));
}

inline bool set_contains(const NatSet& s, const Nat& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline NatSet set_union(const NatSet& a, const NatSet& b) {
  NatSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline NatSet set_intersection(const NatSet& a, const NatSet& b) {
  NatSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline NatSet set_difference(const NatSet& a, const NatSet& b) {
  NatSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool set_subset(const NatSet& a, const NatSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace collatz
