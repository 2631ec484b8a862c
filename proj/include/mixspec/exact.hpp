#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mixspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) with the convention that it vanishes outside 0 <= k <= n (any sign of n, k).
BigInt binomial(std::int64_t n, std::int64_t k);

inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Smallest integer >= q.
BigInt ceil(const Rational& q);

}  // namespace mixspec
