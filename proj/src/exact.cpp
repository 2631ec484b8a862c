#include "mixspec/exact.hpp"

namespace mixspec {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (quot * den < num) quot += 1;
  return quot;
}

}  // namespace mixspec
