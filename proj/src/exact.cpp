#include "hibound/exact.hpp"

namespace hibound {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt acc = 1;
  // acc stays integral: after step j it equals C(n - r + j, j).
  for (std::int64_t j = 1; j <= r; ++j) {
    acc *= n - r + j;
    acc /= j;
  }
  return acc;
}

BigInt ceil(const ExactRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

}  // namespace hibound
