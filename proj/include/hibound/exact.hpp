#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hibound {

using BigInt = boost::multiprecision::cpp_int;

/// Fraction of arbitrary-precision integers, always in lowest terms with a
/// positive denominator. Comparisons are exact.
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, r); zero when r < 0 or r > n.
BigInt binomial(std::int64_t n, std::int64_t r);

/// Smallest integer >= q.
BigInt ceil(const ExactRational& q);

}  // namespace hibound
