#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kdyck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when an internal consistency check fails (an inexact division,
// a generating function that is not a power series, ...). Signals a bug
// in this library, not bad caller input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Quotient num/den, requiring the division to be exact.
inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw internal_error("exact_div: zero divisor");
  Int q, r;
  divide_qr(num, den, q, r);
  if (r != 0)
    throw internal_error("exact_div: " + num.str() + " is not divisible by " + den.str());
  return q;
}

// C(n, r) by the descending product n-r+1, ..., n over 1, ..., r; every
// intermediate division is exact. Returns 0 for r outside 0..n.
inline Int binomial(long long n, long long r) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Int result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result = exact_div(result, Int(i));
  }
  return result;
}

}  // namespace kdyck
