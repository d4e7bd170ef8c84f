#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trv {

using Q = mpq_class;
using ExactScalar = Q;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRationalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "p", "-p", "p/q"; whitespace is not allowed. Throws InvalidRationalError.
Q parse_rational(const std::string& s);

// "p/q", or "p" when q = 1.
std::string to_string(const Q& q);

inline bool is_zero(const Q& a) { return sgn(a) == 0; }

Q binomial(long n, long k);
Q factorial(long n);

}  // namespace trv
