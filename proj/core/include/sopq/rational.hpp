#ifndef SOPQ_RATIONAL_HPP
#define SOPQ_RATIONAL_HPP

// Exact rational arithmetic. All spectral parameters, weights and operator
// coefficients in this library are rationals; nothing is ever rounded.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sopq {

// Bad user-facing input (the CLI maps this to exit code 2).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical consistency check failed (the CLI maps this to exit code 1).
struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rat = mpq_class;
using Int = mpz_class;

// num/den in canonical form.  (The two-argument mpq_class constructor does
// not canonicalize, so never use it directly.)
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form: "3/2", "-1/2", integers without denominator ("4").
std::string rat_str(const Rat& r);

// Parses the canonical text form (optionally signed, optional "/den").
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Binomial coefficient C(n, k), n >= k >= 0.
Int binomial(unsigned long n, unsigned long k);

// True if r is an integer.
bool is_integer(const Rat& r);

// True if 2r is an odd integer.
bool is_half_odd(const Rat& r);

std::string join_rat(const std::vector<Rat>& v, const std::string& sep);

}  // namespace sopq

#endif
