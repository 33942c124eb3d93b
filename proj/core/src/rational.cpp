#include "sopq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sopq {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw input_error("rat_parse: empty string");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;  // require digits after the slash too
    } else {
      throw input_error("rat_parse: malformed rational '" + s + "'");
    }
  }
  if (!seen_digit) throw input_error("rat_parse: malformed rational '" + s + "'");
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("rat_parse: malformed rational '" + s + "'");
  if (r.get_den() == 0) throw input_error("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_half_odd(const Rat& r) {
  Rat twice = 2 * r;
  return twice.get_den() == 1 && mpz_odd_p(twice.get_num().get_mpz_t());
}

std::string join_rat(const std::vector<Rat>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += rat_str(v[i]);
  }
  return out;
}

}  // namespace sopq
