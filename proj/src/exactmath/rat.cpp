#include "rext/rat.hpp"

#include <climits>
#include <string>

#include "rext/errors.hpp"

namespace rext {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InputError("empty rational literal");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw InputError("mixed '/' and '.' in \"" + s + "\"");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t scale = s.size() - dot - 1;
      if (digits.empty() || digits == "-") throw InputError("bad rational literal \"" + s + "\"");
      BigInt num(digits, 10);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      return make_rat(num, den);
    }
    Rat r(s, 10);
    if (r.get_den() == 0) throw InputError("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal \"" + s + "\"");
  }
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rat& r) { return sgn(r); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw InputError("expected a machine-size integer, got " + to_string(r));
  return r.get_num().get_si();
}

Rat rat_pow(const Rat& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rat(num, den);
}

Rat factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

}  // namespace rext
