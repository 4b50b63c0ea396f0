#pragma once

#include <optional>
#include <string>

#include "rext/poly.hpp"

namespace rext {

/// Reduced quotient of polynomials: gcd(num, den) = 1 and den monic.
class RatFun {
 public:
  RatFun() : num_({}, Var::x), den_(Poly::constant(1)) {}
  RatFun(const Poly& p);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  static RatFun constant(const Rat& c, Var var = Var::x);
  /// Skips the gcd; the caller guarantees gcd(num, den) = 1.
  static RatFun coprime(Poly num, Poly den) { return RatFun(std::move(num), std::move(den), Reduced{}); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Var var() const { return num_.degree() > 0 ? num_.var() : den_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rat> constant_value() const;

  RatFun derivative() const;
  /// Throws EvaluationError at a pole.
  Rat eval(const Rat& t) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  // Caller guarantees gcd(num, den) = 1; only the leading coefficient is fixed.
  RatFun(Poly num, Poly den, Reduced);
  void reduce();
  void make_den_monic();

  Poly num_;
  Poly den_;
};

/// Reduces an arbitrary quotient (exposed for the idempotence check).
RatFun reduce(const RatFun& f);

/// The constant c with a - b == c, if the difference is constant.
std::optional<Rat> ratfun_sub_constant_check(const RatFun& a, const RatFun& b);

/// -2 (log p)'' = -2 (p p'' - p'^2) / p^2 for a nonzero polynomial p.
RatFun minus_two_log_second_derivative(const Poly& p);

}  // namespace rext
