#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rext/ratfun.hpp"

namespace rext {

/// f(x) = x^rho * exp(gamma x^2) * r(x), with r a reduced rational function
/// in x whose numerator and denominator have nonzero constant terms (powers
/// of x live in rho). Zero is the unique value with r = 0, rho = gamma = 0.
class QuasiRat {
 public:
  QuasiRat() = default;
  QuasiRat(Rat rho, Rat gamma, RatFun r);
  QuasiRat(const RatFun& r);  // NOLINT(google-explicit-constructor)
  QuasiRat(const Poly& p);    // NOLINT(google-explicit-constructor)

  static QuasiRat zero() { return {}; }
  static QuasiRat constant(const Rat& c) { return QuasiRat(RatFun::constant(c)); }
  /// x^rho exp(gamma x^2) p(x).
  static QuasiRat make(const Rat& rho, const Rat& gamma, const Poly& p) {
    return QuasiRat(rho, gamma, RatFun(p));
  }

  const Rat& rho() const { return rho_; }
  const Rat& gamma() const { return gamma_; }
  const RatFun& r() const { return r_; }

  bool is_zero() const { return r_.is_zero(); }
  /// True when the difference of exponents allows a sum in the class.
  bool compatible(const QuasiRat& o) const;

  QuasiRat derivative() const;
  /// Throws EvaluationError at a pole of r.
  Rat eval_rational_part(const Rat& x) const { return r_.eval(x); }

  QuasiRat operator-() const;
  QuasiRat& operator+=(const QuasiRat& o);
  QuasiRat& operator-=(const QuasiRat& o);
  QuasiRat& operator*=(const QuasiRat& o);
  QuasiRat& operator*=(const Rat& c);
  QuasiRat& operator/=(const QuasiRat& o);

  friend QuasiRat operator+(QuasiRat a, const QuasiRat& b) { return a += b; }
  friend QuasiRat operator-(QuasiRat a, const QuasiRat& b) { return a -= b; }
  friend QuasiRat operator*(QuasiRat a, const QuasiRat& b) { return a *= b; }
  friend QuasiRat operator*(QuasiRat a, const Rat& c) { return a *= c; }
  friend QuasiRat operator*(const Rat& c, QuasiRat a) { return a *= c; }
  friend QuasiRat operator/(QuasiRat a, const QuasiRat& b) { return a /= b; }
  friend bool operator==(const QuasiRat& a, const QuasiRat& b) {
    return a.rho_ == b.rho_ && a.gamma_ == b.gamma_ && a.r_ == b.r_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  Rat rho_{0};
  Rat gamma_{0};
  RatFun r_;
};

QuasiRat qr_differentiate(const QuasiRat& f);

/// Wronskian det[f_j^{(i)}]. Each column keeps its own x^rho exp(gamma x^2)
/// prefactor, so seeds of different exponential type may be mixed; the
/// result carries the summed exponents.
QuasiRat qr_wronskian(std::span<const QuasiRat> fs);

/// Cofactors C_0..C_n of the last column of the (n+1)x(n+1) Wronskian of
/// (fs..., f): W(fs..., f) = sum_i C_i f^{(i)}. C_n = W(fs).
std::vector<QuasiRat> qr_wronskian_cofactors(std::span<const QuasiRat> fs);

bool qr_is_zero(const QuasiRat& f);

/// c with f == c * g, if such a constant exists; g must be nonzero.
std::optional<Rat> qr_ratio_constant(const QuasiRat& f, const QuasiRat& g);

/// (log f)'' = -rho/x^2 + 2 gamma + (r'/r)' for nonzero f.
RatFun log_second_derivative(const QuasiRat& f);

}  // namespace rext
