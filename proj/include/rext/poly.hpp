#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rext/rat.hpp"

namespace rext {

/// Variable a polynomial is written in. `x` is the spatial coordinate,
/// `z = x^2/2` the Laguerre argument and `e` an energy variable.
enum class Var { x, z, e };

const char* var_name(Var v);

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs, Var var = Var::x);

  static Poly constant(const Rat& c, Var var = Var::x);
  static Poly monomial(const Rat& c, std::size_t degree, Var var = Var::x);
  /// The identity polynomial t in the given variable.
  static Poly variable(Var var = Var::x);

  Var var() const { return var_; }
  Poly with_var(Var var) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero beyond the degree.
  Rat coeff(std::size_t i) const;
  const Rat& leading() const;
  /// Lowest index with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_order() const;
  /// Nonzero constant (degree <= 0) value if the polynomial is constant.
  std::optional<Rat> constant_value() const;

  Poly derivative() const;
  Rat eval(const Rat& t) const;
  double eval(double t) const;

  /// p(t + shift).
  Poly taylor_shift(const Rat& shift) const;
  /// p(scale * t).
  Poly scale_argument(const Rat& scale) const;
  /// p(x^2/2) as a polynomial in x; requires a z-polynomial (or a constant).
  Poly substitute_half_square() const;
  /// Divides by t^n; requires the low_order to be at least n.
  Poly shift_down(std::size_t n) const;
  Poly shift_up(std::size_t n) const;

  Poly monic() const;
  Poly operator-() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  Var common_var(const Poly& o) const;

  std::vector<Rat> coeffs_;
  Var var_ = Var::x;
};

/// Quotient and remainder of polynomial long division; divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing InputError unless the division is exact.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned n);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
Poly determinant(std::vector<std::vector<Poly>> m, Var var = Var::x);

/// Wronskian det[f_j^{(i)}] of a nonempty list sharing one variable tag.
Poly poly_wronskian(std::span<const Poly> fs);

}  // namespace rext
