#include "rext/ratfun.hpp"

#include "rext/errors.hpp"

namespace rext {

RatFun::RatFun(const Poly& p) : num_(p), den_(Poly::constant(1, p.var())) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("RatFun with zero denominator");
  reduce();
}

RatFun RatFun::constant(const Rat& c, Var var) { return RatFun(Poly::constant(c, var)); }

RatFun::RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  make_den_monic();
}

void RatFun::make_den_monic() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1, den_.var());
    return;
  }
  Rat lc = den_.leading();
  if (lc != 1) {
    Rat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1, den_.var());
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  make_den_monic();
}

RatFun reduce(const RatFun& f) { return RatFun(f.num(), f.den()); }

std::optional<Rat> RatFun::constant_value() const {
  if (den_.degree() > 0) return std::nullopt;
  return num_.constant_value();
}

RatFun RatFun::derivative() const {
  if (den_.degree() <= 0) return RatFun(num_.derivative(), den_, Reduced{});
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (sgn(d) == 0) throw EvaluationError("rational function has a pole at " + rext::to_string(t));
  return num_.eval(t) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFun(num_ + o.num_, den_);
    return *this;
  }
  // Henrici: only the gcd of the denominators can cancel against the sum.
  Poly g = gcd(den_, o.den_);
  Poly a = exact_div(den_, g), b = exact_div(o.den_, g);
  Poly n = num_ * b + o.num_ * a;
  Poly d = a * o.den_;
  if (g.degree() <= 0) {
    *this = RatFun(std::move(n), std::move(d), Reduced{});
    return *this;
  }
  Poly h = gcd(n, g);
  if (h.degree() > 0) {
    n = exact_div(n, h);
    d = exact_div(d, h);
  }
  *this = RatFun(std::move(n), std::move(d), Reduced{});
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFun(Poly({}, var()), Poly::constant(1, var()), Reduced{});
    return *this;
  }
  // Cross-cancel first so the products stay reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? exact_div(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? exact_div(o.den_, g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? exact_div(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? exact_div(den_, g2) : den_;
  *this = RatFun(n1 * n2, d1 * d2, Reduced{});
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw InputError("RatFun division by zero");
  return *this *= RatFun(o.den_, o.num_, Reduced{});
}

std::string RatFun::to_string() const {
  if (den_.degree() <= 0) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::optional<Rat> ratfun_sub_constant_check(const RatFun& a, const RatFun& b) {
  return (a - b).constant_value();
}

RatFun minus_two_log_second_derivative(const Poly& p) {
  if (p.is_zero()) throw InputError("log-derivative of the zero polynomial");
  Poly d1 = p.derivative();
  Poly num = p * p.derivative().derivative() - d1 * d1;
  return RatFun(num * Rat(-2), p * p);
}

}  // namespace rext
