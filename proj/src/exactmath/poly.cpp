#include "rext/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rext/errors.hpp"

namespace rext {

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::z: return "z";
    case Var::e: return "E";
  }
  return "?";
}

Poly::Poly(std::vector<Rat> coeffs, Var var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }

Poly Poly::constant(const Rat& c, Var var) { return Poly({c}, var); }

Poly Poly::monomial(const Rat& c, std::size_t degree, Var var) {
  std::vector<Rat> cs(degree + 1);
  cs[degree] = c;
  return Poly(std::move(cs), var);
}

Poly Poly::variable(Var var) { return monomial(1, 1, var); }

Poly Poly::with_var(Var var) const {
  Poly p = *this;
  p.var_ = var;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Var Poly::common_var(const Poly& o) const {
  if (var_ == o.var_) return var_;
  if (o.degree() <= 0) return var_;
  if (degree() <= 0) return o.var_;
  throw InputError(std::string("variable mismatch: ") + var_name(var_) + " vs " + var_name(o.var_));
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

const Rat& Poly::leading() const {
  static const Rat zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

std::size_t Poly::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return 0;
}

std::optional<Rat> Poly::constant_value() const {
  if (degree() > 0) return std::nullopt;
  return coeff(0);
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly({}, var_);
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d), var_);
}

Rat Poly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::taylor_shift(const Rat& shift) const {
  // Horner in polynomial form: ((c_n)(t+s) + c_{n-1})(t+s) + ...
  Poly lin({shift, Rat(1)}, var_);
  Poly acc({}, var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly::constant(*it, var_);
  }
  return acc;
}

Poly Poly::scale_argument(const Rat& scale) const {
  std::vector<Rat> cs = coeffs_;
  Rat p(1);
  for (auto& c : cs) {
    c *= p;
    p *= scale;
  }
  return Poly(std::move(cs), var_);
}

Poly Poly::substitute_half_square() const {
  if (var_ != Var::z && degree() > 0) throw InputError("substitute_half_square needs a z-polynomial");
  std::vector<Rat> cs(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1);
  Rat p(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    cs[2 * i] = coeffs_[i] * p;
    p /= 2;
  }
  return Poly(std::move(cs), Var::x);
}

Poly Poly::shift_down(std::size_t n) const {
  if (n == 0 || is_zero()) return *this;
  if (low_order() < n) throw InputError("shift_down: polynomial not divisible by t^n");
  return Poly(std::vector<Rat>(coeffs_.begin() + static_cast<long>(n), coeffs_.end()), var_);
}

Poly Poly::shift_up(std::size_t n) const {
  if (n == 0 || is_zero()) return *this;
  std::vector<Rat> cs(n);
  cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(cs), var_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Rat inv = 1 / leading();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = common_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = common_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Var v = a.common_var(b);
  if (a.is_zero() || b.is_zero()) return Poly({}, v);
  std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(cs), v);
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.var_ == b.var_ || a.degree() <= 0;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << rext::to_string(mag);
    if (k >= 1) out << var_name(var_);
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Var v = a.degree() > 0 ? a.var() : b.var();
  if (a.degree() < b.degree()) return {Poly({}, v), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(rem.size() - b.coeffs().size() + 1);
  const auto& bc = b.coeffs();
  Rat inv = 1 / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rat q = rem[k + bc.size() - 1] * inv;
    quo[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {Poly(std::move(quo), v), Poly(std::move(rem), v)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InputError("exact_div: nonzero remainder");
  return q;
}

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_primitive_int(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

// Primitive pseudo-remainder sequence step: returns prem(a, b) made primitive.
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    BigInt g = gcd(la, lb);
    BigInt fa = lb / g, fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= fb * b[j];
    trim(a);
  }
  make_primitive(a);
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  Var v = a.degree() > 0 ? a.var() : b.var();
  if (a.is_zero()) return b.monic().with_var(b.is_zero() ? v : b.var());
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::constant(1, v);
  IntPoly p = to_primitive_int(a), q = to_primitive_int(b);
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty()) {
    if (q.size() == 1) return Poly::constant(1, v);
    IntPoly r = primitive_prem(std::move(p), q);
    p = std::move(q);
    q = std::move(r);
  }
  std::vector<Rat> cs;
  cs.reserve(p.size());
  for (auto& c : p) cs.emplace_back(c);
  return Poly(std::move(cs), v).monic();
}

Poly pow(const Poly& p, unsigned n) {
  Poly result = Poly::constant(1, p.var());
  Poly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly determinant(std::vector<std::vector<Poly>> m, Var var) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1, var);
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant: matrix is not square");
  int sgn_flip = 1;
  Poly prev = Poly::constant(1, var);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly({}, var);
      std::swap(m[k], m[piv]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 ? t * (1 / prev.leading()) : exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  if (sgn_flip < 0) d = -d;
  return d.is_zero() ? Poly({}, var) : d;
}

Poly poly_wronskian(std::span<const Poly> fs) {
  if (fs.empty()) throw InputError("poly_wronskian: empty list");
  Var v = fs.front().var();
  for (const auto& f : fs)
    if (f.var() != v) throw InputError("poly_wronskian: mixed variable tags");
  const std::size_t n = fs.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Poly d = fs[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = d;
      d = d.derivative();
    }
  }
  return determinant(std::move(m), v).with_var(v);
}

}  // namespace rext
