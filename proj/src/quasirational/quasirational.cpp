#include "rext/quasirational.hpp"

#include <sstream>

#include "rext/errors.hpp"

namespace rext {
namespace {

const Poly kX = Poly::variable(Var::x);

// Column data for a Wronskian: entry i of column j is
//   x^rho_j exp(gamma_j x^2) * P_ij / (x^i D_j^(i+1)).
struct Column {
  Rat rho, gamma;
  Poly den;
  std::vector<Poly> rows;
};

Column derivative_column(const QuasiRat& f, std::size_t nrows) {
  Column c{f.rho(), f.gamma(), f.r().den(), {}};
  const Poly& d = c.den;
  Poly dd = d.derivative();
  Poly p = f.r().num();
  Poly x2 = Poly::monomial(1, 2);
  for (std::size_t i = 0; i < nrows; ++i) {
    c.rows.push_back(p);
    if (i + 1 == nrows) break;
    Rat ri(static_cast<unsigned long>(i));
    Rat coeff = c.rho - ri;
    Poly next = kX * d * p.derivative() + d * p * coeff
                - kX * dd * p * Rat(static_cast<unsigned long>(i + 1)) + x2 * d * p * (2 * c.gamma);
    p = std::move(next);
  }
  return c;
}

Poly lcm_of_dens(const std::vector<Column>& cols) {
  Poly m = Poly::constant(1);
  for (const auto& c : cols) {
    if (c.den.degree() <= 0) continue;
    Poly g = gcd(m, c.den);
    m = m * exact_div(c.den, g);
  }
  return m;
}

// Polynomial matrix row i scaled by x^i M^(i+1).
std::vector<std::vector<Poly>> scaled_rows(const std::vector<Column>& cols, const Poly& m,
                                           std::size_t nrows) {
  std::vector<std::vector<Poly>> out(nrows, std::vector<Poly>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Poly factor = exact_div(m, cols[j].den);
    Poly scale = Poly::constant(1);
    for (std::size_t i = 0; i < nrows; ++i) {
      scale = scale * factor;
      out[i][j] = factor.degree() <= 0 ? cols[j].rows[i] * scale.coeff(0) : cols[j].rows[i] * scale;
    }
  }
  return out;
}

}  // namespace

QuasiRat::QuasiRat(Rat rho, Rat gamma, RatFun r) : rho_(std::move(rho)), gamma_(std::move(gamma)), r_(std::move(r)) {
  canonicalize();
}

QuasiRat::QuasiRat(const RatFun& r) : r_(r) { canonicalize(); }

QuasiRat::QuasiRat(const Poly& p) : r_(p) { canonicalize(); }

void QuasiRat::canonicalize() {
  if (r_.var() != Var::x) r_ = RatFun::coprime(r_.num().with_var(Var::x), r_.den().with_var(Var::x));
  if (r_.is_zero()) {
    rho_ = 0;
    gamma_ = 0;
    return;
  }
  std::size_t a = r_.num().low_order(), b = r_.den().low_order();
  if (a == 0 && b == 0) return;
  rho_ += Rat(static_cast<long>(a) - static_cast<long>(b));
  r_ = RatFun::coprime(r_.num().shift_down(a), r_.den().shift_down(b));
}

bool QuasiRat::compatible(const QuasiRat& o) const {
  if (is_zero() || o.is_zero()) return true;
  return gamma_ == o.gamma_ && is_integer(Rat(rho_ - o.rho_));
}

QuasiRat QuasiRat::derivative() const {
  if (is_zero()) return {};
  const Poly& p = r_.num();
  const Poly& d = r_.den();
  Poly x2 = Poly::monomial(1, 2);
  Poly inner = p * rho_ + x2 * p * (2 * gamma_) + kX * p.derivative();
  if (d.degree() <= 0) return QuasiRat(rho_ - 1, gamma_, RatFun::coprime(inner, d));
  Poly num = inner * d - kX * p * d.derivative();
  return QuasiRat(rho_ - 1, gamma_, RatFun(num, d * d));
}

QuasiRat QuasiRat::operator-() const {
  QuasiRat f = *this;
  f.r_ = -f.r_;
  return f;
}

QuasiRat& QuasiRat::operator+=(const QuasiRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!compatible(o))
    throw InputError("quasi-rational sum of incompatible terms: " + to_string() + " + " + o.to_string());
  Rat diff = rho_ - o.rho_;
  long shift = to_long(diff);
  RatFun a = r_, b = o.r_;
  Rat base = rho_;
  if (shift >= 0) {
    a = RatFun::coprime(a.num().shift_up(static_cast<std::size_t>(shift)), a.den());
    base = o.rho_;
  } else {
    b = RatFun::coprime(b.num().shift_up(static_cast<std::size_t>(-shift)), b.den());
  }
  *this = QuasiRat(base, gamma_, a + b);
  return *this;
}

QuasiRat& QuasiRat::operator-=(const QuasiRat& o) { return *this += -o; }

QuasiRat& QuasiRat::operator*=(const QuasiRat& o) {
  if (is_zero() || o.is_zero()) return *this = QuasiRat();
  *this = QuasiRat(rho_ + o.rho_, gamma_ + o.gamma_, r_ * o.r_);
  return *this;
}

QuasiRat& QuasiRat::operator*=(const Rat& c) {
  if (sgn(c) == 0) return *this = QuasiRat();
  r_ = r_ * RatFun::constant(c);
  return *this;
}

QuasiRat& QuasiRat::operator/=(const QuasiRat& o) {
  if (o.is_zero()) throw InputError("quasi-rational division by zero");
  if (is_zero()) return *this;
  *this = QuasiRat(rho_ - o.rho_, gamma_ - o.gamma_, r_ / o.r_);
  return *this;
}

std::string QuasiRat::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  if (sgn(rho_) != 0) out << "x^(" << rext::to_string(rho_) << ") ";
  if (sgn(gamma_) != 0) out << "exp(" << rext::to_string(gamma_) << " x^2) ";
  out << "[" << r_.to_string() << "]";
  return out.str();
}

QuasiRat qr_differentiate(const QuasiRat& f) { return f.derivative(); }

QuasiRat qr_wronskian(std::span<const QuasiRat> fs) {
  if (fs.empty()) throw InputError("qr_wronskian: empty list");
  const std::size_t n = fs.size();
  for (const auto& f : fs)
    if (f.is_zero()) return {};
  std::vector<Column> cols;
  cols.reserve(n);
  Rat rho(0), gamma(0);
  for (const auto& f : fs) {
    cols.push_back(derivative_column(f, n));
    rho += f.rho();
    gamma += f.gamma();
  }
  Poly m = lcm_of_dens(cols);
  Poly det = determinant(scaled_rows(cols, m, n));
  if (det.is_zero()) return {};
  rho -= Rat(static_cast<unsigned long>(n * (n - 1) / 2));
  return QuasiRat(rho, gamma, RatFun(det, pow(m, static_cast<unsigned>(n * (n + 1) / 2))));
}

std::vector<QuasiRat> qr_wronskian_cofactors(std::span<const QuasiRat> fs) {
  const std::size_t n = fs.size();
  if (n == 0) return {QuasiRat::constant(1)};
  std::vector<Column> cols;
  Rat rho(0), gamma(0);
  for (const auto& f : fs) {
    if (f.is_zero()) throw InputError("qr_wronskian_cofactors: zero seed");
    cols.push_back(derivative_column(f, n + 1));
    rho += f.rho();
    gamma += f.gamma();
  }
  Poly m = lcm_of_dens(cols);
  auto rows = scaled_rows(cols, m, n + 1);
  // Sum over all n+1 rows of the x-power and M-power scalings.
  const std::size_t x_total = n * (n + 1) / 2;
  const std::size_t m_total = (n + 1) * (n + 2) / 2;
  std::vector<QuasiRat> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n);
    for (std::size_t r = 0; r <= n; ++r)
      if (r != i) minor.push_back(rows[r]);
    Poly det = determinant(std::move(minor));
    if ((i + n) % 2 == 1) det = -det;
    if (det.is_zero()) {
      out.emplace_back();
      continue;
    }
    Rat rho_i = rho - Rat(static_cast<unsigned long>(x_total - i));
    auto m_pow = static_cast<unsigned>(m_total - (i + 1));
    out.emplace_back(rho_i, gamma, RatFun(det, pow(m, m_pow)));
  }
  return out;
}

bool qr_is_zero(const QuasiRat& f) { return f.is_zero(); }

std::optional<Rat> qr_ratio_constant(const QuasiRat& f, const QuasiRat& g) {
  if (g.is_zero()) throw InputError("qr_ratio_constant: zero divisor");
  if (f.is_zero()) return Rat(0);
  if (f.gamma() != g.gamma() || f.rho() != g.rho()) return std::nullopt;
  if (!(f.r().den() == g.r().den())) return std::nullopt;
  const Poly& a = f.r().num();
  const Poly& b = g.r().num();
  if (a.degree() != b.degree()) return std::nullopt;
  Rat c = a.leading() / b.leading();
  if (!(a == b * c)) return std::nullopt;
  return c;
}

RatFun log_second_derivative(const QuasiRat& f) {
  if (f.is_zero()) throw InputError("log-derivative of zero");
  const Poly& p = f.r().num();
  const Poly& d = f.r().den();
  RatFun log_r_prime = RatFun(p.derivative(), p) - RatFun(d.derivative(), d);
  RatFun centrifugal(Poly::constant(-f.rho()), Poly::monomial(1, 2));
  return centrifugal + RatFun::constant(2 * f.gamma()) + log_r_prime.derivative();
}

}  // namespace rext
