#include "rext/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rext/errors.hpp"

namespace rext {
namespace {

std::vector<double> to_doubles(const Poly& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_d());
  return out;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

constexpr std::size_t kGaussOrder = 16;

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
  std::array<double, kGaussOrder> x{}, w{};

  GaussLegendre() {
    const std::size_t n = kGaussOrder;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        double dz = p1 / pp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre gl;
  return gl;
}

double integrate_square(const CompiledQuasiRat& f, double a, double b, std::size_t panels) {
  const auto& gl = gauss_legendre();
  double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    double mid = a + (static_cast<double>(p) + 0.5) * h;
    double panel = 0.0;
    for (std::size_t i = 0; i < kGaussOrder; ++i) {
      double v = f(mid + 0.5 * h * gl.x[i]);
      panel += gl.w[i] * v * v;
    }
    sum += 0.5 * h * panel;
  }
  return sum;
}

}  // namespace

Grid Grid::make(double a, double b, std::size_t n_points) {
  if (!(a < b)) throw InputError("grid needs a < b");
  if (n_points < 64) throw InputError("grid needs at least 64 points");
  return Grid{a, b, n_points};
}

double Grid::spacing() const { return (b - a) / static_cast<double>(n_points + 1); }

Grid default_grid(const FamilyTag& family) {
  Grid g = family.is_radial() ? Grid{1e-3, 16.0, 3000} : Grid{-12.0, 12.0, 2400};
  if (const char* env = std::getenv("WORKBENCH_GRID_POINTS")) {
    char* end = nullptr;
    unsigned long n = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') throw InputError(std::string("WORKBENCH_GRID_POINTS is not an integer: ") + env);
    g = Grid::make(g.a, g.b, n);
  }
  return g;
}

CompiledQuasiRat::CompiledQuasiRat(const QuasiRat& f)
    : rho_(f.rho().get_d()),
      integer_rho_(is_integer(f.rho())),
      gamma_(f.gamma().get_d()),
      num_(to_doubles(f.r().num())),
      den_(to_doubles(f.r().den())) {}

double CompiledQuasiRat::operator()(double x) const {
  if (num_.empty()) return 0.0;
  double den = horner(den_, x);
  if (den == 0.0) throw EvaluationError("pole at x = " + std::to_string(x));
  double power = 1.0;
  if (rho_ != 0.0) {
    if (integer_rho_) {
      if (x == 0.0 && rho_ < 0) throw EvaluationError("pole of x^rho at 0");
      power = std::pow(x, rho_);
    } else {
      if (x <= 0.0) throw EvaluationError("fractional power at x <= 0");
      power = std::pow(x, rho_);
    }
  }
  return power * std::exp(gamma_ * x * x) * horner(num_, x) / den;
}

CompiledPotential::CompiledPotential(const Potential& v) {
  RatFun r = v.as_ratfun();
  num_ = to_doubles(r.num());
  den_ = to_doubles(r.den());
}

double CompiledPotential::operator()(double x) const {
  double den = horner(den_, x);
  if (den == 0.0) throw EvaluationError("potential has a pole at x = " + std::to_string(x));
  return horner(num_, x) / den;
}

double evaluate(const QuasiRat& f, double x) { return CompiledQuasiRat(f)(x); }

double evaluate(const Potential& v, double x) { return CompiledPotential(v)(x); }

std::vector<double> fd_eigenvalues(const Potential& v, const Grid& grid, std::size_t count) {
  if (count > grid.n_points / 4) throw InputError("fd_eigenvalues: count exceeds n_points / 4");
  CompiledPotential pot(v);
  const std::size_t n = grid.n_points;
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(n), off(n - 1, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * inv_h2 + pot(grid.a + static_cast<double>(i + 1) * h);
  auto all = tridiagonal_eigenvalues(std::move(diag), std::move(off));
  all.resize(count);
  return all;
}

SpectrumTable numeric_spectrum(const ExtendedPotential& p, std::size_t count, const Grid& grid) {
  SpectrumTable t = spectrum_table(p, count);
  t.numeric = fd_eigenvalues(p.potential, grid, count);
  for (std::size_t i = 0; i < count; ++i) t.residuals.push_back(std::fabs(t.numeric[i] - t.exact[i].get_d()));
  return t;
}

double quadrature_norm2(const QuasiRat& f, const Grid& grid) {
  if (f.is_zero()) return 0.0;
  if (sgn(f.gamma()) >= 0) throw InputError("quadrature_norm2: function does not decay (gamma >= 0)");
  CompiledQuasiRat cf(f);
  double a = grid.a, b = grid.b;
  const bool half_line = grid.a >= 0.0;
  if (half_line) a = 0.0;
  // Panels of width <= 0.1; the Gaussian factor is resolved to machine precision.
  auto panels_for = [](double lo, double hi) {
    return std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil((hi - lo) / 0.1)));
  };
  double total = integrate_square(cf, a, b, panels_for(a, b));
  for (int widen = 0; widen < 6; ++widen) {
    double width = 0.5 * (b - a);
    double tail = integrate_square(cf, b, b + width, panels_for(b, b + width));
    if (!half_line) tail += integrate_square(cf, a - width, a, panels_for(a - width, a));
    total += tail;
    b += width;
    if (!half_line) a -= width;
    if (tail <= 1e-15 * total) return total;
  }
  throw InputError("quadrature_norm2: tail did not become negligible");
}

}  // namespace rext
