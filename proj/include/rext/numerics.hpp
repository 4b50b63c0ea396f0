#pragma once

#include <cstddef>
#include <vector>

#include "rext/extension.hpp"

namespace rext {

/// Closed interval [a, b] sampled at n_points interior points for the
/// finite-difference scheme, or split into panels for quadrature.
struct Grid {
  double a = -12.0;
  double b = 12.0;
  std::size_t n_points = 2400;

  /// Validates a < b and n_points >= 64.
  static Grid make(double a, double b, std::size_t n_points);
  /// Interior spacing (b - a) / (n_points + 1).
  double spacing() const;
};

/// [-12, 12] with 2400 points for the oscillator, [1e-3, 16] with 3000
/// points for the radial case. WORKBENCH_GRID_POINTS overrides the count.
Grid default_grid(const FamilyTag& family);

/// Double-precision evaluator with coefficients converted once.
class CompiledQuasiRat {
 public:
  explicit CompiledQuasiRat(const QuasiRat& f);
  /// Throws EvaluationError at a pole or for a fractional power at x <= 0.
  double operator()(double x) const;

 private:
  double rho_;
  bool integer_rho_;
  double gamma_;
  std::vector<double> num_, den_;
};

class CompiledPotential {
 public:
  explicit CompiledPotential(const Potential& v);
  double operator()(double x) const;

 private:
  std::vector<double> num_, den_;
};

double evaluate(const QuasiRat& f, double x);
double evaluate(const Potential& v, double x);

/// All eigenvalues (ascending) of the symmetric tridiagonal matrix with
/// the given diagonal and off-diagonal (off[i] couples i and i+1), by
/// implicit QL iteration. Throws SolverError on non-convergence.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

/// Lowest `count` eigenvalues of -d^2/dx^2 + V discretized by central second
/// differences with Dirichlet ends. Requires count <= n_points / 4.
std::vector<double> fd_eigenvalues(const Potential& v, const Grid& grid, std::size_t count);

/// Exact spectrum of p paired with finite-difference eigenvalues and
/// absolute residuals.
SpectrumTable numeric_spectrum(const ExtendedPotential& p, std::size_t count, const Grid& grid);

/// Integral of f^2 over the grid's domain by composite Gauss-Legendre
/// panels; the domain is widened until the tail is negligible. Requires
/// gamma < 0.
double quadrature_norm2(const QuasiRat& f, const Grid& grid);

}  // namespace rext
