#pragma once

#include <string>
#include <vector>

#include "rext/quasirational.hpp"

namespace rext {

enum class FamilyKind { ho, rho };

/// Base problem: harmonic oscillator V = x^2 on the real line, or the radial
/// oscillator V_l = x^2/4 + l(l+1)/x^2 on the half line (alpha = l + 1/2).
struct FamilyTag {
  FamilyKind kind = FamilyKind::ho;
  Rat ell{0};

  static FamilyTag ho() { return {FamilyKind::ho, Rat(0)}; }
  static FamilyTag rho(const Rat& ell) { return {FamilyKind::rho, ell}; }

  bool is_radial() const { return kind == FamilyKind::rho; }
  Rat alpha() const { return ell + Rat(1, 2); }
  std::string name() const { return is_radial() ? "rho" : "ho"; }
};

/// Index list m_1 < ... < m_k, not yet checked for admissibility.
struct IndexList {
  std::vector<long> m;

  std::size_t k() const { return m.size(); }
  long back() const { return m.back(); }
  std::string to_string() const;

  friend bool operator==(const IndexList&, const IndexList&) = default;
};

/// Parses "0,1,4".
IndexList parse_index_list(const std::string& text);

/// V(x) = quadratic x^2 + centrifugal / x^2 + offset + correction(x).
struct Potential {
  Rat quadratic{0};
  Rat centrifugal{0};
  Rat offset{0};
  RatFun correction;

  RatFun as_ratfun() const;
};

Potential ho_potential();
/// x^2/4 + L(L+1)/x^2.
Potential rho_potential(const Rat& L);

/// -f'' + V f.
QuasiRat apply_hamiltonian(const Potential& v, const QuasiRat& f);

/// Physicists' Hermite polynomial H_m(x).
Poly hermite(unsigned m);
/// (-i)^m H_m(i x); all coefficients nonnegative.
Poly pseudo_hermite(unsigned m);
/// Generalized Laguerre polynomial L_m^(beta)(z), in the variable z.
Poly laguerre(unsigned m, const Rat& beta);

/// A formal eigenfunction together with its eigenvalue.
struct Seed {
  QuasiRat f;
  Rat energy;
};

/// H_x^2 eigenfunctions: phi_m = (pseudo-Hermite)_m(x) e^{x^2/2} at energy
/// -2m-1, psi_nu = H_nu(x) e^{-x^2/2} at 2nu+1 (unnormalized).
Seed seed_phi_ho(unsigned m);
Seed seed_psi_ho(unsigned nu);

/// V_L eigenfunctions in z = x^2/2:
///   phi       x^{-L} e^{+x^2/4} L_m^(-L-1/2)(-z)   energy -2m + L - 1/2
///   psi       x^{L+1} e^{-x^2/4} L_nu^(L+1/2)(z)    energy 2nu + L + 3/2
///   phi_tilde x^{-L} e^{-x^2/4} L_i^(-L-1/2)(z)    energy 2i - L + 1/2
/// phi and phi_tilde require m (resp. i) < L + 1/2.
Seed seed_phi_rho(const Rat& L, unsigned m);
Seed seed_psi_rho(const Rat& L, unsigned nu);
Seed seed_phi_tilde_rho(const Rat& L, unsigned i);

}  // namespace rext
