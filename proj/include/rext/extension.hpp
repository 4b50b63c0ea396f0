#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rext/families.hpp"

namespace rext {

/// adding: Darboux-Crum on unphysical seeds below the ground state.
/// deleting: Krein-Adler on a lacunary chain of bound states.
/// tilde: the radial isospectral transformation on class-II seeds.
enum class Mode { adding, deleting, tilde };

const char* mode_name(Mode mode);

struct Violation {
  std::string rule;
  std::string message;
};

struct AdmissibilityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(const std::string& rule) const;
  std::vector<std::string> rules() const;
  std::string summary() const;
};

/// Exact eigenvalues with the nu labels used throughout: the added levels
/// nu = -m_k-1, ..., -m_1-1 followed by nu = 0, 1, 2, ...
struct SpectrumTable {
  std::vector<long> nu;
  std::vector<Rat> exact;
  std::vector<double> numeric;
  std::vector<double> residuals;
};

struct ExtendedPotential {
  FamilyTag family;
  Mode mode = Mode::adding;
  IndexList indices;
  /// Starting Hamiltonian of the transformation and its seeds.
  Potential base;
  std::vector<Seed> seeds;
  /// Polynomial Wronskian in the closed form (for the radial case the
  /// z-Wronskian rewritten in x), and the z-Wronskian itself.
  Poly wronskian;
  Poly wronskian_z;
  /// Constant in the closed form, e.g. -2k or 2(m_k+1-k).
  Rat confining_offset;
  Potential potential;

  Rat energy(long nu) const;
  /// First `count` labels in increasing energy.
  std::vector<long> labels(std::size_t count) const;
  /// True for labels that belong to the spectrum.
  bool has_level(long nu) const;
};

/// Bound-state indices removed by the deleting chain: {1..m_k} minus
/// {m_k - m_i : i < k}, deduplicated and checked to lie in [1, m_k].
std::vector<long> deleted_levels(const IndexList& indices);

/// L of the starting radial potential V_L for each mode:
/// adding/tilde use l + k, deleting uses l + k - m_k - 1.
Rat radial_base_l(const FamilyTag& family, const IndexList& indices, Mode mode);

AdmissibilityReport check_admissible(const IndexList& indices, const FamilyTag& family, Mode mode);

/// Throws AdmissibilityError listing the violated rules.
void require_admissible(const IndexList& indices, const FamilyTag& family, Mode mode);

ExtendedPotential build_state_adding(const FamilyTag& family, const IndexList& indices);
ExtendedPotential build_state_deleting(const FamilyTag& family, const IndexList& indices);

struct TildeResult {
  ExtendedPotential potential;
  /// W(phi~_0..phi~_{m_k}) = C (x^{-L} e^{-x^2/4})^{m_k+1} x^{m_k(m_k+1)/2}.
  bool wronskian_identity = false;
  /// V~(2) - V_{l+k-m_k-1} as an exact constant, expected m_k + 1.
  std::optional<Rat> shift;
};

TildeResult build_tilde_rho(const Rat& ell, long k, long mk);
/// Same, reading k and m_k from an index list.
TildeResult build_tilde_rho(const FamilyTag& family, const IndexList& indices);

/// V^(1) - 2 (log W)'' from the full quasi-rational Wronskian of the seeds,
/// kept in split form (x^2, 1/x^2, constant, remainder).
Potential darboux_partner(const Potential& base, std::span<const Seed> seeds);

/// Exact constant c with a - b == c, if any.
std::optional<Rat> potential_shift(const Potential& a, const Potential& b);

SpectrumTable spectrum_table(const ExtendedPotential& p, std::size_t count);

}  // namespace rext
