#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rext/darboux.hpp"
#include "rext/numerics.hpp"

namespace rext {

/// Explicit ladder operators of the starting problem, lambda = 2:
///   oscillator: a = d/dx + x, a^dagger = -d/dx + x, P1(E) = E - 1;
///   radial V_L: a = (2 d^2 + 2x d + x^2/2 - 2L(L+1)/x^2 + 1) / 4,
///               a^dagger = (2 d^2 - 2x d + x^2/2 - 2L(L+1)/x^2 - 1) / 4,
///               P1(E) = (2E - 3 - 2L)(2E - 1 + 2L) / 16.
/// For the radial case `family.ell` holds L of the starting potential.
struct BaseLadder {
  FamilyTag family;
  Rat lambda{2};
  Poly p1;

  QuasiRat lower(const QuasiRat& f) const;
  QuasiRat raise(const QuasiRat& f) const;
  long order() const { return family.is_radial() ? 2 : 1; }
};

BaseLadder base_ladder(const FamilyTag& family);

/// Eigenfunctions of an extended Hamiltonian, built from the starting
/// problem's bound states through the Darboux map (unnormalized).
class ExtendedSystem {
 public:
  explicit ExtendedSystem(ExtendedPotential p);

  const ExtendedPotential& potential() const { return p_; }
  const DarbouxMap& map() const { return map_; }
  /// Bound state of the starting Hamiltonian with index n.
  Seed base_state(long n) const;
  /// psi^(2)_nu with the nu labels of the exact spectrum.
  QuasiRat state(long nu) const;
  Rat energy(long nu) const { return p_.energy(nu); }

 private:
  ExtendedPotential p_;
  DarbouxMap map_;
  std::vector<QuasiRat> added_;  // kernel of the adjoint map, ordered like the indices
};

struct BaseLadderStep {
  BaseLadder ladder;
  bool raise = false;
};

using LadderStep = std::variant<DarbouxMap, BaseLadderStep>;

/// Lowering operator on H^(2) realized as a chain of maps, first element
/// applied first.
struct LadderOperator {
  FamilyTag family;
  IndexList indices;
  std::vector<LadderStep> chain;
  Rat lambda;
  /// b-type: P^(2)(E); c-type: Q(E). Variable Var::e.
  Poly q_poly;
  long order = 0;

  QuasiRat apply(const QuasiRat& f) const;
  QuasiRat operator()(const QuasiRat& f) const { return apply(f); }
};

/// b = A a A^dagger with P^(2)(E) = P1(E) f(E - lambda) f(E), f(E) = prod (E - eps_i).
LadderOperator build_ladder_b(const FamilyTag& family, const IndexList& indices);

/// c = Abar A^dagger (oscillator) or Abar A~ A^dagger (radial), lambda = 2 m_k + 2.
LadderOperator build_ladder_c(const FamilyTag& family, const IndexList& indices);

/// Q(E) by direct product expansion, independent of the operator chain.
Poly q_polynomial(const FamilyTag& family, const IndexList& indices);

/// nu labels annihilated by c: the added levels -m_k-1..-m_1-1 and the
/// deleted bound states {1..m_k} minus {m_k - m_i}.
std::vector<long> expected_zero_modes(const IndexList& indices);

struct EigenTest {
  long nu;
  QuasiRat psi;
  Rat energy;
};

/// Lowest `count` states of the system plus every nu up to m_k + 1.
std::vector<EigenTest> test_states(const ExtendedSystem& system, std::size_t count);

struct PhaEntry {
  long nu;
  bool eigen_ok;       // H psi == E psi
  bool commutator_ok;  // (H c - c H + lambda c) psi == 0
  bool annihilated;    // c psi == 0
  std::string detail;
};

struct PhaReport {
  std::vector<PhaEntry> entries;
  bool pass() const;
};

/// Exact check of [H, c] = -lambda c on each test state.
PhaReport verify_pha(const Potential& h, const LadderOperator& c, const std::vector<EigenTest>& test_set);

struct ZeroModeReport {
  std::vector<long> expected;
  std::vector<long> found;   // annihilated among the tested states
  std::vector<long> tested;
  /// Non-annihilated states that failed to map onto psi_{nu - m_k - 1}.
  std::vector<long> bad_lowering;
  bool pass() const;
};

ZeroModeReport verify_zero_modes(const ExtendedSystem& system, const LadderOperator& c, std::size_t count);

struct CoefficientEntry {
  long nu;
  Rat energy;
  /// Squared coefficient from the closed-form action of c (oscillator only).
  std::optional<Rat> formula_sq;
  Rat q_value;
  bool zero_mode;
  bool ok;
};

struct CoefficientReport {
  std::vector<CoefficientEntry> entries;
  bool pass() const;
};

/// Squared coefficient of c psi_nu from the closed-form action formulas of
/// the oscillator case; zero for the annihilated levels.
Rat oscillator_coefficient_sq(const IndexList& indices, long nu);

/// For every level with nu <= nu_max: the oscillator closed-form squared
/// coefficient equals Q(E_nu) exactly; for both families Q(E_nu) vanishes
/// exactly on the zero modes and is positive elsewhere.
CoefficientReport verify_action_coefficients(const FamilyTag& family, const IndexList& indices, long nu_max);

struct NormRatioCheck {
  long nu;
  Rat kappa;          // exact chain constant: L psi_nu = kappa psi_{nu - step}
  double ratio;       // kappa^2 |psi_{nu-step}|^2 / |psi_nu|^2
  Rat expected;       // Q(E_nu) or P^(2)(E_nu)
  double rel_error;
};

/// Numeric check of kappa^2 * norm ratio against the operator's polynomial.
/// `step` is lambda / 2 in nu units; returns nullopt if L psi_nu is not a
/// multiple of psi_{nu-step}.
std::optional<NormRatioCheck> norm_ratio_check(const ExtendedSystem& system, const LadderOperator& op, long nu,
                                               const Grid& grid);

struct SingletReport {
  /// Added levels and whether b annihilates each one.
  std::vector<long> added;
  std::vector<bool> b_annihilates;
  /// c psi_0 = kappa psi_{-m_k-1} with kappa != 0.
  std::optional<Rat> c_kappa;
  bool pass() const;
};

/// b kills every added state while c maps psi_0 onto the top added state.
SingletReport verify_b_singlets(const ExtendedSystem& system, const LadderOperator& b, const LadderOperator& c);

}  // namespace rext
