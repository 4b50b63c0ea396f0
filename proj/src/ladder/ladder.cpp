#include "rext/ladder.hpp"

#include <algorithm>
#include <cmath>

#include "rext/errors.hpp"

namespace rext {
namespace {

const QuasiRat& x_factor() {
  static const QuasiRat x(Poly::variable());
  return x;
}

// x^2/2 + sign - 2 L(L+1)/x^2 as a quasi-rational multiplier.
QuasiRat radial_multiplier(const Rat& L, int sign) {
  Poly num({-2 * L * (L + 1), Rat(0), Rat(sign), Rat(0), Rat(1, 2)});
  return QuasiRat(RatFun(num, Poly::monomial(Rat(1), 2)));
}

Poly linear_e(const Rat& root) { return Poly({-root, Rat(1)}, Var::e); }

Poly product_over(const std::vector<Rat>& roots) {
  Poly p = Poly::constant(1, Var::e);
  for (const auto& r : roots) p *= linear_e(r);
  return p;
}

long to_index(long v) {
  if (v < 0) throw InputError("negative level index");
  return v;
}

}  // namespace

QuasiRat BaseLadder::lower(const QuasiRat& f) const {
  if (!family.is_radial()) return f.derivative() + x_factor() * f;
  QuasiRat d1 = f.derivative();
  QuasiRat d2 = d1.derivative();
  QuasiRat sum = d2 * Rat(2) + x_factor() * d1 * Rat(2) + radial_multiplier(family.ell, 1) * f;
  return sum * Rat(1, 4);
}

QuasiRat BaseLadder::raise(const QuasiRat& f) const {
  if (!family.is_radial()) return x_factor() * f - f.derivative();
  QuasiRat d1 = f.derivative();
  QuasiRat d2 = d1.derivative();
  QuasiRat sum = d2 * Rat(2) - x_factor() * d1 * Rat(2) + radial_multiplier(family.ell, -1) * f;
  return sum * Rat(1, 4);
}

BaseLadder base_ladder(const FamilyTag& family) {
  BaseLadder b{family, Rat(2), Poly()};
  if (!family.is_radial()) {
    b.p1 = linear_e(Rat(1));
  } else {
    const Rat& L = family.ell;
    // (2E - 3 - 2L)(2E - 1 + 2L)/16 = (E - (3/2 + L))(E - (1/2 - L))/4
    b.p1 = linear_e(Rat(3, 2) + L) * linear_e(Rat(1, 2) - L) * Rat(1, 4);
  }
  return b;
}

ExtendedSystem::ExtendedSystem(ExtendedPotential p)
    : p_(std::move(p)), map_(DarbouxMap::forward(p_.base, p_.seeds)) {
  if (p_.mode == Mode::adding) added_ = kernel_of_adjoint(p_.seeds);
}

Seed ExtendedSystem::base_state(long n) const {
  auto idx = static_cast<unsigned>(to_index(n));
  if (!p_.family.is_radial()) return seed_psi_ho(idx);
  return seed_psi_rho(radial_base_l(p_.family, p_.indices, p_.mode), idx);
}

QuasiRat ExtendedSystem::state(long nu) const {
  if (!p_.has_level(nu)) throw InputError("no level with nu = " + std::to_string(nu));
  switch (p_.mode) {
    case Mode::adding:
      if (nu < 0) {
        for (std::size_t i = 0; i < p_.indices.k(); ++i)
          if (p_.indices.m[i] == -nu - 1) return added_[i];
      }
      return map_(base_state(nu).f);
    case Mode::deleting:
      return map_(base_state(nu + p_.indices.back() + 1).f);
    case Mode::tilde:
      return map_(base_state(nu).f);
  }
  return {};
}

QuasiRat LadderOperator::apply(const QuasiRat& f) const {
  QuasiRat g = f;
  for (const auto& step : chain) {
    if (g.is_zero()) return g;
    if (const auto* m = std::get_if<DarbouxMap>(&step)) {
      g = m->apply(g);
    } else {
      const auto& b = std::get<BaseLadderStep>(step);
      g = b.raise ? b.ladder.raise(g) : b.ladder.lower(g);
    }
  }
  return g;
}

LadderOperator build_ladder_b(const FamilyTag& family, const IndexList& indices) {
  ExtendedSystem sys(build_state_adding(family, indices));
  const DarbouxMap& a_fwd = sys.map();
  FamilyTag base_family = family;
  if (family.is_radial()) base_family.ell = radial_base_l(family, indices, Mode::adding);
  BaseLadder a = base_ladder(base_family);

  LadderOperator op;
  op.family = family;
  op.indices = indices;
  op.lambda = a.lambda;
  op.chain.emplace_back(a_fwd.adjoint());
  op.chain.emplace_back(BaseLadderStep{a, false});
  op.chain.emplace_back(a_fwd);
  op.order = 2 * static_cast<long>(indices.k()) + a.order();

  Poly f = product_over(a_fwd.factorization_energies());
  op.q_poly = a.p1 * f.taylor_shift(-a.lambda) * f;
  return op;
}

LadderOperator build_ladder_c(const FamilyTag& family, const IndexList& indices) {
  ExtendedPotential adding = build_state_adding(family, indices);
  ExtendedPotential deleting = build_state_deleting(family, indices);
  DarbouxMap a_fwd = DarbouxMap::forward(adding.base, adding.seeds);

  LadderOperator op;
  op.family = family;
  op.indices = indices;
  op.lambda = Rat(2 * indices.back() + 2);
  op.chain.emplace_back(a_fwd.adjoint());
  if (family.is_radial()) {
    require_admissible(indices, family, Mode::tilde);
    TildeResult tilde = build_tilde_rho(family, indices);
    op.chain.emplace_back(DarbouxMap::forward(tilde.potential.base, tilde.potential.seeds));
  }
  op.chain.emplace_back(DarbouxMap::forward(deleting.base, deleting.seeds));
  for (const auto& step : op.chain) op.order += static_cast<long>(std::get<DarbouxMap>(step).order());
  op.q_poly = q_polynomial(family, indices);
  return op;
}

Poly q_polynomial(const FamilyTag& family, const IndexList& indices) {
  const long k = static_cast<long>(indices.k());
  const long mk = indices.back();
  const auto deleted = deleted_levels(indices);
  std::vector<Rat> roots;
  if (!family.is_radial()) {
    for (long m : indices.m) roots.emplace_back(-2 * m - 1);
    for (long j : deleted) roots.emplace_back(2 * j + 1);
    return product_over(roots);
  }
  const Rat alpha = family.alpha();
  for (long m : indices.m) roots.push_back(alpha - 2 * m + k - 1);
  for (long j = 0; j <= mk; ++j) roots.push_back(-alpha + 2 * j - k + 1);
  for (long n : deleted) roots.push_back(alpha + 2 * n + k + 1);
  return product_over(roots);
}

std::vector<long> expected_zero_modes(const IndexList& indices) {
  std::vector<long> out;
  for (auto it = indices.m.rbegin(); it != indices.m.rend(); ++it) out.push_back(-*it - 1);
  for (long j : deleted_levels(indices)) out.push_back(j);
  return out;
}

std::vector<EigenTest> test_states(const ExtendedSystem& system, std::size_t count) {
  std::vector<long> labels = system.potential().labels(count);
  long need = system.potential().indices.back() + 1;
  for (long nu = 0; nu <= need; ++nu)
    if (std::find(labels.begin(), labels.end(), nu) == labels.end()) labels.push_back(nu);
  std::vector<EigenTest> out;
  for (long nu : labels) out.push_back({nu, system.state(nu), system.energy(nu)});
  return out;
}

bool PhaReport::pass() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const PhaEntry& e) { return e.eigen_ok && e.commutator_ok; });
}

PhaReport verify_pha(const Potential& h, const LadderOperator& c, const std::vector<EigenTest>& test_set) {
  PhaReport report;
  for (const auto& t : test_set) {
    PhaEntry e{t.nu, false, false, false, ""};
    QuasiRat h_psi = apply_hamiltonian(h, t.psi);
    e.eigen_ok = (h_psi == t.psi * t.energy);
    QuasiRat c_psi = c(t.psi);
    e.annihilated = c_psi.is_zero();
    QuasiRat c_h_psi = c(h_psi);
    QuasiRat residual = apply_hamiltonian(h, c_psi) - c_h_psi + c_psi * c.lambda;
    e.commutator_ok = residual.is_zero();
    if (!e.eigen_ok) e.detail = "psi is not an eigenfunction at E = " + to_string(t.energy);
    if (!e.commutator_ok) e.detail += (e.detail.empty() ? "" : "; ") + std::string("residual ") + residual.to_string();
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool ZeroModeReport::pass() const {
  std::vector<long> want;
  for (long nu : expected)
    if (std::find(tested.begin(), tested.end(), nu) != tested.end()) want.push_back(nu);
  std::vector<long> a = want, b = found;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  bool all_expected_tested = want.size() == expected.size();
  return all_expected_tested && a == b && bad_lowering.empty();
}

ZeroModeReport verify_zero_modes(const ExtendedSystem& system, const LadderOperator& c, std::size_t count) {
  ZeroModeReport report;
  report.expected = expected_zero_modes(system.potential().indices);
  const long step = to_long(c.lambda / 2);
  for (const auto& t : test_states(system, count)) {
    report.tested.push_back(t.nu);
    QuasiRat out = c(t.psi);
    if (out.is_zero()) {
      report.found.push_back(t.nu);
      continue;
    }
    long target = t.nu - step;
    if (!system.potential().has_level(target)) {
      report.bad_lowering.push_back(t.nu);
      continue;
    }
    auto kappa = qr_ratio_constant(out, system.state(target));
    if (!kappa || sign(*kappa) == 0) report.bad_lowering.push_back(t.nu);
  }
  return report;
}

Rat oscillator_coefficient_sq(const IndexList& indices, long nu) {
  const auto& m = indices.m;
  const long k = static_cast<long>(m.size());
  const long mk = m.back();
  auto zeros = expected_zero_modes(indices);
  if (std::find(zeros.begin(), zeros.end(), nu) != zeros.end()) return Rat(0);
  const Rat pow2 = rat_pow(Rat(2), static_cast<unsigned>(mk + 1));

  if (nu == 0) {
    Rat v = pow2 * factorial(static_cast<unsigned>(mk + 1));
    for (long i = 0; i + 1 < k; ++i) v *= Rat(m[i] + 1) / Rat(mk - m[i]);
    return v;
  }
  for (long i = 0; i + 1 < k; ++i) {
    if (nu != mk - m[i]) continue;
    const long mi = m[i];
    Rat v = pow2 * Rat(mk + 1) * Rat(2 * mk - mi + 1) * factorial(static_cast<unsigned>(mk - mi - 1)) *
            factorial(static_cast<unsigned>(mi));
    for (long j = 0; j < i; ++j) v *= Rat(mk + m[j] - mi + 1) / Rat(mi - m[j]);
    for (long l = i + 1; l + 1 < k; ++l) v *= Rat(mk + m[l] - mi + 1) / Rat(m[l] - mi);
    return v;
  }
  if (nu >= mk + 1) {
    Rat v = pow2 * Rat(nu + mk + 1) * factorial(static_cast<unsigned>(nu - 1)) /
            factorial(static_cast<unsigned>(nu - mk - 1));
    for (long i = 0; i + 1 < k; ++i) v *= Rat(nu + m[i] + 1) / Rat(nu + m[i] - mk);
    return v;
  }
  throw InputError("nu = " + std::to_string(nu) + " is not a level of the extended oscillator");
}

bool CoefficientReport::pass() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

CoefficientReport verify_action_coefficients(const FamilyTag& family, const IndexList& indices, long nu_max) {
  require_admissible(indices, family, Mode::adding);
  require_admissible(indices, family, Mode::deleting);
  const Poly q = q_polynomial(family, indices);
  const auto zeros = expected_zero_modes(indices);
  const Rat k(static_cast<long>(indices.k()));
  std::vector<long> labels;
  for (auto it = indices.m.rbegin(); it != indices.m.rend(); ++it) labels.push_back(-*it - 1);
  for (long nu = 0; nu <= nu_max; ++nu) labels.push_back(nu);

  CoefficientReport report;
  for (long nu : labels) {
    CoefficientEntry e;
    e.nu = nu;
    e.energy = family.is_radial() ? Rat(2 * nu) + family.ell + k + Rat(3, 2) : Rat(2 * nu + 1);
    e.q_value = q.eval(e.energy);
    e.zero_mode = std::find(zeros.begin(), zeros.end(), nu) != zeros.end();
    e.ok = (sign(e.q_value) == 0) == e.zero_mode && sign(e.q_value) >= 0;
    if (!family.is_radial()) {
      e.formula_sq = oscillator_coefficient_sq(indices, nu);
      e.ok = e.ok && *e.formula_sq == e.q_value;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::optional<NormRatioCheck> norm_ratio_check(const ExtendedSystem& system, const LadderOperator& op, long nu,
                                               const Grid& grid) {
  const long step = to_long(op.lambda / 2);
  const long target = nu - step;
  if (!system.potential().has_level(target)) return std::nullopt;
  QuasiRat psi = system.state(nu);
  QuasiRat out = op(psi);
  if (out.is_zero()) return std::nullopt;
  QuasiRat low = system.state(target);
  auto kappa = qr_ratio_constant(out, low);
  if (!kappa) return std::nullopt;
  NormRatioCheck check;
  check.nu = nu;
  check.kappa = *kappa;
  check.ratio = kappa->get_d() * kappa->get_d() * quadrature_norm2(low, grid) / quadrature_norm2(psi, grid);
  check.expected = op.q_poly.eval(system.energy(nu));
  double expected = check.expected.get_d();
  check.rel_error = std::fabs(check.ratio - expected) / std::fabs(expected);
  return check;
}

bool SingletReport::pass() const {
  bool all_killed = std::all_of(b_annihilates.begin(), b_annihilates.end(), [](bool v) { return v; });
  return !added.empty() && all_killed && c_kappa && sign(*c_kappa) != 0;
}

SingletReport verify_b_singlets(const ExtendedSystem& system, const LadderOperator& b, const LadderOperator& c) {
  SingletReport report;
  const auto& m = system.potential().indices.m;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    long nu = -*it - 1;
    report.added.push_back(nu);
    report.b_annihilates.push_back(b(system.state(nu)).is_zero());
  }
  QuasiRat image = c(system.state(0));
  if (!image.is_zero()) report.c_kappa = qr_ratio_constant(image, system.state(-m.back() - 1));
  return report;
}

}  // namespace rext
