#include "rext/extension.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rext/errors.hpp"
#include "rext/sturm.hpp"

namespace rext {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::adding: return "adding";
    case Mode::deleting: return "deleting";
    case Mode::tilde: return "tilde";
  }
  return "?";
}

bool AdmissibilityReport::violates(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::vector<std::string> AdmissibilityReport::rules() const {
  std::vector<std::string> out;
  for (const auto& v : violations) out.push_back(v.rule);
  return out;
}

std::string AdmissibilityReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i)
    out << (i ? "; " : "") << violations[i].rule << ": " << violations[i].message;
  return out.str();
}

std::vector<long> deleted_levels(const IndexList& indices) {
  const long mk = indices.back();
  std::set<long> excluded;
  for (std::size_t i = 0; i + 1 < indices.k(); ++i) {
    long gap = mk - indices.m[i];
    if (gap < 1 || gap > mk) throw InputError("excluded level " + std::to_string(gap) + " outside [1, m_k]");
    excluded.insert(gap);
  }
  std::vector<long> out;
  for (long j = 1; j <= mk; ++j)
    if (!excluded.contains(j)) out.push_back(j);
  return out;
}

Rat radial_base_l(const FamilyTag& family, const IndexList& indices, Mode mode) {
  Rat k(static_cast<long>(indices.k()));
  if (mode == Mode::deleting) return family.ell + k - indices.back() - 1;
  return family.ell + k;
}

namespace {

Interval domain_of(const FamilyTag& family) {
  return family.is_radial() ? Interval::positive_half_line() : Interval::real_line();
}

struct ClosedForm {
  Potential base;
  std::vector<Seed> seeds;
  Poly wronskian_z;
  Poly wronskian;
  Rat offset;
};

ClosedForm closed_form(const FamilyTag& family, const IndexList& indices, Mode mode) {
  ClosedForm cf;
  const long k = static_cast<long>(indices.k());
  const long mk = indices.back();
  std::vector<Poly> polys;
  if (!family.is_radial()) {
    cf.base = ho_potential();
    if (mode == Mode::adding) {
      for (long m : indices.m) {
        polys.push_back(pseudo_hermite(static_cast<unsigned>(m)));
        cf.seeds.push_back(seed_phi_ho(static_cast<unsigned>(m)));
      }
      cf.offset = Rat(-2 * k);
    } else {
      for (long j : deleted_levels(indices)) {
        polys.push_back(hermite(static_cast<unsigned>(j)));
        cf.seeds.push_back(seed_psi_ho(static_cast<unsigned>(j)));
      }
      cf.offset = Rat(2 * (mk + 1 - k));
    }
    cf.wronskian = polys.empty() ? Poly::constant(1) : poly_wronskian(polys);
    cf.wronskian_z = cf.wronskian;
    return cf;
  }

  const Rat L = radial_base_l(family, indices, mode);
  cf.base = rho_potential(L);
  if (mode == Mode::adding) {
    for (long m : indices.m) {
      polys.push_back(laguerre(static_cast<unsigned>(m), -L - Rat(1, 2)).scale_argument(-1));
      cf.seeds.push_back(seed_phi_rho(L, static_cast<unsigned>(m)));
    }
    cf.offset = Rat(-k);
  } else if (mode == Mode::deleting) {
    for (long j : deleted_levels(indices)) {
      polys.push_back(laguerre(static_cast<unsigned>(j), L + Rat(1, 2)));
      cf.seeds.push_back(seed_psi_rho(L, static_cast<unsigned>(j)));
    }
    cf.offset = Rat(mk + 1 - k);
  } else {
    for (long i = 0; i <= mk; ++i) {
      polys.push_back(laguerre(static_cast<unsigned>(i), -L - Rat(1, 2)));
      cf.seeds.push_back(seed_phi_tilde_rho(L, static_cast<unsigned>(i)));
    }
    cf.offset = Rat(mk + 1);
  }
  cf.wronskian_z = polys.empty() ? Poly::constant(1, Var::z) : poly_wronskian(polys);
  cf.wronskian = cf.wronskian_z.substitute_half_square();
  return cf;
}

bool structural_ok(const AdmissibilityReport& r) {
  return !r.violates("nonempty") && !r.violates("nonnegative-index") && !r.violates("strictly-increasing");
}

}  // namespace

AdmissibilityReport check_admissible(const IndexList& indices, const FamilyTag& family, Mode mode) {
  AdmissibilityReport report;
  auto fail = [&](std::string rule, std::string msg) { report.violations.push_back({std::move(rule), std::move(msg)}); };
  const auto& m = indices.m;
  if (m.empty()) fail("nonempty", "index list must have k >= 1 entries");
  for (long v : m)
    if (v < 0) {
      fail("nonnegative-index", "index " + std::to_string(v) + " is negative");
      break;
    }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] <= m[i - 1]) {
      fail("strictly-increasing", "indices must satisfy m_1 < m_2 < ... < m_k");
      break;
    }
  for (std::size_t i = 0; i < m.size(); ++i) {
    // 1-based position i+1 odd needs m even; even position needs m odd.
    bool want_even = (i % 2 == 0);
    bool is_even = (m[i] % 2 == 0);
    if (want_even != is_even) {
      fail("parity", "m_" + std::to_string(i + 1) + " = " + std::to_string(m[i]) + " must be " +
                         (want_even ? "even" : "odd"));
      break;
    }
  }
  if (!structural_ok(report)) return report;

  const Rat k(static_cast<long>(indices.k()));
  const long mk = indices.back();
  if (family.is_radial()) {
    if (sgn(family.ell) < 0) fail("ell-nonnegative", "l = " + to_string(family.ell) + " must be >= 0");
    Rat alpha_k = family.alpha() + k;
    if (mode == Mode::adding && !(alpha_k > mk))
      fail("alpha-plus-k-exceeds-mk", "alpha + k = " + to_string(alpha_k) + " must exceed m_k = " + std::to_string(mk));
    if (mode == Mode::deleting && !(alpha_k > mk + 1))
      fail("alpha-plus-k-exceeds-mk-plus-1",
           "alpha + k = " + to_string(alpha_k) + " must exceed m_k + 1 = " + std::to_string(mk + 1));
    if (mode == Mode::tilde && !(family.ell + k + Rat(1, 2) > mk))
      fail("tilde-seed-bound", "l + k + 1/2 = " + to_string(Rat(family.ell + k + Rat(1, 2))) +
                                   " must exceed m_k = " + std::to_string(mk));
    for (const char* rule : {"ell-nonnegative", "alpha-plus-k-exceeds-mk", "alpha-plus-k-exceeds-mk-plus-1",
                             "tilde-seed-bound"})
      if (report.violates(rule)) return report;
  }

  Poly w = closed_form(family, indices, mode).wronskian;
  std::size_t roots = count_real_roots(w, domain_of(family));
  if (roots != 0)
    fail("wronskian-nonsingular", "Wronskian has " + std::to_string(roots) + " real root(s) on the domain");
  return report;
}

void require_admissible(const IndexList& indices, const FamilyTag& family, Mode mode) {
  auto report = check_admissible(indices, family, mode);
  if (!report.ok()) throw AdmissibilityError(report.rules(), report.summary());
}

Potential darboux_partner(const Potential& base, std::span<const Seed> seeds) {
  if (seeds.empty()) return base;
  std::vector<QuasiRat> fs;
  for (const auto& s : seeds) fs.push_back(s.f);
  QuasiRat w = qr_wronskian(fs);
  if (w.is_zero()) throw InputError("darboux_partner: seeds are linearly dependent");
  const Poly& p = w.r().num();
  const Poly& d = w.r().den();
  RatFun log_r_second = (RatFun(p.derivative(), p) - RatFun(d.derivative(), d)).derivative();
  Potential out = base;
  out.centrifugal += 2 * w.rho();
  out.offset -= 4 * w.gamma();
  out.correction = base.correction - log_r_second * RatFun::constant(2);
  return out;
}

std::optional<Rat> potential_shift(const Potential& a, const Potential& b) {
  return ratfun_sub_constant_check(a.as_ratfun(), b.as_ratfun());
}

namespace {

ExtendedPotential build(const FamilyTag& family, const IndexList& indices, Mode mode) {
  require_admissible(indices, family, mode);
  ClosedForm cf = closed_form(family, indices, mode);
  ExtendedPotential p;
  p.family = family;
  p.mode = mode;
  p.indices = indices;
  p.base = cf.base;
  p.seeds = std::move(cf.seeds);
  p.wronskian = cf.wronskian;
  p.wronskian_z = cf.wronskian_z;
  p.confining_offset = cf.offset;
  if (family.is_radial()) {
    p.potential = rho_potential(family.ell);
  } else {
    p.potential = ho_potential();
  }
  p.potential.offset = cf.offset;
  if (cf.wronskian.degree() > 0) p.potential.correction = minus_two_log_second_derivative(cf.wronskian);
  return p;
}

}  // namespace

ExtendedPotential build_state_adding(const FamilyTag& family, const IndexList& indices) {
  return build(family, indices, Mode::adding);
}

ExtendedPotential build_state_deleting(const FamilyTag& family, const IndexList& indices) {
  return build(family, indices, Mode::deleting);
}

TildeResult build_tilde_rho(const Rat& ell, long k, long mk) {
  if (k < 1 || mk < 0) throw InputError("build_tilde_rho: need k >= 1 and m_k >= 0");
  // Only k and m_k are read from the list.
  IndexList carrier{std::vector<long>(static_cast<std::size_t>(k), mk)};
  return build_tilde_rho(FamilyTag::rho(ell), carrier);
}

TildeResult build_tilde_rho(const FamilyTag& family, const IndexList& indices) {
  if (!family.is_radial()) throw InputError("build_tilde_rho: radial family required");
  if (indices.m.empty()) throw InputError("build_tilde_rho: empty index list");
  const Rat& ell = family.ell;
  const long k = static_cast<long>(indices.k());
  const long mk = indices.back();
  if (!(ell + Rat(k) + Rat(1, 2) > mk))
    throw AdmissibilityError({"tilde-seed-bound"}, "l + k + 1/2 = " + to_string(Rat(ell + Rat(k) + Rat(1, 2))) +
                                                       " must exceed m_k = " + std::to_string(mk));

  const Rat L = ell + Rat(k);
  TildeResult result;
  ExtendedPotential& p = result.potential;
  p.family = family;
  p.mode = Mode::tilde;
  p.indices = indices;
  p.base = rho_potential(L);
  std::vector<Poly> polys;
  for (long i = 0; i <= mk; ++i) {
    polys.push_back(laguerre(static_cast<unsigned>(i), -L - Rat(1, 2)));
    p.seeds.push_back(seed_phi_tilde_rho(L, static_cast<unsigned>(i)));
  }
  p.wronskian_z = poly_wronskian(polys);
  p.wronskian = p.wronskian_z.substitute_half_square();
  p.confining_offset = Rat(mk + 1);
  p.potential = darboux_partner(p.base, p.seeds);

  std::vector<QuasiRat> fs;
  for (const auto& s : p.seeds) fs.push_back(s.f);
  QuasiRat w = qr_wronskian(fs);
  const Rat n(mk + 1);
  result.wronskian_identity = !w.is_zero() && w.gamma() == -n / 4 &&
                              w.rho() == -L * n + Rat(mk * (mk + 1) / 2) && w.r().constant_value().has_value();
  result.shift = potential_shift(p.potential, rho_potential(L - n));
  return result;
}

Rat ExtendedPotential::energy(long nu) const {
  const Rat k(static_cast<long>(indices.k()));
  const long mk = indices.back();
  Rat two_nu(2 * nu);
  if (!family.is_radial()) {
    if (mode == Mode::adding) return two_nu + 1;
    return two_nu + 2 * mk + 3;
  }
  const Rat& ell = family.ell;
  if (mode == Mode::deleting) return two_nu + ell + k + mk + Rat(5, 2);
  return two_nu + ell + k + Rat(3, 2);
}

bool ExtendedPotential::has_level(long nu) const {
  if (nu >= 0) return true;
  if (mode == Mode::tilde) return false;
  return std::any_of(indices.m.begin(), indices.m.end(), [&](long m) { return nu == -m - 1; });
}

std::vector<long> ExtendedPotential::labels(std::size_t count) const {
  std::vector<long> out;
  if (mode != Mode::tilde)
    for (auto it = indices.m.rbegin(); it != indices.m.rend() && out.size() < count; ++it) out.push_back(-*it - 1);
  for (long nu = 0; out.size() < count; ++nu) out.push_back(nu);
  return out;
}

SpectrumTable spectrum_table(const ExtendedPotential& p, std::size_t count) {
  if (count < 1) throw InputError("spectrum_table: count must be >= 1");
  SpectrumTable t;
  t.nu = p.labels(count);
  for (long nu : t.nu) t.exact.push_back(p.energy(nu));
  return t;
}

}  // namespace rext
