#include "rext/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rext/errors.hpp"

namespace rext::cli {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json long_list(const std::vector<long>& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}

Json check(const std::string& name, const std::string& identity, bool pass) {
  Json j;
  j["name"] = name;
  j["identity"] = identity;
  j["pass"] = pass;
  return j;
}

Json header(const Config& c) {
  Json j;
  j["family"] = c.family.name();
  j["ell"] = c.family.is_radial() ? Json(to_string(c.family.ell)) : Json(nullptr);
  j["m"] = long_list(c.indices.m);
  return j;
}

std::vector<double> sample_points(const FamilyTag& family) {
  std::vector<double> xs;
  const double lo = family.is_radial() ? 0.25 : -6.0;
  for (int i = 0; lo + 0.25 * i <= 6.0 + 1e-12; ++i) xs.push_back(lo + 0.25 * i);
  return xs;
}

Mode parse_mode(const std::string& s) {
  if (s == "adding") return Mode::adding;
  if (s == "deleting") return Mode::deleting;
  if (s == "tilde") return Mode::tilde;
  throw InputError("unknown mode '" + s + "'");
}

ExtendedPotential build(const Config& c, Mode mode) {
  switch (mode) {
    case Mode::adding:
      return build_state_adding(c.family, c.indices);
    case Mode::deleting:
      return build_state_deleting(c.family, c.indices);
    case Mode::tilde:
      require_admissible(c.indices, c.family, Mode::tilde);
      return build_tilde_rho(c.family, c.indices).potential;
  }
  throw InputError("unknown mode");
}

void report_admissibility(const AdmissibilityError& e, std::ostream& err) {
  err << "error: inadmissible configuration\n";
  for (const auto& r : e.rules()) err << "  " << r << " violation\n";
  err << "  " << e.what() << "\n";
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const AdmissibilityError& e) {
    report_admissibility(e, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kBadInput;
}

Rat expected_shift(const Config& c) {
  long mk = c.indices.back();
  return c.family.is_radial() ? Rat(mk + 1) : Rat(2 * mk + 2);
}

Json shift_check(const Config& c) {
  auto add = build_state_adding(c.family, c.indices);
  auto del = build_state_deleting(c.family, c.indices);
  auto shift = potential_shift(del.potential, add.potential);
  Rat want = expected_shift(c);
  Json j = check("shift", "Vbar(2) - V(2) = constant", shift && *shift == want);
  j["expected"] = rat_json(want);
  j["value"] = shift ? rat_json(*shift) : Json(nullptr);
  return j;
}

Json tilde_check(const Config& c) {
  require_admissible(c.indices, c.family, Mode::tilde);
  auto t = build_tilde_rho(c.family, c.indices);
  Rat want(c.indices.back() + 1);
  Rat target_l = c.family.ell + Rat(static_cast<long>(c.indices.k())) - want;
  Json j = check("tilde", "Vtilde(2) = V_{l+k-m_k-1} + m_k + 1", t.wronskian_identity && t.shift && *t.shift == want);
  j["target_ell"] = to_string(target_l);
  j["wronskian_identity"] = t.wronskian_identity;
  j["expected"] = rat_json(want);
  j["value"] = t.shift ? rat_json(*t.shift) : Json(nullptr);
  return j;
}

Json pha_check(const ExtendedSystem& sys, const LadderOperator& c, std::size_t states) {
  auto report = verify_pha(sys.potential().potential, c, test_states(sys, states));
  Json j = check("pha", "([H, c] + lambda c) psi = 0", report.pass());
  j["lambda"] = rat_json(c.lambda);
  j["order"] = c.order;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json x;
    x["nu"] = e.nu;
    x["eigen"] = e.eigen_ok;
    x["commutator"] = e.commutator_ok;
    if (!e.detail.empty()) x["detail"] = e.detail;
    entries.push_back(x);
  }
  j["states"] = entries;
  return j;
}

Json zero_mode_check(const ExtendedSystem& sys, const LadderOperator& c, std::size_t states) {
  auto report = verify_zero_modes(sys, c, states);
  Json j = check("zero-modes", "ker c = added levels + deleted chain", report.pass());
  j["expected"] = long_list(report.expected);
  j["found"] = long_list(report.found);
  j["tested"] = long_list(report.tested);
  j["bad_lowering"] = long_list(report.bad_lowering);
  return j;
}

Json coefficient_check(const Config& cfg, const ExtendedSystem& sys, const LadderOperator& c, long nu_max) {
  auto report = verify_action_coefficients(cfg.family, cfg.indices, nu_max);
  const long mk = cfg.indices.back();
  const Grid grid = default_grid(cfg.family);
  bool numeric_ok = true;
  Json ratios = Json::array();
  for (long nu : {0L, mk + 1, mk + 2}) {
    auto r = norm_ratio_check(sys, c, nu, grid);
    Json x;
    x["nu"] = nu;
    if (!r) {
      numeric_ok = false;
      x["pass"] = false;
    } else {
      x["kappa"] = rat_json(r->kappa);
      x["ratio"] = r->ratio;
      x["expected"] = rat_json(r->expected);
      x["rel_error"] = r->rel_error;
      x["pass"] = r->rel_error <= 1e-6;
      numeric_ok = numeric_ok && r->rel_error <= 1e-6;
    }
    ratios.push_back(x);
  }
  Json j = check("coefficients", "coefficient^2 = Q(E_nu)", report.pass() && numeric_ok);
  j["q"] = poly_json(c.q_poly);
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json x;
    x["nu"] = e.nu;
    x["E"] = rat_json(e.energy);
    x["Q"] = rat_json(e.q_value);
    if (e.formula_sq) x["coefficient_sq"] = rat_json(*e.formula_sq);
    x["zero_mode"] = e.zero_mode;
    x["pass"] = e.ok;
    entries.push_back(x);
  }
  j["levels"] = entries;
  j["norm_ratios"] = ratios;
  return j;
}

Json singlet_check(const Config& cfg, const ExtendedSystem& sys, const LadderOperator& c) {
  auto b = build_ladder_b(cfg.family, cfg.indices);
  auto report = verify_b_singlets(sys, b, c);
  Json j = check("b-singlets", "b psi_added = 0, c psi_0 != 0", report.pass());
  j["b_order"] = b.order;
  j["added"] = long_list(report.added);
  Json killed = Json::array();
  for (bool v : report.b_annihilates) killed.push_back(v);
  j["b_annihilates"] = killed;
  j["c_kappa"] = report.c_kappa ? rat_json(*report.c_kappa) : Json(nullptr);
  return j;
}

void write_csv(std::ostream& os, const Config& c, const std::vector<ExtendedPotential>& ps) {
  os << "x";
  for (const auto& p : ps) os << ",V_" << mode_name(p.mode);
  os << "\n";
  std::vector<CompiledPotential> vs;
  for (const auto& p : ps) vs.emplace_back(p.potential);
  for (double x : sample_points(c.family)) {
    os << fmt17(x);
    for (const auto& v : vs) os << "," << fmt17(v(x));
    os << "\n";
  }
}

}  // namespace

Config parse_config(const ConfigSpec& spec) {
  Config c;
  if (spec.family == "ho") {
    c.family = FamilyTag::ho();
  } else if (spec.family == "rho") {
    c.family = FamilyTag::rho(parse_rat(spec.ell));
  } else {
    throw InputError("family must be 'ho' or 'rho', got '" + spec.family + "'");
  }
  if (spec.m.empty()) throw InputError("--m is required");
  c.indices = parse_index_list(spec.m);
  return c;
}

Json rat_json(const Rat& r) {
  Json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  return j;
}

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (long i = 0; i <= p.degree(); ++i) a.push_back(rat_json(p.coeff(static_cast<std::size_t>(i))));
  return a;
}

Json potential_json(const ExtendedPotential& p, std::size_t count) {
  Json j;
  j["mode"] = mode_name(p.mode);
  Json pot;
  pot["quadratic"] = rat_json(p.potential.quadratic);
  pot["centrifugal"] = rat_json(p.potential.centrifugal);
  pot["offset"] = rat_json(p.potential.offset);
  pot["wronskian"] = poly_json(p.wronskian);
  Json corr;
  corr["num"] = poly_json(p.potential.correction.num());
  corr["den"] = poly_json(p.potential.correction.den());
  pot["correction"] = corr;
  j["potential"] = pot;
  Json spec = Json::array();
  for (long nu : p.labels(count)) {
    Json e;
    e["nu"] = nu;
    e["E"] = rat_json(p.energy(nu));
    spec.push_back(e);
  }
  j["spectrum"] = spec;
  Json samples = Json::array();
  CompiledPotential v(p.potential);
  for (double x : sample_points(p.family)) {
    Json s;
    s["x"] = x;
    s["V"] = v(x);
    samples.push_back(s);
  }
  j["samples"] = samples;
  return j;
}

Json verify_report(const Config& cfg, const VerifyOptions& options) {
  static const std::vector<std::string> suites = {"pha", "zero-modes", "coefficients", "shift", "tilde", "b-singlets"};
  const std::string& suite = options.suite;
  if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw InputError("unknown suite '" + suite + "'");
  if (suite == "tilde" && !cfg.family.is_radial()) throw InputError("the tilde suite needs --family rho");
  if (options.nu_max < 0) throw InputError("--nu-max must be >= 0");
  auto wants = [&](const std::string& s) { return suite == "all" || suite == s; };

  Json report = header(cfg);
  report["suite"] = suite;
  Json checks = Json::array();
  if (wants("shift")) checks.push_back(shift_check(cfg));
  if (wants("tilde") && cfg.family.is_radial()) checks.push_back(tilde_check(cfg));
  bool needs_c = wants("pha") || wants("zero-modes") || wants("coefficients") || wants("b-singlets");
  if (needs_c) {
    ExtendedSystem sys(build_state_adding(cfg.family, cfg.indices));
    LadderOperator c = build_ladder_c(cfg.family, cfg.indices);
    if (wants("pha")) checks.push_back(pha_check(sys, c, options.states));
    if (wants("zero-modes")) checks.push_back(zero_mode_check(sys, c, options.states));
    if (wants("coefficients")) checks.push_back(coefficient_check(cfg, sys, c, options.nu_max));
    if (wants("b-singlets")) checks.push_back(singlet_check(cfg, sys, c));
  }
  bool pass = !checks.empty();
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  report["pass"] = pass;
  report["checks"] = checks;
  return report;
}

int run_extend(const ExtendOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Config cfg = parse_config(options.spec);
    if (options.format != "json" && options.format != "csv") throw InputError("format must be json or csv");
    std::vector<ExtendedPotential> ps;
    if (options.mode == "both") {
      ps.push_back(build_state_adding(cfg.family, cfg.indices));
      ps.push_back(build_state_deleting(cfg.family, cfg.indices));
    } else {
      Mode mode = parse_mode(options.mode);
      if (mode == Mode::tilde) throw InputError("extend supports adding, deleting or both");
      ps.push_back(build(cfg, mode));
    }

    Json doc = header(cfg);
    doc["mode"] = options.mode;
    Json checks = Json::array();
    bool pass = true;
    if (ps.size() == 1) {
      Json p = potential_json(ps[0], options.count);
      doc["potential"] = p["potential"];
      doc["spectrum"] = p["spectrum"];
      doc["samples"] = p["samples"];
    } else {
      Json ext = Json::array();
      for (const auto& p : ps) ext.push_back(potential_json(p, options.count));
      doc["extensions"] = ext;
      Json s = shift_check(cfg);
      pass = s["pass"].get<bool>();
      checks.push_back(s);
    }
    doc["checks"] = checks;

    std::ostringstream body;
    if (options.format == "json")
      body << doc.dump(2) << "\n";
    else
      write_csv(body, cfg, ps);

    if (options.out.empty()) {
      out << body.str();
    } else {
      std::ofstream f(options.out, std::ios::binary);
      if (!f) throw InputError("cannot write " + options.out);
      f << body.str();
      out << "wrote " << options.out << "\n";
    }
    if (ps.size() == 2) {
      std::ostream& summary = options.out.empty() ? err : out;
      const auto& s = checks[0];
      std::string value = "none";
      if (!s["value"].is_null()) {
        Rat v(s["value"]["num"].get<std::string>() + "/" + s["value"]["den"].get<std::string>());
        v.canonicalize();
        value = to_string(v);
      }
      summary << "shift " << value << (pass ? " (ok)" : " (FAILED)") << "\n";
    }
    return pass ? kOk : kCheckFailed;
  });
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Config cfg = parse_config(options.spec);
    Json report = verify_report(cfg, options);
    out << report.dump(2) << "\n";
    return report["pass"].get<bool>() ? kOk : kCheckFailed;
  });
}

int run_spectrum(const SpectrumOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Config cfg = parse_config(options.spec);
    if (options.count < 1) throw InputError("--count must be >= 1");
    if (options.format != "text" && options.format != "json") throw InputError("format must be text or json");
    ExtendedPotential p = build(cfg, parse_mode(options.mode));
    SpectrumTable t = options.numeric ? numeric_spectrum(p, options.count, default_grid(cfg.family))
                                      : spectrum_table(p, options.count);
    if (options.format == "json") {
      Json doc = header(cfg);
      doc["mode"] = options.mode;
      Json rows = Json::array();
      for (std::size_t i = 0; i < t.nu.size(); ++i) {
        Json r;
        r["nu"] = t.nu[i];
        r["E"] = rat_json(t.exact[i]);
        if (options.numeric) {
          r["numeric"] = t.numeric[i];
          r["residual"] = t.residuals[i];
        }
        rows.push_back(r);
      }
      doc["spectrum"] = rows;
      out << doc.dump(2) << "\n";
      return kOk;
    }
    out << "nu\tE";
    if (options.numeric) out << "\tnumeric\tresidual";
    out << "\n";
    for (std::size_t i = 0; i < t.nu.size(); ++i) {
      out << t.nu[i] << "\t" << to_string(t.exact[i]);
      if (options.numeric) out << "\t" << fmt17(t.numeric[i]) << "\t" << fmt17(t.residuals[i]);
      out << "\n";
    }
    return kOk;
  });
}

}  // namespace rext::cli
