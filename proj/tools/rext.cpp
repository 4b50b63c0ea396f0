#include <iostream>

#include "CLI11.hpp"
#include "rext/cli.hpp"

namespace {

void add_config(CLI::App* cmd, rext::cli::ConfigSpec& spec) {
  cmd->add_option("--family", spec.family, "ho or rho")->check(CLI::IsMember({"ho", "rho"}));
  cmd->add_option("--ell", spec.ell, "radial parameter l (rational)");
  cmd->add_option("--m", spec.m, "index list, e.g. 0,1,4")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationally extended oscillators: construction and verification"};
  app.require_subcommand(1);

  rext::cli::ExtendOptions ext;
  auto* extend = app.add_subcommand("extend", "build extended potentials and export them");
  add_config(extend, ext.spec);
  extend->add_option("--mode", ext.mode)->check(CLI::IsMember({"adding", "deleting", "both"}));
  extend->add_option("--out", ext.out, "output file");
  extend->add_option("--format", ext.format)->check(CLI::IsMember({"json", "csv"}));
  extend->add_option("--count", ext.count, "spectrum entries to list");

  rext::cli::VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "run exact and numeric identity checks");
  add_config(verify, ver.spec);
  verify->add_option("--suite", ver.suite)
      ->check(CLI::IsMember({"pha", "zero-modes", "coefficients", "shift", "tilde", "b-singlets", "all"}));
  verify->add_option("--nu-max", ver.nu_max, "highest level for the coefficient suite");
  verify->add_option("--states", ver.states, "number of test states");

  rext::cli::SpectrumOptions spec;
  auto* spectrum = app.add_subcommand("spectrum", "print the exact spectrum");
  add_config(spectrum, spec.spec);
  spectrum->add_option("--mode", spec.mode)->check(CLI::IsMember({"adding", "deleting", "tilde"}));
  spectrum->add_option("--count", spec.count);
  spectrum->add_flag("--numeric", spec.numeric, "add finite-difference eigenvalues");
  spectrum->add_option("--format", spec.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : rext::cli::kBadInput;
  }

  if (*extend) return rext::cli::run_extend(ext, std::cout, std::cerr);
  if (*verify) return rext::cli::run_verify(ver, std::cout, std::cerr);
  return rext::cli::run_spectrum(spec, std::cout, std::cerr);
}
