#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rext/ladder.hpp"

namespace rext::cli {

using Json = nlohmann::ordered_json;

/// Raw command-line configuration: --family, --ell, --m.
struct ConfigSpec {
  std::string family = "ho";
  std::string ell = "0";
  std::string m;
};

struct Config {
  FamilyTag family;
  IndexList indices;
};

/// Throws InputError naming the bad field.
Config parse_config(const ConfigSpec& spec);

struct ExtendOptions {
  ConfigSpec spec;
  std::string mode = "adding";  // adding | deleting | both
  std::string out;              // empty: write to the output stream
  std::string format = "json";  // json | csv
  std::size_t count = 8;
};

struct VerifyOptions {
  ConfigSpec spec;
  std::string suite = "all";  // pha | zero-modes | coefficients | shift | tilde | b-singlets | all
  long nu_max = 20;
  std::size_t states = 10;
};

struct SpectrumOptions {
  ConfigSpec spec;
  std::string mode = "adding";  // adding | deleting | tilde
  std::size_t count = 6;
  bool numeric = false;
  std::string format = "text";  // text | json
};

/// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

Json rat_json(const Rat& r);
Json poly_json(const Poly& p);
Json potential_json(const ExtendedPotential& p, std::size_t count);

/// Runs every check of the named suite; the report has "pass" and "checks".
Json verify_report(const Config& config, const VerifyOptions& options);

int run_extend(const ExtendOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_spectrum(const SpectrumOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rext::cli
