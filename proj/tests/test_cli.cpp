#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rext/cli.hpp"
#include "rext/errors.hpp"

using namespace rext;
using namespace rext::cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

template <typename Opt, typename F>
Run run(F f, const Opt& o) {
  std::ostringstream out, err;
  int rc = f(o, out, err);
  return {rc, out.str(), err.str()};
}

ConfigSpec ho(const std::string& m) { return {"ho", "0", m}; }
ConfigSpec rho(const std::string& ell, const std::string& m) { return {"rho", ell, m}; }

}  // namespace

TEST_CASE("config parsing") {
  Config c = parse_config(rho("5/2", "0,1"));
  CHECK(c.family.is_radial());
  CHECK(c.family.ell == make_rat(5, 2));
  CHECK(c.indices.m == std::vector<long>{0, 1});
  CHECK_THROWS_AS(parse_config({"sho", "0", "2"}), InputError);
  CHECK_THROWS_AS(parse_config(ho("")), InputError);
  CHECK_THROWS_AS(parse_config(rho("x", "2")), InputError);
}

TEST_CASE("extend reports the shift") {
  ExtendOptions o;
  o.spec = ho("2");
  o.mode = "both";
  Run r = run(run_extend, o);
  CHECK(r.rc == kOk);
  CHECK(r.err.find("shift 6") != std::string::npos);
  Json doc = Json::parse(r.out);
  CHECK(doc["checks"][0]["name"] == "shift");
  CHECK(doc["checks"][0]["value"]["num"] == "6");
  CHECK(doc["checks"][0]["value"]["den"] == "1");
  CHECK(doc["extensions"].size() == 2);
}

TEST_CASE("extend rejects a parity violation") {
  ExtendOptions o;
  o.spec = ho("1");
  Run r = run(run_extend, o);
  CHECK(r.rc == kBadInput);
  CHECK(r.err.find("parity violation") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("extend json schema") {
  ExtendOptions o;
  o.spec = rho("2", "2");
  o.mode = "adding";
  Run r = run(run_extend, o);
  REQUIRE(r.rc == kOk);
  Json doc = Json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"family", "ell", "m", "mode", "potential", "spectrum", "samples", "checks"});
  CHECK(doc["family"] == "rho");
  CHECK(doc["ell"] == "2");
  CHECK(doc["spectrum"][0]["nu"] == -3);
  CHECK(doc["spectrum"][0]["E"]["num"] == "-3");
  CHECK(doc["spectrum"][0]["E"]["den"] == "2");
  const Json& pot = doc["potential"];
  CHECK(pot.contains("offset"));
  CHECK(pot.contains("wronskian"));
  CHECK(pot["correction"].contains("num"));
  CHECK(pot["correction"].contains("den"));
  CHECK(pot["offset"]["num"] == "-1");
}

TEST_CASE("output is deterministic") {
  ExtendOptions o;
  o.spec = ho("0,1,4");
  o.mode = "both";
  CHECK(run(run_extend, o).out == run(run_extend, o).out);
  VerifyOptions v;
  v.spec = ho("2");
  CHECK(run(run_verify, v).out == run(run_verify, v).out);
}

TEST_CASE("csv export") {
  ExtendOptions o;
  o.spec = ho("2");
  o.mode = "both";
  o.format = "csv";
  std::string path = "rext_cli_test.csv";
  o.out = path;
  Run r = run(run_extend, o);
  CHECK(r.rc == kOk);
  CHECK(r.out.find("shift 6") != std::string::npos);
  std::ifstream f(path);
  std::string header, first;
  std::getline(f, header);
  std::getline(f, first);
  CHECK(header == "x,V_adding,V_deleting");
  CHECK(first.rfind("-6,", 0) == 0);
  // values differ by exactly 6 in the last column
  double x, a, d;
  char comma;
  std::istringstream row(first);
  row >> x >> comma >> a >> comma >> d;
  CHECK(d - a == doctest::Approx(6.0));
  std::remove(path.c_str());
}

TEST_CASE("verify suites") {
  VerifyOptions v;
  v.spec = ho("2");
  v.suite = "all";
  Run r = run(run_verify, v);
  CHECK(r.rc == kOk);
  Json doc = Json::parse(r.out);
  CHECK(doc["pass"] == true);
  std::vector<std::string> names;
  for (const auto& c : doc["checks"]) names.push_back(c["name"]);
  CHECK(names == std::vector<std::string>{"shift", "pha", "zero-modes", "coefficients", "b-singlets"});

  v.spec = ho("0,1");
  v.suite = "zero-modes";
  doc = Json::parse(run(run_verify, v).out);
  CHECK(doc["checks"][0]["found"] == Json::array({-2, -1}));
  CHECK(doc["checks"][0]["expected"] == Json::array({-2, -1}));

  v.spec = rho("3", "2");
  v.suite = "tilde";
  r = run(run_verify, v);
  CHECK(r.rc == kOk);
  doc = Json::parse(r.out);
  CHECK(doc["checks"][0]["target_ell"] == "1");
  CHECK(doc["checks"][0]["value"]["num"] == "3");

  v.spec = ho("2");
  v.suite = "tilde";
  CHECK(run(run_verify, v).rc == kBadInput);
  v.suite = "bogus";
  CHECK(run(run_verify, v).rc == kBadInput);
  v.spec = rho("2", "4");
  v.suite = "shift";
  r = run(run_verify, v);
  CHECK(r.rc == kBadInput);
  CHECK(r.err.find("alpha-plus-k-exceeds-mk") != std::string::npos);
}

TEST_CASE("spectrum command") {
  SpectrumOptions s;
  s.spec = ho("2");
  s.count = 4;
  Run r = run(run_spectrum, s);
  CHECK(r.rc == kOk);
  CHECK(r.out == "nu\tE\n-3\t-5\n0\t1\n1\t3\n2\t5\n");
  s.spec = ho("0");
  s.count = 3;
  CHECK(run(run_spectrum, s).out == "nu\tE\n-1\t-1\n0\t1\n1\t3\n");

  s.spec = ho("2");
  s.count = 4;
  s.numeric = true;
  s.format = "json";
  Json doc = Json::parse(run(run_spectrum, s).out);
  for (const auto& row : doc["spectrum"]) CHECK(row["residual"].get<double>() < 1e-3);

  s.numeric = false;
  s.format = "text";
  s.mode = "deleting";
  CHECK(run(run_spectrum, s).out == "nu\tE\n-3\t1\n0\t7\n1\t9\n2\t11\n");
  s.count = 0;
  CHECK(run(run_spectrum, s).rc == kBadInput);
}
