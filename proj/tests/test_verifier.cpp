#include <doctest.h>

#include <sstream>

#include "nambu3/verifier.hpp"

using namespace nambu3;

namespace {

SuiteConfig config(const std::string& suite, std::int64_t trials) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  auto cfg = config("cubic-fi", 1);
  cfg.tol = 1e-3;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = config("cubic-fi", 1);
  cfg.mode = Mode::Float;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  CHECK_THROWS_AS(run_suite(config("no-such-suite", 1)), ConfigError);
  cfg = config("cubic-fi", 1);
  cfg.range = 0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = config("super-gfi", 1);
  cfg.r = 1;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = config("cochain-fi", 1);
  cfg.algebra_file = NAMBU3_FIXTURES "/h3.json";
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  CHECK_THROWS_AS(parse_mode("fuzzy"), ConfigError);
  SuiteConfig f;
  f.mode = Mode::Float;
  CHECK(f.effective_tol() == 1e-9);
  CHECK(SuiteConfig{}.effective_tol() == 0.0);
}

TEST_CASE("every suite runs and passes with small trial counts") {
  for (const auto& name : suite_names()) {
    const auto rep = run_suite(config(name, 40));
    CHECK_MESSAGE(rep.pass(), name);
    CHECK(rep.config["suite"] == name);
    CHECK(rep.config["exhaustive_limit"] == 1e6);
  }
}

TEST_CASE("float mode runs within tolerance") {
  for (const char* name : {"cubic-fi", "super-gfi", "cubic-prop1", "trace-laws"}) {
    auto cfg = config(name, 30);
    cfg.mode = Mode::Float;
    const auto rep = run_suite(cfg);
    CHECK_MESSAGE(rep.pass(), name);
  }
}

TEST_CASE("reports are byte-deterministic") {
  for (const char* name : {"cubic-assoc", "super-prop2", "cochain-gfi"}) {
    const auto a = canonical_dump(to_json(run_suite(config(name, 25))));
    const auto b = canonical_dump(to_json(run_suite(config(name, 25))));
    CHECK(a == b);
  }
  auto cfg = config("cubic-fi", 10);
  cfg.mode = Mode::Float;
  CHECK(canonical_dump(to_json(run_suite(cfg))) == canonical_dump(to_json(run_suite(cfg))));
}

TEST_CASE("canonical JSON") {
  const Json j = Json::parse(R"({"b":[1,0.1,"x"],"a":{"z":true,"y":null}})");
  CHECK(canonical_dump(j) == R"({"a":{"y":null,"z":true},"b":[1,0.10000000000000001,"x"]})");
}

TEST_CASE("empty report passes vacuously") {
  VerificationReport rep;
  CHECK(rep.pass());
  CHECK(canonical_dump(to_json(rep)) == R"({"checks":[],"config":{},"pass":true})");
}

TEST_CASE("non-asserted checks do not affect the verdict") {
  VerificationReport rep;
  ResidualReport info;
  info.name = "measurement";
  info.asserted = false;
  info.pass = false;
  rep.checks.push_back(info);
  CHECK(rep.pass());
  ResidualReport bad;
  bad.name = "claim";
  bad.pass = false;
  rep.checks.push_back(bad);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("text report has one line per check") {
  const auto rep = run_suite(config("cubic-prop1", 5));
  std::ostringstream os;
  write_text(os, rep);
  const std::string text = os.str();
  CHECK(text.find("suite: cubic-prop1") != std::string::npos);
  int pass_lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("PASS", 0) == 0) ++pass_lines;
  CHECK(pass_lines == 4);
  CHECK(text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("cochain suites read files") {
  auto cfg = config("cochain-fi", 20);
  cfg.algebra_file = NAMBU3_FIXTURES "/h3.json";
  cfg.cochain_file = NAMBU3_FIXTURES "/h3_e3star.json";
  const auto rep = run_suite(cfg);
  CHECK(rep.pass());
  CHECK(rep.checks[1].name == "wedge_norm");
  CHECK(rep.checks[1].max_abs == 1.0);

  cfg.algebra_file = NAMBU3_FIXTURES "/bad_jacobi.json";
  CHECK_FALSE(run_suite(cfg).pass());
  cfg.algebra_file = NAMBU3_FIXTURES "/malformed.json";
  CHECK_THROWS_AS(run_suite(cfg), InputError);
}

TEST_CASE("first-kind counterexample carries a replayable witness") {
  const auto rep = run_suite(config("cubic-assoc", 10));
  const auto& first = rep.checks[1];
  CHECK(first.name == "first_kind_counterexample");
  REQUIRE(first.witness.has_value());
  CHECK(first.witness->size() == 5);
}
