// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "nambu3/verifier.hpp"

using namespace nambu3;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

SuiteConfig config(const std::string& suite, std::int64_t trials) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  return cfg;
}

const ResidualReport& check(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  throw std::runtime_error("report lacks check " + name);
}

double worst(const VerificationReport& rep) {
  double w = 0.0;
  for (const auto& c : rep.checks)
    if (c.asserted && c.name != "first_kind_counterexample") w = std::max(w, c.max_abs);
  return w;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NAMBU3_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string fixtures = NAMBU3_FIXTURES;

// Reports kept for the presentation-equivalence criterion.
std::vector<VerificationReport> corpus_cubic, corpus_super;

Outcome c1() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    auto cfg = config("cubic-fi", 1000);
    cfg.order = n;
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = run_suite(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(rep.pass() && worst(rep) == 0.0, "order " + std::to_string(n) + " residual " + fmt(worst(rep)));
    o.require(secs < 10.0, "order " + std::to_string(n) + " took " + fmt(secs) + " s");
    corpus_cubic.push_back(std::move(rep));
  }
  auto cfg = config("cubic-fi", 1000);
  cfg.order = 3;
  cfg.mode = Mode::Float;
  const auto rep = run_suite(cfg);
  const double fi = check(rep, "filippov_jacobi").max_abs;
  o.require(rep.pass() && fi <= 1e-9, "float residual " + fmt(fi));
  o.detail = o.pass ? "exact max 0 at n=2,3,4; float n=3 max " + fmt(fi) : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  for (int n : {2, 3}) {
    auto cfg = config("cubic-prop1", 1000);
    cfg.order = n;
    const auto rep = run_suite(cfg);
    for (const auto& c : rep.checks) o.require(c.max_abs == 0.0, c.name + " at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "4 identities, residual 0, orders 2-3, Gaussian-integer entries";
  return o;
}

Outcome c3() {
  Outcome o;
  const auto rep = run_suite(config("cubic-assoc", 1000));
  const auto& lr = check(rep, "lr_associativity");
  const auto& first = check(rep, "first_kind_counterexample");
  o.require(lr.max_abs == 0.0, "lr residual " + fmt(lr.max_abs));
  o.require(first.pass && first.witness.has_value(), "no first-kind witness");
  if (o.pass) o.detail = "lr residual 0; first-kind witness stored (max residual " + fmt(first.max_abs) + ")";
  return o;
}

Outcome c4() {
  Outcome o;
  for (auto [r, s] : {std::pair{1, 1}, std::pair{2, 1}}) {
    auto cfg = config("super-gfi", 32 * 20);
    cfg.r = r;
    cfg.s = s;
    auto rep = run_suite(cfg);
    o.require(rep.pass() && worst(rep) == 0.0, "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");
    corpus_super.push_back(std::move(rep));
  }
  auto cfg = config("super-gfi", 500);
  cfg.r = 2;
  cfg.s = 1;
  cfg.mode = Mode::Float;
  const auto rep = run_suite(cfg);
  const double g = check(rep, "graded_filippov_jacobi").max_abs;
  o.require(rep.pass() && g <= 1e-9, "float residual " + fmt(g));
  if (o.pass) o.detail = "exact 0 over 32 patterns x 20 at (1,1),(2,1); float (2,1) max " + fmt(g);
  return o;
}

Outcome c5() {
  Outcome o;
  for (auto [r, s] : {std::pair{1, 1}, std::pair{2, 1}}) {
    auto cfg = config("super-prop2", 32 * 20);
    cfg.r = r;
    cfg.s = s;
    const auto rep = run_suite(cfg);
    for (const auto& c : rep.checks) o.require(c.max_abs == 0.0, c.name);
  }
  if (o.pass) o.detail = "3 identities, residual 0, 32 patterns x 20 at (1,1),(2,1)";
  return o;
}

Outcome c6() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    auto cfg = config("trace-laws", 1000);
    cfg.order = n;
    const auto rep = run_suite(cfg);
    for (const char* name : {"trace_of_commutator", "supertrace_of_graded_commutator", "supertrace_of_odd",
                             "trace_of_adjoint"})
      o.require(check(rep, name).max_abs == 0.0, std::string(name) + " at n=" + std::to_string(n));
    o.require(rep.pass(), "suite failed at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "4 laws exact 0, 1000 trials, orders 2-4";
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n : {2, 3}) {
    auto cfg = config("cochain-fi", n == 2 ? 1000 : 2000);
    cfg.order = n;
    const auto rep = run_suite(cfg);
    const std::string tag = "gl(" + std::to_string(n) + ")";
    o.require(check(rep, "wedge_norm").max_abs == 0.0, tag + " wedge-norm");
    o.require(check(rep, "fi_exhaustive").max_abs == 0.0, tag + " exhaustive FI");
    o.require(check(rep, "fi_random").max_abs == 0.0 && check(rep, "fi_random").trials == (n == 2 ? 1000 : 2000),
              tag + " random FI");
    o.require(n != 2 || check(rep, "fi_exhaustive").trials == 1024, "gl(2) tuple count");
    o.require(rep.pass(), tag + " sufficiency");
  }
  auto cfg = config("cochain-fi", 200);
  cfg.algebra_file = fixtures + "/abelian4.json";
  cfg.cochain_file = fixtures + "/abelian4_omega2.json";
  cfg.arity = 4;
  const auto rep = run_suite(cfg);
  o.require(check(rep, "fi_exhaustive").max_abs == 0.0 && check(rep, "fi_exhaustive").trials == 16384,
            "abelian n=4 exhaustive");
  o.require(rep.pass(), "abelian sufficiency");
  if (o.pass) o.detail = "gl(2): 1024 basis tuples, gl(3): 2000 random + 59049 basis tuples, abelian n=4: 16384 tuples; all 0";
  return o;
}

Outcome c8() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
    auto cfg = config("cochain-gfi", 32 * 20);
    cfg.m = m;
    cfg.n = n;
    const auto rep = run_suite(cfg);
    const std::string tag = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    for (const char* name : {"condition_i", "condition_ii", "gfi_exhaustive", "gfi_random"})
      o.require(check(rep, name).max_abs == 0.0, tag + " " + name);
    o.require(m != 1 || check(rep, "gfi_exhaustive").trials == 1024, "gl(1|1) tuple count");
    o.require(rep.pass(), tag + " sufficiency");
  }
  if (o.pass) o.detail = "conditions (i),(ii) exact; GFI 0 exhaustive and random at gl(1|1), gl(2|1)";
  return o;
}

Outcome c9() {
  Outcome o;
  const auto rep = run_suite(config("gl-crosscheck", 100));
  for (const auto& c : rep.checks) o.require(c.max_abs == 0.0 && c.pass, c.name);
  if (o.pass) o.detail = "gl(2) and gl(1|1) brackets match matrix evaluation on 100 tuples each";
  return o;
}

Outcome c10() {
  Outcome o;
  o.require(corpus_cubic.size() == 3 && corpus_super.size() == 2, "corpus missing");
  std::int64_t trials = 0;
  for (const auto& rep : corpus_cubic) {
    const auto& c = check(rep, "ternary_commutator_equivalence");
    o.require(c.max_abs == 0.0, "ternary commutator");
    trials += c.trials;
  }
  for (const auto& rep : corpus_super) {
    const auto& c = check(rep, "presentation_equivalence");
    o.require(c.max_abs == 0.0, "graded triple commutator");
    trials += c.trials;
  }
  if (o.pass) o.detail = "both presentations agree on " + std::to_string(trials) + " corpus triples";
  return o;
}

Outcome c11() {
  Outcome o;
  auto cfg = config("cochain-fi", 1000);
  cfg.algebra_file = fixtures + "/h3.json";
  cfg.cochain_file = fixtures + "/h3_e3star.json";
  const auto rep = run_suite(cfg);
  const auto& wedge = check(rep, "wedge_norm");
  const auto& ex = check(rep, "fi_exhaustive");
  o.require(ex.trials == 243, "exhaustive search incomplete");
  o.require(rep.pass(), "report failed");
  o.detail = "wedge-norm " + fmt(wedge.max_abs) + ", exhaustive FI max " + fmt(ex.max_abs) + " over " +
             std::to_string(ex.trials) + " tuples (" + (ex.witness ? "violation found" : "no violation") + ")";
  return o;
}

Outcome c12() {
  Outcome o;
  for (const auto& suite : suite_names()) {
    const std::string args = "verify " + suite + " --trials 50";
    const auto a = run_cli(args), b = run_cli(args);
    o.require(a.status == 0 && !a.out.empty() && a.out == b.out, suite + " not deterministic");
  }
  const std::string base = "verify cochain-fi --cochain " + fixtures + "/h3_e3star.json --algebra " + fixtures;
  const int pass = run_cli(base + "/h3.json").status;
  const int fail = run_cli(base + "/bad_jacobi.json").status;
  const int malformed = run_cli(base + "/malformed.json").status;
  const int bad_flag = run_cli("verify cubic-fi --mode exact --tol 0.5").status;
  o.require(pass == 0, "pass fixture exit " + std::to_string(pass));
  o.require(fail == 1, "fail fixture exit " + std::to_string(fail));
  o.require(malformed == 2, "malformed fixture exit " + std::to_string(malformed));
  o.require(bad_flag == 2, "config error exit " + std::to_string(bad_flag));
  if (o.pass) o.detail = "9 suites byte-identical across runs; exit codes 0/1/2 on pass/fail/malformed";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cubic Filippov-Jacobi", 40.0, c1},
      {2, "triple-product identities", 10.0, c2},
      {3, "associativity kinds", 5.0, c3},
      {4, "graded Filippov-Jacobi for cubic supermatrices", 30.0, c4},
      {5, "super triple-product identities", 20.0, c5},
      {6, "trace laws", 5.0, c6},
      {7, "sufficiency for cochain-induced brackets", 60.0, c7},
      {8, "sufficiency for graded ternary brackets", 60.0, c8},
      {9, "matrix cross-check of induced brackets", 5.0, c9},
      {10, "equivalence of bracket presentations", 1.0, c10},
      {11, "h3 necessity exploration", 1.0, c11},
      {12, "determinism and exit codes", 120.0, c12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "runtime " + fmt(secs) + " s exceeds " + fmt(c.limit_s) + " s");
    failures += !o.pass;
    std::printf("criterion %2d %s  %-48s %7.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
