#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "nambu3/induced_bracket.hpp"
#include "nambu3/io.hpp"
#include "nambu3/verifier.hpp"

namespace {

using namespace nambu3;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

Direction parse_direction(const std::string& s) {
  if (s == "i" || s == "I") return Direction::I;
  if (s == "j" || s == "J") return Direction::J;
  if (s == "k" || s == "K") return Direction::K;
  throw ConfigError("direction must be one of i, j, k");
}

struct GenOptions {
  std::string kind;
  int order = 3;
  int r = 1, s = 1;
  int m = 1, n = 1;
  std::optional<int> parity;
  std::uint64_t seed = 42;
  std::string mode = "exact";
  std::int64_t range = 3;
  std::string out;
  std::string cochain_out;
};

struct ShowOptions {
  std::string what;
  std::string matrix;
  std::string mode = "exact";
  std::string dir = "j";
  int label = 1;
};

template <ScalarType S>
void run_gen(const GenOptions& o) {
  if (o.kind == "random-cubic") {
    write_output(o.out, canonical_dump(matrix3_to_json(gen_random_cubic<S>(o.order, o.seed, o.range))) + "\n");
  } else if (o.kind == "random-super") {
    if (o.r < 1 || o.s < 1) throw ConfigError("r and s must be positive");
    if (scalar_traits<S>::exact && o.range < 1) throw ConfigError("range must be at least 1");
    SuperStructure ss{o.r, o.s};
    Xoshiro256ss rng(o.seed);
    SuperCubic<S> x{random_cubic<S>(rng, ss.order(), o.range), ss};
    if (o.parity) {
      if (*o.parity != 0 && *o.parity != 1) throw ConfigError("parity must be 0 or 1");
      x = parity_part(x, *o.parity);
    }
    write_output(o.out, canonical_dump(super_to_json(x)) + "\n");
  } else {
    const auto built = o.kind == "gl" ? build_gl<S>(o.order) : build_gl_super<S>(o.m, o.n);
    write_output(o.out, canonical_dump(algebra_to_json(built.algebra)) + "\n");
    if (!o.cochain_out.empty()) write_output(o.cochain_out, canonical_dump(cochain_to_json(built.cochain)) + "\n");
  }
}

template <ScalarType S>
void run_show(const ShowOptions& o) {
  if (o.matrix.empty()) throw ConfigError("--matrix is required");
  const Json j = load_json_file(o.matrix);
  Json out;
  try {
    if (o.what == "supertrace") {
      const auto x = super_from_json<S>(j);
      out = Json{{"supertrace", scalar_to_json(supertrace(x))}, {"degree", to_string(degree(x))}};
    } else {
      const auto a = matrix3_from_json<S>(j);
      const Direction d = parse_direction(o.dir);
      if (o.what == "trace") {
        out = Json{{"direction", to_string(d)}, {"trace", scalar_to_json(trace_dir(a, d))}};
      } else {
        const auto sec = section(a, d, o.label);
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < sec.rows(); ++r) {
          Json row = Json::array();
          for (Eigen::Index c = 0; c < sec.cols(); ++c) row.push_back(scalar_to_json<S>(sec(r, c)));
          rows.push_back(row);
        }
        out = Json{{"direction", to_string(d)}, {"label", o.label}, {"section", rows}};
      }
    }
  } catch (const IndexError& e) {
    throw ConfigError(e.what());
  }
  write_output("", canonical_dump(out) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifier for cubic-matrix Nambu brackets and n-Lie algebras built from cochains"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string mode = "exact", report_format = "json", out;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--order", cfg.order, "Order of cubic matrices, or n for gl(n)");
  verify->add_option("--r", cfg.r, "Even labels of the super structure");
  verify->add_option("--s", cfg.s, "Odd labels of the super structure");
  verify->add_option("--m", cfg.m, "Even size for gl(m|n)");
  verify->add_option("--n", cfg.n, "Odd size for gl(m|n)");
  verify->add_option("--arity", cfg.arity, "Arity of the induced bracket");
  verify->add_option("--trials", cfg.trials, "Random trials");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tol", cfg.tol, "Residual tolerance (float mode)");
  verify->add_option("--range", cfg.range, "Integer range R for exact draws");
  verify->add_option("--algebra", cfg.algebra_file, "Structure-constant file");
  verify->add_option("--cochain", cfg.cochain_file, "Cochain file");
  verify->add_option("--matrix", cfg.matrix_file, "Cubic matrix file checked alongside random draws (trace-laws)");
  verify->add_option("--report", report_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "Output path (default stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate input files");
  gen_cmd->add_option("kind", gen.kind)->required()->check(
      CLI::IsMember({"random-cubic", "random-super", "gl", "gl-super"}));
  gen_cmd->add_option("--order", gen.order, "Order of the cubic matrix, or n for gl(n)");
  gen_cmd->add_option("--r", gen.r);
  gen_cmd->add_option("--s", gen.s);
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--parity", gen.parity, "Keep only cells of this parity (random-super)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--mode", gen.mode)->check(CLI::IsMember({"exact", "float"}));
  gen_cmd->add_option("--range", gen.range);
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");
  gen_cmd->add_option("--cochain-out", gen.cochain_out, "Where to write the trace cochain (gl, gl-super)");

  ShowOptions show;
  auto* show_cmd = app.add_subcommand("show", "Inspect a matrix file");
  show_cmd->add_option("what", show.what)->required()->check(CLI::IsMember({"trace", "supertrace", "section"}));
  show_cmd->add_option("--matrix", show.matrix)->required();
  show_cmd->add_option("--mode", show.mode)->check(CLI::IsMember({"exact", "float"}));
  show_cmd->add_option("--dir", show.dir, "Direction i, j or k");
  show_cmd->add_option("--label", show.label, "Section label (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*verify) {
      cfg.mode = parse_mode(mode);
      const auto rep = run_suite(cfg);
      std::string text;
      if (report_format == "json") {
        text = canonical_dump(to_json(rep)) + "\n";
      } else {
        std::ostringstream os;
        write_text(os, rep);
        text = os.str();
      }
      write_output(out, text);
      return rep.pass() ? kExitPass : kExitFail;
    }
    if (*gen_cmd) {
      if (parse_mode(gen.mode) == Mode::Exact)
        run_gen<GaussInt>(gen);
      else
        run_gen<Complex>(gen);
      return kExitPass;
    }
    if (parse_mode(show.mode) == Mode::Exact)
      run_show<GaussInt>(show);
    else
      run_show<Complex>(show);
    return kExitPass;
  } catch (const Error& e) {
    std::cerr << "nambu3: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "nambu3: " << e.what() << '\n';
    return kExitConfig;
  }
}
