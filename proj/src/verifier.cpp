#include "nambu3/verifier.hpp"

#include <array>
#include <functional>
#include <map>

#include "nambu3/induced_bracket.hpp"
#include "nambu3/io.hpp"
#include "nambu3/square_matrix.hpp"

namespace nambu3 {

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw ConfigError("unknown mode \"" + s + "\" (expected exact|float)");
}

const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cubic-fi",   "cubic-prop1", "cubic-assoc",
                                                 "super-gfi",  "super-prop2", "trace-laws",
                                                 "cochain-fi", "cochain-gfi", "gl-crosscheck"};
  return names;
}

double SuiteConfig::effective_tol() const {
  if (mode == Mode::Exact) return 0.0;
  return tol.value_or(1e-9);
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("unknown suite \"" + suite + "\"");
  if (mode == Mode::Exact && tol && *tol != 0.0) throw ConfigError("exact mode requires tol = 0");
  if (mode == Mode::Float && tol && !(*tol > 0.0)) throw ConfigError("float mode requires tol > 0");
  if (mode == Mode::Exact && range < 1) throw ConfigError("range must be at least 1 in exact mode");
  if (range > 1'000'000) throw ConfigError("range must not exceed 1e6");
  if (trials && *trials < 0) throw ConfigError("trials must be nonnegative");
  if (order && *order < 1) throw ConfigError("order must be positive");
  if (order && *order > 8) throw ConfigError("order must not exceed 8");
  if (r && *r < 1) throw ConfigError("r must be positive");
  if (s && *s < 1) throw ConfigError("s must be positive");
  if (m && *m < 1) throw ConfigError("m must be positive");
  if (n && *n < 1) throw ConfigError("n must be positive");
  if (arity && *arity < 3) throw ConfigError("arity must be at least 3");
  if (r.has_value() != s.has_value()) throw ConfigError("--r and --s must be given together");
  if (!cochain_file.empty() && algebra_file.empty()) throw ConfigError("--cochain requires --algebra");
  if (!algebra_file.empty() && cochain_file.empty()) throw ConfigError("--algebra requires --cochain");
  if (!algebra_file.empty() && suite != "cochain-fi" && suite != "cochain-gfi")
    throw ConfigError("--algebra/--cochain are only used by cochain-fi and cochain-gfi");
  if (!matrix_file.empty() && suite != "trace-laws") throw ConfigError("--matrix is only used by trace-laws");
}

namespace {

template <ScalarType S>
using Cubic = Matrix3<S>;

template <ScalarType S>
Json matrices_witness(std::initializer_list<const Matrix3<S>*> ms) {
  Json out = Json::array();
  for (const auto* m : ms) out.push_back(matrix3_to_json(*m));
  return out;
}

template <ScalarType S>
Json supers_witness(const std::vector<SuperCubic<S>>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(super_to_json(x));
  return out;
}

struct Context {
  const SuiteConfig& cfg;
  double tol;
  Xoshiro256ss rng;
  std::int64_t trials;
};

template <ScalarType S>
std::vector<ResidualReport> finish_all(std::vector<ResidualAccumulator>& accs) {
  std::vector<ResidualReport> out;
  for (const auto& a : accs) out.push_back(a.finish());
  return out;
}

// ---- cubic matrices -------------------------------------------------------

template <ScalarType S>
std::vector<ResidualReport> suite_cubic_fi(Context& ctx, int n) {
  ResidualAccumulator fi("filippov_jacobi", ctx.tol), eq("ternary_commutator_equivalence", ctx.tol),
      cyc("cyclic_symmetry", ctx.tol), skew("skew_symmetry", ctx.tol);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    const auto a = random_cubic<S>(ctx.rng, n, ctx.cfg.range), b = random_cubic<S>(ctx.rng, n, ctx.cfg.range),
               c = random_cubic<S>(ctx.rng, n, ctx.cfg.range), d = random_cubic<S>(ctx.rng, n, ctx.cfg.range),
               e = random_cubic<S>(ctx.rng, n, ctx.cfg.range);
    const auto w5 = [&] { return matrices_witness<S>({&a, &b, &c, &d, &e}); };
    const auto w3 = [&] { return matrices_witness<S>({&a, &b, &c}); };
    fi.add(max_abs(fi_residual_matrix(a, b, c, d, e)), w5);
    const auto abc = quantum_nambu(a, b, c);
    eq.add(max_abs(ternary_commutator(a, b, c) - abc), w3);
    cyc.add(std::max(max_abs(abc - quantum_nambu(b, c, a)), max_abs(abc - quantum_nambu(c, a, b))), w3);
    skew.add(std::max({max_abs(abc + quantum_nambu(b, a, c)), max_abs(abc + quantum_nambu(a, c, b)),
                       max_abs(abc + quantum_nambu(c, b, a))}),
             w3);
  }
  std::vector<ResidualAccumulator> accs{fi, eq, cyc, skew};
  return finish_all<S>(accs);
}

template <ScalarType S>
std::vector<ResidualReport> suite_cubic_prop1(Context& ctx, int n) {
  std::vector<ResidualAccumulator> accs;
  for (const char* name : kProp1Names) accs.emplace_back(name, ctx.tol);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    std::array<Cubic<S>, 5> xs;
    for (auto& x : xs) x = random_cubic<S>(ctx.rng, n, ctx.cfg.range);
    const auto res = prop1_residual_matrices(xs[0], xs[1], xs[2], xs[3], xs[4]);
    for (std::size_t i = 0; i < res.size(); ++i)
      accs[i].add(max_abs(res[i]), [&] { return matrices_witness<S>({&xs[0], &xs[1], &xs[2], &xs[3], &xs[4]}); });
  }
  return finish_all<S>(accs);
}

template <ScalarType S>
std::vector<ResidualReport> suite_cubic_assoc(Context& ctx, int n) {
  ResidualAccumulator lr("lr_associativity", ctx.tol);
  ResidualAccumulator second("second_kind_associativity", ctx.tol);
  ResidualReport first;
  first.name = "first_kind_counterexample";
  first.note = "pass means some trial violates first-kind associativity; witness stored";
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    std::array<Cubic<S>, 5> xs;
    for (auto& x : xs) x = random_cubic<S>(ctx.rng, n, ctx.cfg.range);
    const auto wit = [&] { return matrices_witness<S>({&xs[0], &xs[1], &xs[2], &xs[3], &xs[4]}); };
    const auto reps = associativity_residuals(xs[0], xs[1], xs[2], xs[3], xs[4], ctx.tol);
    lr.add(reps[0].max_abs, wit);
    second.add(reps[2].max_abs, wit);
    ++first.trials;
    if (reps[1].max_abs > first.max_abs) {
      if (!first.witness && reps[1].max_abs > ctx.tol) first.witness = wit();
      first.max_abs = std::max(first.max_abs, reps[1].max_abs);
    }
  }
  first.pass = first.max_abs > ctx.tol;
  auto sec = second.finish();
  sec.asserted = false;
  sec.note = "measured only; generically nonzero";
  return {lr.finish(), first, sec};
}

// ---- cubic supermatrices --------------------------------------------------

SuperStructure super_structure(const SuiteConfig& cfg) {
  return SuperStructure{cfg.r.value_or(1), cfg.s.value_or(1)};
}

/// Degrees of `count` arguments from the bits of a pattern number, most significant first.
std::vector<int> pattern_degrees(std::int64_t trial, int count) {
  const int pattern = static_cast<int>(trial % (std::int64_t{1} << count));
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = (pattern >> (count - 1 - i)) & 1;
  return out;
}

template <ScalarType S>
std::vector<SuperCubic<S>> draw_pattern(Context& ctx, const SuperStructure& ss, const std::vector<int>& degrees) {
  std::vector<SuperCubic<S>> out;
  for (int p : degrees) out.push_back(random_homogeneous<S>(ctx.rng, ss, p, ctx.cfg.range));
  return out;
}

template <ScalarType S>
std::vector<ResidualReport> suite_super_gfi(Context& ctx) {
  const SuperStructure ss = super_structure(ctx.cfg);
  ResidualAccumulator gfi("graded_filippov_jacobi", ctx.tol), eq("presentation_equivalence", ctx.tol),
      s1("graded_skew_xy", ctx.tol), s2("graded_skew_yz", ctx.tol), s3("graded_skew_xz", ctx.tol),
      deg("degree_additivity", 0.0);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    const auto degs = pattern_degrees(t, 5);
    const auto xs = draw_pattern<S>(ctx, ss, degs);
    const auto& [x, y, z, v, w] = std::tie(xs[0], xs[1], xs[2], xs[3], xs[4]);
    const auto wit = [&] { return supers_witness<S>(xs); };
    gfi.add(max_abs(gfi_residual_matrix(x, y, z, v, w)), wit);
    const auto xyz = quantum_super_nambu(x, y, z);
    eq.add(max_abs((graded_triple_commutator(x, y, z) - xyz).mat), wit);
    const int a = degs[0], b = degs[1], c = degs[2];
    s1.add(max_abs((xyz + signed_super(sign_pow(a * b), quantum_super_nambu(y, x, z))).mat), wit);
    s2.add(max_abs((xyz + signed_super(sign_pow(b * c), quantum_super_nambu(x, z, y))).mat), wit);
    s3.add(max_abs((xyz + signed_super(sign_pow(a * b + b * c + a * c), quantum_super_nambu(z, y, x))).mat), wit);
    const Degree got = degree(xyz);
    const bool ok = got == Degree::Zero || got == (((a + b + c) & 1) ? Degree::Odd : Degree::Even);
    deg.add(ok ? 0.0 : 1.0, wit);
  }
  std::vector<ResidualAccumulator> accs{gfi, eq, s1, s2, s3, deg};
  return finish_all<S>(accs);
}

template <ScalarType S>
std::vector<ResidualReport> suite_super_prop2(Context& ctx) {
  const SuperStructure ss = super_structure(ctx.cfg);
  std::vector<ResidualAccumulator> accs;
  for (const char* name : kProp2Names) accs.emplace_back(name, ctx.tol);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    const auto xs = draw_pattern<S>(ctx, ss, pattern_degrees(t, 5));
    const auto res = prop2_residual_matrices(xs[0], xs[1], xs[2], xs[3], xs[4]);
    for (std::size_t i = 0; i < res.size(); ++i) accs[i].add(max_abs(res[i]), [&] { return supers_witness<S>(xs); });
  }
  return finish_all<S>(accs);
}

template <ScalarType S>
std::vector<ResidualReport> suite_trace_laws(Context& ctx, int n) {
  if (n < 2) throw ConfigError("trace-laws needs order >= 2 for the super structure");
  SuperStructure ss{(n + 1) / 2, n - (n + 1) / 2};
  if (ctx.cfg.r) {
    ss = super_structure(ctx.cfg);
    if (ss.order() != n) throw ConfigError("trace-laws: r + s must equal the order");
  }
  const auto scalar_abs = [](const S& z) { return scalar_traits<S>::abs(z); };
  ResidualAccumulator tr_comm("trace_of_commutator", ctx.tol), str_comm("supertrace_of_graded_commutator", ctx.tol),
      str_odd("supertrace_of_odd", ctx.tol), tr_adj("trace_of_adjoint", ctx.tol),
      tr_sections("trace_section_sum", ctx.tol), str_sections("supertrace_section_sum", ctx.tol),
      str_swap("supertrace_graded_swap", ctx.tol);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    const auto a = random_cubic<S>(ctx.rng, n, ctx.cfg.range), b = random_cubic<S>(ctx.rng, n, ctx.cfg.range);
    const auto w2 = [&] { return matrices_witness<S>({&a, &b}); };
    tr_comm.add(scalar_abs(trace_dir(commutator(a, b))), w2);
    tr_adj.add(scalar_abs(trace_dir(hermitian_adjoint(a)) - scalar_traits<S>::conj(trace_dir(a))), w2);
    S by_sections{};
    for (int l = 1; l <= n; ++l) by_sections += section(a, Direction::J, l).trace();
    tr_sections.add(scalar_abs(trace_dir(a) - by_sections), w2);

    const auto degs = pattern_degrees(t, 2);
    const auto xs = draw_pattern<S>(ctx, ss, degs);
    const auto ws = [&] { return supers_witness<S>(xs); };
    str_comm.add(scalar_abs(supertrace(graded_commutator(xs[0], xs[1]))), ws);
    str_odd.add(scalar_abs(supertrace(odd_part(SuperCubic<S>{a, ss}))), w2);
    S super_sections{};
    for (int l = 1; l <= n; ++l) super_sections += square_supertrace<S>(section(xs[0].mat, Direction::J, l), ss.r);
    str_sections.add(scalar_abs(supertrace(xs[0]) - super_sections), ws);
    str_swap.add(scalar_abs(supertrace(super_mul(xs[0], xs[1])) -
                            signed_scalar(sign_pow(degs[0] * degs[1]), supertrace(super_mul(xs[1], xs[0])))),
                 ws);
  }
  std::vector<ResidualAccumulator> accs{tr_comm, str_comm, str_odd, tr_adj, tr_sections, str_sections, str_swap};
  auto out = finish_all<S>(accs);
  if (!ctx.cfg.matrix_file.empty()) {
    const auto a = matrix3_from_json<S>(load_json_file(ctx.cfg.matrix_file));
    if (!a.is_cubic()) throw InputError("trace-laws: --matrix must be cubic");
    ResidualAccumulator file_laws("input_matrix_trace_laws", ctx.tol);
    S by_sections{};
    for (int l = 1; l <= a.order(); ++l) by_sections += section(a, Direction::J, l).trace();
    file_laws.add(std::max(scalar_abs(trace_dir(hermitian_adjoint(a)) - scalar_traits<S>::conj(trace_dir(a))),
                           scalar_abs(trace_dir(a) - by_sections)),
                  [&] { return matrices_witness<S>({&a}); });
    out.push_back(file_laws.finish());
  }
  return out;
}

// ---- cochains ---------------------------------------------------------------

template <ScalarType S>
TrialPolicy policy_of(const Context& ctx) {
  return TrialPolicy{ctx.trials, ctx.cfg.seed, ctx.cfg.range, ctx.tol};
}

template <ScalarType S>
std::pair<StructureAlgebra<S>, Cochain<S>> load_algebra_and_cochain(const SuiteConfig& cfg) {
  auto g = algebra_from_json<S>(load_json_file(cfg.algebra_file));
  auto w = cochain_from_json<S>(load_json_file(cfg.cochain_file), g.parity());
  return {std::move(g), std::move(w)};
}

template <ScalarType S>
std::vector<ResidualReport> suite_cochain_fi(Context& ctx) {
  if (!ctx.cfg.algebra_file.empty()) {
    auto [g, w] = load_algebra_and_cochain<S>(ctx.cfg);
    const int n = ctx.cfg.arity.value_or(w.degree() + 2);
    if (n != w.degree() + 2) throw ConfigError("arity must equal cochain degree + 2");
    if (g.is_graded()) throw InputError("cochain-fi needs an ungraded algebra (all parities 0)");
    return theorem1_report(g, w, n, policy_of<S>(ctx));
  }
  if (ctx.cfg.arity && *ctx.cfg.arity != 3) throw ConfigError("built-in gl(n) with trace supports arity 3 only");
  const auto gl = build_gl<S>(ctx.cfg.order.value_or(2));
  return theorem1_report(gl.algebra, gl.cochain, 3, policy_of<S>(ctx));
}

template <ScalarType S>
std::vector<ResidualReport> suite_cochain_gfi(Context& ctx) {
  if (!ctx.cfg.algebra_file.empty()) {
    auto [g, w] = load_algebra_and_cochain<S>(ctx.cfg);
    if (w.degree() != 1) throw InputError("cochain-gfi needs a 1-cochain");
    return theorem2_report(g, w, policy_of<S>(ctx));
  }
  const auto gl = build_gl_super<S>(ctx.cfg.m.value_or(1), ctx.cfg.n.value_or(1));
  return theorem2_report(gl.algebra, gl.cochain, policy_of<S>(ctx));
}

template <ScalarType S>
std::vector<ResidualReport> suite_gl_crosscheck(Context& ctx) {
  std::vector<ResidualReport> out;
  const auto gl = build_gl<S>(ctx.cfg.order.value_or(2));
  const auto glsup = build_gl_super<S>(ctx.cfg.m.value_or(1), ctx.cfg.n.value_or(1));
  const int m = ctx.cfg.m.value_or(1);

  auto axioms = validate_algebra(gl.algebra, ctx.tol);
  axioms.name = "gl_algebra_axioms";
  out.push_back(axioms);
  auto axioms_super = validate_algebra(glsup.algebra, ctx.tol);
  axioms_super.name = "gl_super_algebra_axioms";
  out.push_back(axioms_super);

  ResidualAccumulator tr_cocycle("trace_cocycle", ctx.tol), str_cocycle("supertrace_cocycle", ctx.tol);
  tr_cocycle.add(coboundary(gl.algebra, gl.cochain).max_abs());
  str_cocycle.add(coboundary(glsup.algebra, glsup.cochain).max_abs());
  out.push_back(tr_cocycle.finish());
  out.push_back(str_cocycle.finish());

  ResidualAccumulator plain("gl_bracket_vs_matrix", ctx.tol), graded("gl_super_bracket_vs_matrix", ctx.tol);
  for (std::int64_t t = 0; t < ctx.trials; ++t) {
    std::vector<Element<S>> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(detail::random_element(ctx.rng, gl.algebra, ctx.cfg.range));
    const auto lhs = nary_bracket_from_cochain(gl.algebra, gl.cochain, std::span<const Element<S>>(xs));
    const auto rhs = square_to_element<S>(square_quantum_nambu<S>(
        element_to_square(gl.size, xs[0]), element_to_square(gl.size, xs[1]), element_to_square(gl.size, xs[2])));
    plain.add(max_abs<S>(lhs - rhs), [&] { return detail::tuple_witness<S>(xs, {}); });

    const auto degs = pattern_degrees(t, 3);
    std::vector<Element<S>> ys;
    for (int p : degs) ys.push_back(detail::random_element(ctx.rng, glsup.algebra, ctx.cfg.range, p));
    const auto glhs = graded_ternary_bracket_from_cochain(glsup.algebra, glsup.cochain, ys[0], ys[1], ys[2]);
    const auto grhs = square_to_element<S>(square_quantum_super_nambu<S>(element_to_square(glsup.size, ys[0]),
                                                                         element_to_square(glsup.size, ys[1]),
                                                                         element_to_square(glsup.size, ys[2]), m));
    graded.add(max_abs<S>(glhs - grhs), [&] { return detail::tuple_witness<S>(ys, {}); });
  }
  out.push_back(plain.finish());
  out.push_back(graded.finish());
  return out;
}

std::int64_t default_trials(const std::string& suite) {
  static const std::map<std::string, std::int64_t> defaults = {
      {"cubic-fi", 1000},    {"cubic-prop1", 1000}, {"cubic-assoc", 1000},
      {"super-gfi", 640},    {"super-prop2", 640},  {"trace-laws", 1000},
      {"cochain-fi", 1000},  {"cochain-gfi", 640},  {"gl-crosscheck", 100}};
  return defaults.at(suite);
}

Json config_echo(const SuiteConfig& cfg, std::int64_t trials, double tol) {
  Json j{{"suite", cfg.suite},
         {"mode", to_string(cfg.mode)},
         {"seed", cfg.seed},
         {"trials", trials},
         {"tol", tol},
         {"exhaustive_limit", kExhaustiveLimit}};
  if (cfg.mode == Mode::Exact) j["range"] = cfg.range;
  if (cfg.order) j["order"] = *cfg.order;
  if (cfg.r) j["r"] = *cfg.r;
  if (cfg.s) j["s"] = *cfg.s;
  if (cfg.m) j["m"] = *cfg.m;
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.arity) j["arity"] = *cfg.arity;
  if (!cfg.algebra_file.empty()) j["algebra"] = cfg.algebra_file;
  if (!cfg.cochain_file.empty()) j["cochain"] = cfg.cochain_file;
  if (!cfg.matrix_file.empty()) j["matrix"] = cfg.matrix_file;
  return j;
}

template <ScalarType S>
std::vector<ResidualReport> dispatch(Context& ctx) {
  const auto& name = ctx.cfg.suite;
  if (name == "cubic-fi") return suite_cubic_fi<S>(ctx, ctx.cfg.order.value_or(3));
  if (name == "cubic-prop1") return suite_cubic_prop1<S>(ctx, ctx.cfg.order.value_or(3));
  if (name == "cubic-assoc") return suite_cubic_assoc<S>(ctx, ctx.cfg.order.value_or(2));
  if (name == "super-gfi") return suite_super_gfi<S>(ctx);
  if (name == "super-prop2") return suite_super_prop2<S>(ctx);
  if (name == "trace-laws") return suite_trace_laws<S>(ctx, ctx.cfg.order.value_or(3));
  if (name == "cochain-fi") return suite_cochain_fi<S>(ctx);
  if (name == "cochain-gfi") return suite_cochain_gfi<S>(ctx);
  if (name == "gl-crosscheck") return suite_gl_crosscheck<S>(ctx);
  throw ConfigError("unknown suite \"" + name + "\"");
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const std::int64_t trials = cfg.trials.value_or(default_trials(cfg.suite));
  const double tol = cfg.effective_tol();
  Context ctx{cfg, tol, Xoshiro256ss(cfg.seed), trials};
  VerificationReport report;
  report.config = config_echo(cfg, trials, tol);
  report.checks = cfg.mode == Mode::Exact ? dispatch<GaussInt>(ctx) : dispatch<Complex>(ctx);
  return report;
}

}  // namespace nambu3
