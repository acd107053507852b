#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nambu3/cubic_super.hpp"
#include "nambu3/random.hpp"
#include "nambu3/report.hpp"

namespace nambu3 {

enum class Mode { Exact, Float };

Mode parse_mode(const std::string& s);
const char* to_string(Mode m);

/// Named suites understood by run_suite.
const std::vector<std::string>& suite_names();

/// Parameters of one verification run. Unset optionals take per-suite defaults.
struct SuiteConfig {
  std::string suite;
  std::optional<int> order;
  std::optional<int> r, s;
  std::optional<int> m, n;
  std::optional<int> arity;
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 42;
  Mode mode = Mode::Exact;
  std::optional<double> tol;
  std::int64_t range = 3;
  std::string algebra_file;
  std::string cochain_file;
  std::string matrix_file;

  /// Exact mode pins tol to 0; float mode requires tol > 0 (default 1e-9).
  double effective_tol() const;
  /// Throws ConfigError on an invalid combination.
  void validate() const;
};

/// Runs a suite. Config problems raise ConfigError, unreadable inputs InputError.
VerificationReport run_suite(const SuiteConfig& cfg);

template <ScalarType S>
Matrix3<S> random_cubic(Xoshiro256ss& rng, int n, std::int64_t range) {
  return Matrix3<S>::from_function(n, n, n, [&](int, int, int) { return draw_scalar<S>(rng, range); });
}

/// Entries consumed in lexicographic (i,j,k) order, real part then imaginary part.
template <ScalarType S>
Matrix3<S> gen_random_cubic(int n, std::uint64_t seed, std::int64_t range) {
  if (n < 1) throw ConfigError("gen_random_cubic: order must be positive");
  if (scalar_traits<S>::exact && range < 1) throw ConfigError("gen_random_cubic: range must be at least 1");
  Xoshiro256ss rng(seed);
  return random_cubic<S>(rng, n, range);
}

/// Draws a full random matrix and zeroes the cells of the opposite parity.
template <ScalarType S>
SuperCubic<S> random_homogeneous(Xoshiro256ss& rng, const SuperStructure& ss, int parity, std::int64_t range) {
  SuperCubic<S> full{random_cubic<S>(rng, ss.order(), range), ss};
  return parity_part(full, parity);
}

}  // namespace nambu3
