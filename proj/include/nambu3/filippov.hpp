#pragma once

#include <span>
#include <vector>

#include "nambu3/error.hpp"
#include "nambu3/scalar.hpp"

namespace nambu3 {

/// Residual of the n-ary Filippov-Jacobi identity for an arbitrary bracket
///   [x_1..x_{n-1},[y_1..y_n]] - sum_k [y_1..[x_1..x_{n-1},y_k]..y_n].
/// `bracket` maps a span of n values to a value.
template <class V, class Bracket>
V filippov_residual(const Bracket& bracket, std::span<const V> xs, std::span<const V> ys) {
  const std::size_t n = ys.size();
  if (n < 2 || xs.size() + 1 != n) throw ArityError("filippov_residual: expected n-1 and n arguments");
  std::vector<V> args(xs.begin(), xs.end());
  args.push_back(bracket(ys));
  V res = bracket(std::span<const V>(args));
  for (std::size_t k = 0; k < n; ++k) {
    args.back() = ys[k];
    std::vector<V> outer(ys.begin(), ys.end());
    outer[k] = bracket(std::span<const V>(args));
    res = res - bracket(std::span<const V>(outer));
  }
  return res;
}

/// Graded version: the k-th term carries (-1)^{alpha_k} with
/// alpha_k = (sum_i |x_i|) * (sum_{j<k} |y_j|).
template <class V, class Bracket>
V graded_filippov_residual(const Bracket& bracket, std::span<const V> xs, std::span<const V> ys,
                           std::span<const int> x_parity, std::span<const int> y_parity) {
  const std::size_t n = ys.size();
  if (n < 2 || xs.size() + 1 != n) throw ArityError("graded_filippov_residual: expected n-1 and n arguments");
  if (x_parity.size() != xs.size() || y_parity.size() != ys.size())
    throw ArityError("graded_filippov_residual: parity list length mismatch");
  int x_total = 0;
  for (int p : x_parity) x_total += p;
  std::vector<V> args(xs.begin(), xs.end());
  args.push_back(bracket(ys));
  V res = bracket(std::span<const V>(args));
  int y_prefix = 0;
  for (std::size_t k = 0; k < n; ++k) {
    args.back() = ys[k];
    std::vector<V> outer(ys.begin(), ys.end());
    outer[k] = bracket(std::span<const V>(args));
    const V term = bracket(std::span<const V>(outer));
    res = sign_pow(x_total * y_prefix) > 0 ? V(res - term) : V(res + term);
    y_prefix += y_parity[k];
  }
  return res;
}

}  // namespace nambu3
