#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "nambu3/lie_algebra.hpp"

namespace nambu3 {

/// Basis index tuple, 0-based.
using IndexTuple = std::vector<int>;

/// Sorts `idx` ascending and returns the sign picked up on the way, where
/// exchanging neighbours of parities p, q contributes -(-1)^{pq}. Returns 0
/// when an even basis index repeats (the value is then forced to vanish).
inline int canonical_sign(IndexTuple& idx, const std::vector<int>& parity) {
  int sign = 1;
  for (std::size_t pass = 0; pass < idx.size(); ++pass)
    for (std::size_t i = 0; i + 1 < idx.size() - pass; ++i)
      if (idx[i] > idx[i + 1]) {
        sign *= -sign_pow(parity[idx[i]] * parity[idx[i + 1]]);
        std::swap(idx[i], idx[i + 1]);
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1] && parity[idx[i]] == 0) return 0;
  return sign;
}

/// A tuple is canonical when non-decreasing with repeats only at odd indices.
inline bool is_canonical(const IndexTuple& idx, const std::vector<int>& parity) {
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    if (idx[i] > idx[i + 1]) return false;
    if (idx[i] == idx[i + 1] && parity[idx[i]] == 0) return false;
  }
  return true;
}

/// Graded-alternating multilinear form of degree m on a d-dimensional
/// (super)algebra. Values are held densely over all d^m basis tuples; the
/// canonical entries are the independent ones.
template <ScalarType S>
class Cochain {
public:
  struct Entry {
    IndexTuple args;
    S value;
  };

  static constexpr std::size_t kMaxDenseSize = std::size_t{1} << 24;

  Cochain() = default;

  static Cochain zero(std::vector<int> parity, int degree) {
    Cochain out;
    out.init(std::move(parity), degree);
    return out;
  }

  /// Extends canonical entries to all tuples by graded antisymmetry.
  static Cochain from_canonical(std::vector<int> parity, int degree, const std::vector<Entry>& entries) {
    Cochain out;
    out.init(std::move(parity), degree);
    std::map<IndexTuple, S> table;
    for (const auto& e : entries) {
      if (static_cast<int>(e.args.size()) != degree) throw ArityError("cochain entry has the wrong arity");
      for (int a : e.args)
        if (a < 0 || a >= out.dim()) throw IndexError("cochain entry index out of range");
      if (!is_canonical(e.args, out.parity_))
        throw InputError("cochain entry arguments must be increasing (repeats allowed only for odd basis elements)");
      if (!table.emplace(e.args, e.value).second) throw InputError("duplicate cochain entry");
    }
    IndexTuple idx(degree, 0);
    for (std::size_t flat = 0; flat < out.values_.size(); ++flat) {
      out.unflatten(flat, idx);
      IndexTuple key = idx;
      const int sign = canonical_sign(key, out.parity_);
      if (sign == 0) continue;
      if (auto it = table.find(key); it != table.end()) out.values_[flat] = signed_scalar(sign, it->second);
    }
    return out;
  }

  /// Takes a dense table as-is; the caller guarantees graded antisymmetry.
  static Cochain from_dense(std::vector<int> parity, int degree, std::vector<S> values) {
    Cochain out;
    out.init(std::move(parity), degree);
    if (values.size() != out.values_.size()) throw ShapeError("cochain: dense table has the wrong size");
    out.values_ = std::move(values);
    return out;
  }

  int dim() const { return static_cast<int>(parity_.size()); }
  int degree() const { return degree_; }
  const std::vector<int>& parity() const { return parity_; }
  const std::vector<S>& dense() const { return values_; }

  const S& value(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != degree_) throw ArityError("cochain evaluated with the wrong arity");
    std::size_t flat = 0;
    for (int a : idx) {
      if (a < 0 || a >= dim()) throw IndexError("cochain argument index out of range");
      flat = flat * dim() + a;
    }
    return values_[flat];
  }

  /// Multilinear extension to arbitrary elements.
  S evaluate(std::span<const Element<S>> xs) const {
    if (static_cast<int>(xs.size()) != degree_) throw ArityError("cochain evaluated with the wrong arity");
    for (const auto& x : xs)
      if (x.size() != dim()) throw ShapeError("cochain argument has the wrong dimension");
    S acc{};
    evaluate_rec(xs, 0, 0, S(1), acc);
    return acc;
  }

  /// Nonzero canonical entries in lexicographic order.
  std::vector<Entry> canonical_entries() const {
    std::vector<Entry> out;
    IndexTuple idx(degree_, 0);
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
      unflatten(flat, idx);
      if (is_canonical(idx, parity_) && !scalar_traits<S>::is_zero(values_[flat])) out.push_back({idx, values_[flat]});
    }
    return out;
  }

  void unflatten(std::size_t flat, IndexTuple& idx) const {
    for (int pos = degree_ - 1; pos >= 0; --pos) {
      idx[pos] = static_cast<int>(flat % dim());
      flat /= dim();
    }
  }

  double max_abs() const {
    double best = 0.0;
    for (const S& v : values_) best = std::max(best, scalar_traits<S>::abs(v));
    return best;
  }

private:
  void init(std::vector<int> parity, int degree) {
    if (degree < 1) throw ArityError("cochain degree must be at least 1");
    if (parity.empty()) throw ShapeError("cochain over a zero-dimensional algebra");
    parity_ = std::move(parity);
    degree_ = degree;
    std::size_t size = 1;
    for (int i = 0; i < degree; ++i) {
      size *= parity_.size();
      if (size > kMaxDenseSize) throw UnsupportedError("cochain too large for dense storage");
    }
    values_.assign(size, S{});
  }

  void evaluate_rec(std::span<const Element<S>> xs, int pos, std::size_t flat, S coeff, S& acc) const {
    if (pos == degree_) {
      if (!scalar_traits<S>::is_zero(values_[flat])) acc += coeff * values_[flat];
      return;
    }
    for (int a = 0; a < dim(); ++a) {
      if (scalar_traits<S>::is_zero(xs[pos][a])) continue;
      evaluate_rec(xs, pos + 1, flat * dim() + a, coeff * xs[pos][a], acc);
    }
  }

  std::vector<int> parity_;
  int degree_ = 0;
  std::vector<S> values_;
};

/// (delta w)(x_0..x_m) = sum_{i<j} (-1)^{i+j+1} w([x_i,x_j], x_0..^i..^j..x_m), indices 0-based,
/// so that (delta w)(x,y) = w([x,y]). Graded algebras are supported for m = 1 only.
template <ScalarType S>
Cochain<S> coboundary(const StructureAlgebra<S>& g, const Cochain<S>& w) {
  if (w.dim() != g.dim()) throw ShapeError("coboundary: cochain and algebra dimensions differ");
  const int m = w.degree();
  if (g.is_graded() && m >= 2) throw UnsupportedError("coboundary: graded algebras supported for 1-cochains only");
  const int d = g.dim();
  auto out = Cochain<S>::zero(g.parity(), m + 1);
  std::vector<S> values(out.dense().size(), S{});
  IndexTuple idx(m + 1, 0), args(m, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    out.unflatten(flat, idx);
    S acc{};
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        int pos = 1;
        for (int t = 0; t <= m; ++t)
          if (t != i && t != j) args[pos++] = idx[t];
        S term{};
        for (int e = 0; e < d; ++e) {
          const S& c = g.constant(idx[i], idx[j], e);
          if (scalar_traits<S>::is_zero(c)) continue;
          args[0] = e;
          term += c * w.value(args);
        }
        acc += signed_scalar(sign_pow(i + j + 1), term);
      }
    values[flat] = acc;
  }
  return Cochain<S>::from_dense(g.parity(), m + 1, std::move(values));
}

/// Shuffle product (phi ^ psi)(x_1..x_{p+q}) = sum over (p,q)-shuffles of
/// sign * phi(x_sigma(1..p)) psi(x_sigma(p+1..p+q)), with no factorial
/// prefactor. Ungraded only; a degree beyond the dimension gives zero.
template <ScalarType S>
Cochain<S> wedge(const Cochain<S>& phi, const Cochain<S>& psi) {
  if (phi.parity() != psi.parity()) throw ShapeError("wedge: cochains live on different algebras");
  for (int p : phi.parity())
    if (p) throw UnsupportedError("wedge: graded algebras are not supported");
  const int p = phi.degree(), q = psi.degree(), d = phi.dim();
  if (p + q > d) return Cochain<S>::zero(phi.parity(), p + q);
  auto out = Cochain<S>::zero(phi.parity(), p + q);
  std::vector<S> values(out.dense().size(), S{});

  // Enumerate p-subsets of positions once; each fixes a shuffle and its sign.
  std::vector<std::vector<int>> subsets;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == p) {
      subsets.push_back(chosen);
      return;
    }
    for (int t = start; t < p + q; ++t) {
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  IndexTuple idx(p + q, 0), left(p, 0), right(q, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    out.unflatten(flat, idx);
    S acc{};
    for (const auto& sub : subsets) {
      int inversions = 0, li = 0, ri = 0;
      for (int k = 0; k < p; ++k) inversions += sub[k] - k;
      for (int t = 0; t < p + q; ++t) {
        if (li < p && sub[li] == t) left[li++] = idx[t];
        else right[ri++] = idx[t];
      }
      const S& a = phi.value(left);
      if (scalar_traits<S>::is_zero(a)) continue;
      acc += signed_scalar(sign_pow(inversions), a * psi.value(right));
    }
    values[flat] = acc;
  }
  return Cochain<S>::from_dense(phi.parity(), p + q, std::move(values));
}

/// Largest |value| over canonical (strictly increasing) tuples.
template <ScalarType S>
double canonical_max_abs(const Cochain<S>& w) {
  double best = 0.0;
  for (const auto& e : w.canonical_entries()) best = std::max(best, scalar_traits<S>::abs(e.value));
  return best;
}

}  // namespace nambu3
