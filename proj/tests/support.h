// Copyright 2026 The defunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEFUNC_TESTS_SUPPORT_H_
#define DEFUNC_TESTS_SUPPORT_H_

// Reference oracles and hand-rolled generators. The oracles are written
// independently of the library: plain recursion over the public accessors,
// no shared helpers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "defunc/accumulation.h"
#include "defunc/expr.h"
#include "defunc/gencomp.h"
#include "defunc/rng.h"
#include "defunc/stack_machine.h"

namespace defunc::testing {

inline constexpr LiteralRange kSmallLiterals = {-100, 100};
inline constexpr LiteralRange kAllLiterals = {
    std::numeric_limits<std::int64_t>::min(),
    std::numeric_limits<std::int64_t>::max()};

inline std::int64_t wsub(std::int64_t m, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(m) -
                                   static_cast<std::uint64_t>(n));
}
inline std::int64_t wadd(std::int64_t m, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(m) +
                                   static_cast<std::uint64_t>(n));
}
inline std::int64_t wmul(std::int64_t m, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(m) *
                                   static_cast<std::uint64_t>(n));
}

inline std::int64_t oracle_eval(const Expr& e) {
  if (e.is_lit()) return e.value();
  return wsub(oracle_eval(e.left()), oracle_eval(e.right()));
}

inline std::size_t oracle_depth(const Expr& e) {
  if (e.is_lit()) return 1;
  return 1 + std::max(oracle_depth(e.left()), oracle_depth(e.right()));
}

inline void oracle_literals(const Expr& e, std::vector<std::int64_t>& out) {
  if (e.is_lit()) {
    out.push_back(e.value());
    return;
  }
  oracle_literals(e.left(), out);
  oracle_literals(e.right(), out);
}

inline std::size_t oracle_diffs(const Expr& e) {
  if (e.is_lit()) return 0;
  return 1 + oracle_diffs(e.left()) + oracle_diffs(e.right());
}

// Transitions of the machine, counted per construct: a literal is one
// Eval->Apply step; a Diff adds a descent, a LeftExpr pop and a RightValue
// pop around its operands. Halting adds one more at the top.
inline std::size_t oracle_steps(const Expr& e) {
  if (e.is_lit()) return 1;
  return oracle_steps(e.left()) + oracle_steps(e.right()) + 3;
}

// Largest number of Diff ancestors over all leaves.
inline std::size_t oracle_ancestors(const Expr& e) {
  if (e.is_lit()) return 0;
  return 1 + std::max(oracle_ancestors(e.left()), oracle_ancestors(e.right()));
}

// max over leaves of 1 + (Diff nodes whose right subtree holds that leaf).
inline std::size_t oracle_height(const Expr& e, std::size_t rights = 0) {
  if (e.is_lit()) return 1 + rights;
  return std::max(oracle_height(e.left(), rights),
                  oracle_height(e.right(), rights + 1));
}

inline std::vector<std::int64_t> oracle_flatten(const Tree& t) {
  if (t.is_tip()) return {t.value()};
  std::vector<std::int64_t> xs = oracle_flatten(t.left());
  std::vector<std::int64_t> ys = oracle_flatten(t.right());
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

inline std::vector<std::int64_t> oracle_reverse(
    std::span<const std::int64_t> xs) {
  std::vector<std::int64_t> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[xs.size() - 1 - i];
  return out;
}

// n! with overflow detection; nullopt past 64 bits.
inline std::optional<std::uint64_t> oracle_fact(std::uint64_t n) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (__builtin_mul_overflow(acc, i, &acc)) return std::nullopt;
  }
  return acc;
}

// subt 0 = 1; subt n = n - subt (n - 1), straight from the definition.
inline std::int64_t oracle_subt(std::uint64_t n) {
  if (n == 0) return 1;
  return static_cast<std::int64_t>(n) - oracle_subt(n - 1);
}

// A random stack of height <= max_height with arbitrary 64-bit entries.
inline Stack random_stack(CounterRng& rng, std::size_t max_height) {
  const auto height = static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(max_height)));
  Stack s(height);
  for (auto& x : s) x = static_cast<std::int64_t>(rng.next());
  return s;
}

inline std::vector<std::int64_t> random_args(CounterRng& rng, std::size_t n,
                                             std::int64_t lo = -1000,
                                             std::int64_t hi = 1000) {
  std::vector<std::int64_t> xs(n);
  for (auto& x : xs) x = rng.uniform(lo, hi);
  return xs;
}

// Integer polynomial of `arity` variables with random coefficients:
// c0 + sum ci*xi + d*x1*xr, evaluated with wrapping arithmetic.
struct Poly {
  std::vector<std::int64_t> coeffs;  // c0, c1..cr
  std::int64_t cross = 0;

  std::size_t arity() const { return coeffs.size() - 1; }

  std::int64_t operator()(std::span<const std::int64_t> xs) const {
    std::int64_t acc = coeffs[0];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      acc = wadd(acc, wmul(coeffs[i + 1], xs[i]));
    }
    if (xs.size() >= 2)
      acc = wadd(acc, wmul(cross, wmul(xs.front(), xs.back())));
    return acc;
  }
};

inline Poly random_poly(CounterRng& rng, std::size_t arity) {
  Poly p;
  p.coeffs.resize(arity + 1);
  for (auto& c : p.coeffs) c = rng.uniform(-9, 9);
  p.cross = rng.uniform(-3, 3);
  return p;
}

// Curries an n-ary function over collected arguments.
template <typename F>
Curried curry(std::size_t n, F f, std::vector<std::int64_t> got = {}) {
  if (got.size() == n)
    return Curried::done(f(std::span<const std::int64_t>(got)));
  return Curried::need([n, f, got](std::int64_t x) {
    std::vector<std::int64_t> more = got;
    more.push_back(x);
    return curry(n, f, std::move(more));
  });
}

inline Curried curried_poly(const Poly& p) { return curry(p.arity(), p); }

}  // namespace defunc::testing

#endif  // DEFUNC_TESTS_SUPPORT_H_
