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

#ifndef DEFUNC_GENCOMP_H_
#define DEFUNC_GENCOMP_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "defunc/expr.h"
#include "defunc/stack_machine.h"

namespace defunc {

// A curried function over integers: either a finished value (arity 0) or a
// step awaiting one more argument. All argument types are integers, so the
// type-level list of argument types collapses to a count.
class Curried {
 public:
  using Step = std::function<Curried(std::int64_t)>;

  static Curried done(std::int64_t value);
  static Curried need(Step step);

  bool is_done() const { return std::holds_alternative<std::int64_t>(rep_); }
  // Requires is_done().
  std::int64_t value() const { return std::get<std::int64_t>(rep_); }
  // Supplies one argument. Throws ArityError if is_done().
  Curried feed(std::int64_t arg) const;

 private:
  explicit Curried(std::int64_t value) : rep_(value) {}
  explicit Curried(std::shared_ptr<const Step> step) : rep_(std::move(step)) {}

  std::variant<std::int64_t, std::shared_ptr<const Step>> rep_;
};

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arity of `c`, found by feeding zeros. Only meaningful for functions of
// uniform arity; throws ArityError past `limit` arguments.
std::size_t arity(const Curried& c, std::size_t limit = 1 << 16);

// Feeds `args` in order; their count must equal the arity of `c`.
std::int64_t apply_all(const Curried& c, std::span<const std::int64_t> args);

// Generalized composition b^r g f: feeds the r arguments to `f`, then f's
// result to the first argument of `g`. Arity r + arity(g) - 1. b^0 is
// application and b^1 ordinary composition.
Curried gcompose(std::size_t r, Curried g, Curried f);

using UnaryFn = std::function<std::int64_t(std::int64_t)>;

// Tree-shaped code. Arity is the number of extra integers needed to finish.
//   Ret n              arity 0
//   SubOp              arity 2
//   B1(x: 0, y: 1)     arity 0
//   B2(x: 0, y: 2)     arity 1
// The constructors reject children of the wrong arity with ArityError.
class TreeCode {
 public:
  enum class Kind : std::uint8_t { kRet, kSubOp, kB1, kB2 };

  static TreeCode ret(std::int64_t n);
  static TreeCode sub_op();
  static TreeCode b1(TreeCode x, TreeCode y);
  static TreeCode b2(TreeCode x, TreeCode y);

  Kind kind() const;
  std::size_t arity() const;
  // kRet only.
  std::int64_t value() const;
  // kB1 / kB2 only.
  const TreeCode& x() const;
  const TreeCode& y() const;

  friend bool operator==(const TreeCode& a, const TreeCode& b);

 private:
  struct Node;
  explicit TreeCode(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

// Linear code: each non-Halt node has exactly one successor.
//   Halt                 arity 1
//   PushRet(n, rest)     arity(rest) - 1, requires arity(rest) >= 1
//   SubCont(rest)        arity(rest) + 1, requires arity(rest) >= 1
class LinearCode {
 public:
  enum class Kind : std::uint8_t { kHalt, kPushRet, kSubCont };

  static LinearCode halt();
  static LinearCode push_ret(std::int64_t n, LinearCode rest);
  static LinearCode sub_cont(LinearCode rest);

  Kind kind() const;
  std::size_t arity() const;
  // kPushRet only.
  std::int64_t value() const;
  // Not kHalt.
  const LinearCode& rest() const;
  // Number of nodes, Halt included.
  std::size_t length() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  struct Node;
  explicit LinearCode(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

// Validator walks: recompute every node's arity from its children and
// compare with the stored value. For LinearCode also checks that the chain
// ends in a single Halt.
bool arity_consistent(const TreeCode& c);
bool arity_consistent(const LinearCode& c);

// Ret n      -> Done(k n)
// SubOp      -> m, n |-> Done(k (m - n))
// B1(x, y)   -> denote_tree(x, m |-> [[y]]_k m)
// B2(x, y)   -> m |-> denote_tree(x, n |-> [[y]]_k m n)
// The result has arity c.arity().
Curried denote_tree(const TreeCode& c, UnaryFn k);

// Lit n -> Ret n; Diff e e' -> B1(rep_tree e, B2(rep_tree e', SubOp)).
TreeCode rep_tree(const Expr& e);

// Evaluates via denote_tree(rep_tree(e), id). This is also the fused
// b^1/b^2 evaluator; the two are the same computation.
std::int64_t eval_gencomp_tree(const Expr& e);

// Replaces the Halt at the end of `x` by `y`. Arity
// arity(x) + arity(y) - 1. Throws ArityError if arity(y) == 0.
LinearCode append_linear(const LinearCode& x, const LinearCode& y);

// Ret n -> PushRet(n, Halt); SubOp -> SubCont(Halt);
// B1/B2(x, y) -> append_linear(rotate x, rotate y). Preserves arity.
LinearCode rotate(const TreeCode& c);

// Lit n -> PushRet(n, Halt);
// Diff e e' -> rep e ++ (rep e' ++ SubCont(Halt)).
LinearCode rep_linear(const Expr& e);

// Runs linear code on `args` (first argument = top of stack):
//   Halt [n]                 -> n
//   PushRet(n, k) args       -> denote_linear(k, n :: args)
//   SubCont(k) (n :: m :: r) -> denote_linear(k, (m - n) :: r)
// Throws ArityError unless args.size() == c.arity().
std::int64_t denote_linear(const LinearCode& c,
                           std::span<const std::int64_t> args);

// Same denotation as a curried value, built compositionally:
// Halt is the identity, PushRet(n, k) applies [[k]] to n, and SubCont(k) is
// n, m |-> [[k]] (m - n).
Curried abstract_linear(const LinearCode& c);

std::int64_t eval_linear(const Expr& e);

// Halt -> []; PushRet(n, k) -> Push n :: ...; SubCont(k) -> Sub :: ...
Prog compile_linear(const LinearCode& c);

// Debug renderings, one constructor per line with its arity, e.g.
// `PUSHRET 3 (arity 0)`. Tree children are indented by two spaces.
std::string render_tree(const TreeCode& c);
std::string render_linear(const LinearCode& c);

std::ostream& operator<<(std::ostream& os, const TreeCode& c);
std::ostream& operator<<(std::ostream& os, const LinearCode& c);

// Random arity-correct codes, built bottom-up.
//
// gen_tree_code: `arity` must be 0, 1 or 2; `max_depth` bounds nesting.
TreeCode gen_tree_code(std::uint64_t seed, std::size_t arity,
                       std::size_t max_depth, LiteralRange literals);
// gen_linear_code: `length` non-Halt nodes are drawn first (arity kept at or
// below `max_arity`), then PushRet/SubCont nodes are added until the arity
// equals `arity`.
LinearCode gen_linear_code(std::uint64_t seed, std::size_t arity,
                           std::size_t length, std::size_t max_arity,
                           LiteralRange literals);

}  // namespace defunc

#endif  // DEFUNC_GENCOMP_H_
