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

#ifndef DEFUNC_ACCUMULATION_H_
#define DEFUNC_ACCUMULATION_H_

// Executable variant chains for factorial, subtractorial, list reversal and
// tree flattening, from direct style through CPS and defunctionalization to
// accumulating loops. The list and tree variants report exact operation
// counts so that quadratic and linear behaviour become integer identities.
//
// Cost model:
//   append_steps     one per element of the LEFT operand of each ++
//   cons_steps       one per element prepended onto a result list,
//                    singletons [x] included
//   loop_iterations  one per invocation of the tail-recursive worker
//                    (flatten'/flatabs or reverse'); zero for the variants
//                    that do not have one
// Pushes onto stacks of postponed trees are bookkeeping and not counted.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "defunc/expr.h"

namespace defunc {

// Persistent singly-linked list of integers.
class IntList {
 public:
  IntList() = default;
  static IntList from_vector(std::span<const std::int64_t> xs);

  bool empty() const { return head_ == nullptr; }
  std::size_t length() const;
  // Require !empty().
  std::int64_t head() const;
  IntList tail() const;

  IntList cons(std::int64_t x) const;
  std::vector<std::int64_t> to_vector() const;

  friend bool operator==(const IntList& a, const IntList& b);

 private:
  struct Cell;
  explicit IntList(std::shared_ptr<Cell> head) : head_(std::move(head)) {}

  std::shared_ptr<Cell> head_;
};

// Binary leaf tree with integer tips.
class Tree {
 public:
  static Tree tip(std::int64_t value);
  static Tree bin(Tree left, Tree right);

  bool is_tip() const;
  // is_tip() only.
  std::int64_t value() const;
  // !is_tip() only.
  const Tree& left() const;
  const Tree& right() const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Tree& t);

std::size_t tip_count(const Tree& t);
// Longest root-to-tip path counted in nodes; a tip has depth 1.
std::size_t tree_depth(const Tree& t);

enum class Side { kLeft, kRight };

// Left spine: Bin(Bin(...Bin(Tip 1, Tip 2)..., Tip n-1), Tip n). The right
// spine is its mirror image. Tips are labelled 1..n in flattening order.
// Requires n >= 1.
Tree make_spine(std::size_t n, Side side);

// Random shape with exactly `tips` tips labelled 1..tips left to right.
// Requires tips >= 1.
Tree gen_tree(std::uint64_t seed, std::size_t tips);

// Frame of a defunctionalized flattening continuation: a tree still to be
// flattened, or the flattening of an already visited sibling.
using FlatFrame = std::variant<Tree, IntList>;

struct CostReport {
  std::vector<std::int64_t> result;
  std::uint64_t append_steps = 0;
  std::uint64_t cons_steps = 0;
  std::uint64_t loop_iterations = 0;
};

// Raised by the recursive variants when nesting exceeds the configured
// bound, before the native call stack runs out.
class DepthLimitExceeded : public std::runtime_error {
 public:
  explicit DepthLimitExceeded(std::size_t limit);
};

struct RecursionLimit {
  std::size_t max_depth = 100000;
};

// Factorial. All variants require n <= 20 and throw std::out_of_range
// otherwise.
std::uint64_t fact_direct(std::uint64_t n);
std::uint64_t fact_cps(std::uint64_t n);
// Continuation as the list of pending factors, product taken at the base.
// If `factors` is non-null it receives that list.
std::uint64_t fact_defunc(std::uint64_t n,
                          std::vector<std::uint64_t>* factors = nullptr);
std::uint64_t fact_acc(std::uint64_t n);

// subt 0 = 1, subt n = n - subt (n - 1). Computed bottom-up.
std::int64_t subt_direct(std::uint64_t n);
// Single top-down pass. Every CPS continuation of subt has the shape
// m |-> c + sign * m, so it is carried as the pair (c, sign).
std::int64_t subt_acc(std::uint64_t n);

// Naive reverse: reverse xs ++ [x]. Recursive.
CostReport reverse_naive(std::span<const std::int64_t> xs,
                         RecursionLimit limit = {});
// CPS with continuations zs |-> k (zs ++ [x]). Recursive.
CostReport reverse_cps(std::span<const std::int64_t> xs,
                       RecursionLimit limit = {});
// Accumulator loop.
CostReport reverse_acc(std::span<const std::int64_t> xs);

// Tree flattening. The recursive ones (direct, both CPS variants and
// nontail) throw DepthLimitExceeded past `limit`; the others are loops with
// no depth restriction.
CostReport flatten_direct(const Tree& t, RecursionLimit limit = {});
// CPS, left child first.
CostReport flatten_cps_left(const Tree& t, RecursionLimit limit = {});
// Defunctionalized left-first CPS over a FlatFrame stack.
CostReport flatten_defunc_left(const Tree& t);
// CPS, right child first.
CostReport flatten_cps_right(const Tree& t, RecursionLimit limit = {});
// Defunctionalized right-first CPS.
CostReport flatten_defunc_right(const Tree& t);

// Called on every worker invocation of flatten_pair with the tree in focus,
// the pending suffix and the postponed trees (top first). At each call
//   concat (map flatten (reverse postponed)) ++ flatten focus ++ pending
// equals the flattening of the whole input.
using PairObserver =
    std::function<void(const Tree& focus, const IntList& pending,
                       const std::vector<Tree>& postponed)>;

// Continuation as (pending suffix, stack of postponed trees).
CostReport flatten_pair(const Tree& t, const PairObserver& observer = {});
// Final loop over a non-empty tree stack with an accumulating result.
CostReport flatten_stack(const Tree& t);
// flatten' (Bin t u) xs = flatten' t (flatten' u xs). Recursive.
CostReport flatten_nontail(const Tree& t, RecursionLimit limit = {});

}  // namespace defunc

#endif  // DEFUNC_ACCUMULATION_H_
