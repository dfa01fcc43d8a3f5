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

#ifndef DEFUNC_MACHINE_H_
#define DEFUNC_MACHINE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "defunc/expr.h"

namespace defunc {

// CPS evaluator: every Diff builds real continuation closures, starting from
// the identity. Recursion depth grows with the size of `e`.
std::int64_t eval_cps(const Expr& e);

// Defunctionalized continuation frames.
//
// LeftExpr: the left operand is being evaluated; its right sibling waits.
struct LeftExprFrame {
  Expr right_sibling;
  friend bool operator==(const LeftExprFrame&, const LeftExprFrame&) = default;
};
// RightValue: the right operand is being evaluated; the left value waits.
struct RightValueFrame {
  std::int64_t left_value;
  friend bool operator==(const RightValueFrame&,
                         const RightValueFrame&) = default;
};
using Frame = std::variant<LeftExprFrame, RightValueFrame>;

// Persistent frame stack. Pushing and popping are O(1) and never disturb
// other values sharing the same tail.
class Cont {
 public:
  Cont() = default;
  // Frames listed top first.
  static Cont from_frames(const std::vector<Frame>& top_first);

  bool empty() const { return head_ == nullptr; }
  std::size_t size() const;
  // Require !empty().
  const Frame& top() const;
  Cont pop() const;

  Cont push(Frame frame) const;
  std::vector<Frame> frames() const;

  friend bool operator==(const Cont& a, const Cont& b);

 private:
  struct Cell;
  explicit Cont(std::shared_ptr<Cell> head) : head_(std::move(head)) {}

  std::shared_ptr<Cell> head_;
};

struct EvalState {
  Expr focus;
  Cont cont;
  friend bool operator==(const EvalState&, const EvalState&) = default;
};
struct ApplyState {
  Cont cont;
  std::int64_t value;
  friend bool operator==(const ApplyState&, const ApplyState&) = default;
};
struct HaltedState {
  std::int64_t value;
  friend bool operator==(const HaltedState&, const HaltedState&) = default;
};
using MachineState = std::variant<EvalState, ApplyState, HaltedState>;

// Raised when a Halted state is stepped.
class MachineContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One transition:
//   Eval(Lit n, k)                    -> Apply(k, n)
//   Eval(Diff e e', k)                -> Eval(e, LeftExpr e' :: k)
//   Apply(LeftExpr e' :: k, m)        -> Eval(e', RightValue m :: k)
//   Apply(RightValue m :: k, n)       -> Apply(k, m - n)
//   Apply([], n)                      -> Halted(n)
MachineState machine_step(const MachineState& state);

struct MachineRun {
  std::int64_t value;
  // Every visited state, from Eval(e, []) to the final Halted.
  std::vector<MachineState> trace;

  std::size_t transitions() const { return trace.size() - 1; }
  // Largest frame stack seen along the trace.
  std::size_t max_stack_depth() const;
};

// Steps iteratively from Eval(e, []) to Halted; takes exactly
// 4 * diff_count(e) + 2 transitions.
MachineRun machine_run(const Expr& e);

// Same machine without recording the trace.
std::int64_t machine_eval(const Expr& e);

// `EVAL <expr> | [<frames>]`, `APPLY <n> | [<frames>]` or `HALT <n>`.
// Frames are printed top first, separated by ", ", as `L <expr>` or `R <n>`.
std::string format_state(const MachineState& state);

// One format_state line per state, joined with '\n' (no trailing newline).
std::string format_trace(std::span<const MachineState> trace);

}  // namespace defunc

#endif  // DEFUNC_MACHINE_H_
