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

#include "defunc/machine.h"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "defunc/detail/release.h"

namespace defunc {

namespace {

using IntCont = std::function<std::int64_t(std::int64_t)>;

// Each continuation is only invoked inside the dynamic extent of the call
// that created it, so capturing by reference is safe.
std::int64_t eval_cps_with(const Expr& e, const IntCont& k) {
  if (e.is_lit()) return k(e.value());
  const Expr& right = e.right();
  return eval_cps_with(e.left(), [&right, &k](std::int64_t m) {
    return eval_cps_with(
        right, [m, &k](std::int64_t n) { return k(wrapping_sub(m, n)); });
  });
}

}  // namespace

std::int64_t eval_cps(const Expr& e) {
  return eval_cps_with(e, [](std::int64_t n) { return n; });
}

struct Cont::Cell {
  Cell(Frame f, std::shared_ptr<Cell> n)
      : frame(std::move(f)),
        next(std::move(n)),
        size(next == nullptr ? 1 : next->size + 1) {}
  ~Cell() { detail::release_children(*this); }

  std::array<std::shared_ptr<Cell>*, 1> children() { return {&next}; }

  Frame frame;
  std::shared_ptr<Cell> next;
  std::size_t size;
};

Cont Cont::from_frames(const std::vector<Frame>& top_first) {
  Cont cont;
  for (auto it = top_first.rbegin(); it != top_first.rend(); ++it) {
    cont = cont.push(*it);
  }
  return cont;
}

std::size_t Cont::size() const { return head_ == nullptr ? 0 : head_->size; }
const Frame& Cont::top() const { return head_->frame; }
Cont Cont::pop() const { return Cont(head_->next); }

Cont Cont::push(Frame frame) const {
  return Cont(std::make_shared<Cell>(std::move(frame), head_));
}

std::vector<Frame> Cont::frames() const {
  std::vector<Frame> out;
  out.reserve(size());
  for (const Cell* c = head_.get(); c != nullptr; c = c->next.get()) {
    out.push_back(c->frame);
  }
  return out;
}

bool operator==(const Cont& a, const Cont& b) {
  if (a.size() != b.size()) return false;
  const Cont::Cell* x = a.head_.get();
  const Cont::Cell* y = b.head_.get();
  for (; x != y; x = x->next.get(), y = y->next.get()) {
    if (!(x->frame == y->frame)) return false;
  }
  return true;
}

namespace {

struct Stepper {
  MachineState operator()(const EvalState& s) const {
    if (s.focus.is_lit()) return ApplyState{s.cont, s.focus.value()};
    return EvalState{s.focus.left(),
                     s.cont.push(LeftExprFrame{s.focus.right()})};
  }

  MachineState operator()(const ApplyState& s) const {
    if (s.cont.empty()) return HaltedState{s.value};
    const Frame& top = s.cont.top();
    if (const auto* left = std::get_if<LeftExprFrame>(&top)) {
      return EvalState{left->right_sibling,
                       s.cont.pop().push(RightValueFrame{s.value})};
    }
    const auto& right = std::get<RightValueFrame>(top);
    return ApplyState{s.cont.pop(), wrapping_sub(right.left_value, s.value)};
  }

  MachineState operator()(const HaltedState&) const {
    throw MachineContractError("machine_step: state is already halted");
  }
};

std::size_t stack_depth(const MachineState& s) {
  if (const auto* e = std::get_if<EvalState>(&s)) return e->cont.size();
  if (const auto* a = std::get_if<ApplyState>(&s)) return a->cont.size();
  return 0;
}

}  // namespace

MachineState machine_step(const MachineState& state) {
  return std::visit(Stepper{}, state);
}

std::size_t MachineRun::max_stack_depth() const {
  std::size_t deepest = 0;
  for (const MachineState& s : trace)
    deepest = std::max(deepest, stack_depth(s));
  return deepest;
}

MachineRun machine_run(const Expr& e) {
  MachineRun run{0, {}};
  run.trace.emplace_back(EvalState{e, Cont()});
  while (!std::holds_alternative<HaltedState>(run.trace.back())) {
    MachineState next = machine_step(run.trace.back());
    run.trace.push_back(std::move(next));
  }
  run.value = std::get<HaltedState>(run.trace.back()).value;
  return run;
}

std::int64_t machine_eval(const Expr& e) {
  MachineState state = EvalState{e, Cont()};
  while (!std::holds_alternative<HaltedState>(state)) {
    state = machine_step(state);
  }
  return std::get<HaltedState>(state).value;
}

namespace {

std::string format_cont(const Cont& cont) {
  std::string out = "[";
  bool first = true;
  for (const Frame& f : cont.frames()) {
    if (!first) out += ", ";
    first = false;
    if (const auto* left = std::get_if<LeftExprFrame>(&f)) {
      out += "L " + print_expr(left->right_sibling);
    } else {
      out += "R " + std::to_string(std::get<RightValueFrame>(f).left_value);
    }
  }
  out += ']';
  return out;
}

}  // namespace

std::string format_state(const MachineState& state) {
  if (const auto* e = std::get_if<EvalState>(&state)) {
    return "EVAL " + print_expr(e->focus) + " | " + format_cont(e->cont);
  }
  if (const auto* a = std::get_if<ApplyState>(&state)) {
    return "APPLY " + std::to_string(a->value) + " | " + format_cont(a->cont);
  }
  return "HALT " + std::to_string(std::get<HaltedState>(state).value);
}

std::string format_trace(std::span<const MachineState> trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i != 0) out += '\n';
    out += format_state(trace[i]);
  }
  return out;
}

}  // namespace defunc
