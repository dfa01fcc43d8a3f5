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

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "cost.h"
#include "defunc/accumulation.h"

namespace defunc {

using internal::counted_append;
using internal::counted_cons;
using internal::counted_singleton;
using internal::DepthGuard;
using internal::finish;

namespace {

using ListCont = std::function<IntList(const IntList&)>;

// Shared state of the recursive variants. Continuations are only invoked
// within the dynamic extent of the call that built them, so they capture by
// reference.
struct Recursion {
  CostReport cost;
  std::size_t limit;
  std::size_t depth = 0;

  // flatten (Bin t u) = flatten t ++ flatten u
  IntList direct(const Tree& t) {
    DepthGuard guard(depth, limit);
    if (t.is_tip()) return counted_singleton(t.value(), cost);
    IntList xs = direct(t.left());
    IntList ys = direct(t.right());
    return counted_append(xs, ys, cost);
  }

  // flatten' (Bin t u) k = flatten' t (xs |-> flatten' u (ys |-> k (xs ++ ys)))
  IntList cps_left(const Tree& t, const ListCont& k) {
    DepthGuard guard(depth, limit);
    ++cost.loop_iterations;
    if (t.is_tip()) return k(counted_singleton(t.value(), cost));
    const Tree& u = t.right();
    return cps_left(t.left(), [this, &u, &k](const IntList& xs) {
      DepthGuard outer(depth, limit);
      return cps_left(u, [this, &xs, &k](const IntList& ys) {
        DepthGuard inner(depth, limit);
        return k(counted_append(xs, ys, cost));
      });
    });
  }

  // flatten' (Bin t u) k = flatten' u (ys |-> flatten' t (xs |-> k (xs ++ ys)))
  IntList cps_right(const Tree& t, const ListCont& k) {
    DepthGuard guard(depth, limit);
    ++cost.loop_iterations;
    if (t.is_tip()) return k(counted_singleton(t.value(), cost));
    const Tree& left = t.left();
    return cps_right(t.right(), [this, &left, &k](const IntList& ys) {
      DepthGuard outer(depth, limit);
      return cps_right(left, [this, &ys, &k](const IntList& xs) {
        DepthGuard inner(depth, limit);
        return k(counted_append(xs, ys, cost));
      });
    });
  }

  // flatten' (Bin t u) xs = flatten' t (flatten' u xs)
  IntList nontail(const Tree& t, const IntList& xs) {
    DepthGuard guard(depth, limit);
    if (t.is_tip()) return counted_cons(t.value(), xs, cost);
    return nontail(t.left(), nontail(t.right(), xs));
  }
};

IntList identity(const IntList& xs) { return xs; }

}  // namespace

CostReport flatten_direct(const Tree& t, RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    Recursion r{{}, limit.max_depth};
    IntList result = r.direct(t);
    return finish(r.cost, result);
  });
}

CostReport flatten_cps_left(const Tree& t, RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    Recursion r{{}, limit.max_depth};
    IntList result = r.cps_left(t, identity);
    return finish(r.cost, result);
  });
}

CostReport flatten_cps_right(const Tree& t, RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    Recursion r{{}, limit.max_depth};
    IntList result = r.cps_right(t, identity);
    return finish(r.cost, result);
  });
}

CostReport flatten_nontail(const Tree& t, RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    Recursion r{{}, limit.max_depth};
    IntList result = r.nontail(t, IntList());
    return finish(r.cost, result);
  });
}

// The mutually tail-recursive flatten'/flatabs pair becomes one loop over
// an explicit (mode, focus, value, frame stack) state.
CostReport flatten_defunc_left(const Tree& t) {
  CostReport cost;
  std::vector<FlatFrame> frames;  // top at the back
  Tree focus = t;
  IntList value;
  bool evaluating = true;
  for (;;) {
    ++cost.loop_iterations;
    if (evaluating) {
      if (focus.is_tip()) {
        value = counted_singleton(focus.value(), cost);
        evaluating = false;
      } else {
        frames.emplace_back(focus.right());  // Left u :: k
        focus = Tree(focus.left());
      }
      continue;
    }
    if (frames.empty()) break;  // flatabs [] = id
    FlatFrame top = std::move(frames.back());
    frames.pop_back();
    if (Tree* u = std::get_if<Tree>(&top)) {
      frames.emplace_back(std::move(value));  // Right xs :: k
      focus = std::move(*u);
      evaluating = true;
    } else {
      value = counted_append(std::get<IntList>(top), value, cost);
    }
  }
  return finish(cost, value);
}

CostReport flatten_defunc_right(const Tree& t) {
  CostReport cost;
  std::vector<FlatFrame> frames;  // top at the back
  Tree focus = t;
  IntList value;
  bool evaluating = true;
  for (;;) {
    ++cost.loop_iterations;
    if (evaluating) {
      if (focus.is_tip()) {
        value = counted_singleton(focus.value(), cost);
        evaluating = false;
      } else {
        frames.emplace_back(focus.left());  // Right t :: k
        focus = Tree(focus.right());
      }
      continue;
    }
    if (frames.empty()) break;
    FlatFrame top = std::move(frames.back());
    frames.pop_back();
    if (Tree* left = std::get_if<Tree>(&top)) {
      frames.emplace_back(std::move(value));  // Left ys :: k
      focus = std::move(*left);
      evaluating = true;
    } else {
      // xs ++ ys, with xs the flattening just produced.
      value = counted_append(value, std::get<IntList>(top), cost);
    }
  }
  return finish(cost, value);
}

CostReport flatten_pair(const Tree& t, const PairObserver& observer) {
  CostReport cost;
  IntList pending;              // ys
  std::vector<Tree> postponed;  // ts, top at the back
  Tree focus = t;
  for (;;) {
    // flatten' focus (ys, ts)
    ++cost.loop_iterations;
    if (observer) {
      observer(focus, pending,
               std::vector<Tree>(postponed.rbegin(), postponed.rend()));
    }
    if (!focus.is_tip()) {
      postponed.push_back(focus.left());
      focus = Tree(focus.right());
      continue;
    }
    // flatabs (ys, ts) [x]
    ++cost.loop_iterations;
    IntList xs = counted_singleton(focus.value(), cost);
    pending = counted_append(xs, pending, cost);
    if (postponed.empty()) break;
    focus = std::move(postponed.back());
    postponed.pop_back();
  }
  return finish(cost, pending);
}

CostReport flatten_stack(const Tree& t) {
  CostReport cost;
  std::vector<Tree> stack{t};  // non-empty; top at the back
  IntList ys;
  for (;;) {
    ++cost.loop_iterations;
    Tree top = std::move(stack.back());
    stack.pop_back();
    if (top.is_tip()) {
      ys = counted_cons(top.value(), ys, cost);
      if (stack.empty()) break;
      continue;
    }
    // Bin t u :: ts  ->  u :: t :: ts
    stack.push_back(top.left());
    stack.push_back(top.right());
  }
  return finish(cost, ys);
}

}  // namespace defunc
