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

#include "cost.h"
#include "defunc/accumulation.h"

namespace defunc {

using internal::counted_append;
using internal::counted_cons;
using internal::counted_singleton;
using internal::DepthGuard;
using internal::finish;

namespace {

struct NaiveReverser {
  CostReport& cost;
  std::size_t limit;
  std::size_t depth = 0;

  IntList operator()(const IntList& xs) {
    DepthGuard guard(depth, limit);
    if (xs.empty()) return {};
    return counted_append((*this)(xs.tail()),
                          counted_singleton(xs.head(), cost), cost);
  }
};

using ListCont = std::function<IntList(const IntList&)>;

struct CpsReverser {
  CostReport& cost;
  std::size_t limit;
  std::size_t depth = 0;

  IntList operator()(const IntList& xs, const ListCont& k) {
    DepthGuard guard(depth, limit);
    ++cost.loop_iterations;
    if (xs.empty()) return k(IntList());
    const std::int64_t x = xs.head();
    return (*this)(xs.tail(), [this, x, &k](const IntList& zs) {
      DepthGuard inner(depth, limit);
      return k(counted_append(zs, counted_singleton(x, cost), cost));
    });
  }
};

}  // namespace

CostReport reverse_naive(std::span<const std::int64_t> xs,
                         RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    CostReport cost;
    const IntList result =
        NaiveReverser{cost, limit.max_depth}(IntList::from_vector(xs));
    return finish(cost, result);
  });
}

CostReport reverse_cps(std::span<const std::int64_t> xs, RecursionLimit limit) {
  return detail::call_on_stack(internal::stack_bytes_for(limit), [&] {
    CostReport cost;
    CpsReverser reverser{cost, limit.max_depth};
    const IntList result = reverser(IntList::from_vector(xs),
                                    [](const IntList& zs) { return zs; });
    return finish(cost, result);
  });
}

CostReport reverse_acc(std::span<const std::int64_t> xs) {
  CostReport cost;
  IntList k;
  for (IntList rest = IntList::from_vector(xs);; rest = rest.tail()) {
    ++cost.loop_iterations;
    if (rest.empty()) break;
    k = counted_cons(rest.head(), k, cost);
  }
  return finish(cost, k);
}

}  // namespace defunc
