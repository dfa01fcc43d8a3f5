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

#ifndef DEFUNC_SRC_COST_H_
#define DEFUNC_SRC_COST_H_

// Counted list primitives shared by the reverse and flatten variants.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "defunc/accumulation.h"
#include "defunc/detail/big_stack.h"

namespace defunc::internal {

inline IntList counted_cons(std::int64_t x, const IntList& xs,
                            CostReport& cost) {
  ++cost.cons_steps;
  return xs.cons(x);
}

inline IntList counted_singleton(std::int64_t x, CostReport& cost) {
  return counted_cons(x, IntList(), cost);
}

// xs ++ ys: copies the cells of xs, shares ys.
inline IntList counted_append(const IntList& xs, const IntList& ys,
                              CostReport& cost) {
  std::vector<std::int64_t> front;
  for (IntList p = xs; !p.empty(); p = p.tail()) {
    ++cost.append_steps;
    front.push_back(p.head());
  }
  IntList out = ys;
  for (auto it = front.rbegin(); it != front.rend(); ++it) out = out.cons(*it);
  return out;
}

// Counts live nested calls of a recursive variant.
class DepthGuard {
 public:
  DepthGuard(std::size_t& depth, std::size_t limit) : depth_(depth) {
    if (++depth_ > limit) {
      --depth_;
      throw DepthLimitExceeded(limit);
    }
  }
  ~DepthGuard() { --depth_; }

  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  std::size_t& depth_;
};

// Native stack reserved for a recursive variant: generous per guarded
// frame, so that DepthLimitExceeded fires long before the stack runs out.
inline std::size_t stack_bytes_for(RecursionLimit limit) {
  constexpr std::size_t kBytesPerLevel = 1024;
  constexpr std::size_t kBase = std::size_t{8} << 20;
  return kBase + limit.max_depth * kBytesPerLevel;
}

inline CostReport finish(CostReport cost, const IntList& result) {
  cost.result = result.to_vector();
  return cost;
}

}  // namespace defunc::internal

#endif  // DEFUNC_SRC_COST_H_
