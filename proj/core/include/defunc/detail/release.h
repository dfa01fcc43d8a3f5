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

#ifndef DEFUNC_DETAIL_RELEASE_H_
#define DEFUNC_DETAIL_RELEASE_H_

#include <memory>
#include <utility>
#include <vector>

namespace defunc::detail {

// Tears down the uniquely-owned descendants of `node` with an explicit
// worklist instead of recursive destructor calls, so that long chains
// (spines, continuations, linear code) can be destroyed without
// exhausting the call stack.
//
// `Node` must provide `children()` returning a range of
// `std::shared_ptr<Node>*`. Children still shared with other owners are left
// alone; their last owner releases them.
template <typename Node>
void release_children(Node& node) {
  std::vector<std::shared_ptr<Node>> pending;
  auto harvest = [&pending](Node& n) {
    for (std::shared_ptr<Node>* child : n.children()) {
      if (*child != nullptr && child->use_count() == 1) {
        pending.push_back(std::move(*child));
      }
    }
  };
  harvest(node);
  while (!pending.empty()) {
    std::shared_ptr<Node> next = std::move(pending.back());
    pending.pop_back();
    harvest(*next);
  }
}

}  // namespace defunc::detail

#endif  // DEFUNC_DETAIL_RELEASE_H_
