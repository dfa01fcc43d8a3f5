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

#ifndef DEFUNC_DETAIL_BIG_STACK_H_
#define DEFUNC_DETAIL_BIG_STACK_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace defunc::detail {

// Runs `body` to completion on a fresh thread whose stack holds at least
// `stack_bytes`. The memory is reserved, not committed, so generous sizes
// are cheap. Exceptions thrown by `body` are rethrown in the caller.
void run_on_stack(std::size_t stack_bytes, const std::function<void()>& body);

template <typename F>
auto call_on_stack(std::size_t stack_bytes, F&& f) -> std::invoke_result_t<F> {
  using R = std::invoke_result_t<F>;
  if constexpr (std::is_void_v<R>) {
    run_on_stack(stack_bytes, std::forward<F>(f));
  } else {
    std::optional<R> result;
    run_on_stack(stack_bytes, [&] { result.emplace(f()); });
    return std::move(*result);
  }
}

}  // namespace defunc::detail

#endif  // DEFUNC_DETAIL_BIG_STACK_H_
