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
#include <string>

#include "defunc/accumulation.h"

namespace defunc {

namespace {

constexpr std::uint64_t kMaxFactorialArg = 20;

void check_fact_arg(std::uint64_t n) {
  if (n > kMaxFactorialArg) {
    throw std::out_of_range("factorial of " + std::to_string(n) +
                            " does not fit in 64 bits (n must be <= 20)");
  }
}

std::int64_t wrapping_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                   static_cast<std::uint64_t>(b));
}

using NatCont = std::function<std::uint64_t(std::uint64_t)>;

std::uint64_t fact_cps_with(std::uint64_t n, const NatCont& k) {
  if (n == 0) return k(1);
  return fact_cps_with(n - 1, [n, &k](std::uint64_t m) { return k(n * m); });
}

}  // namespace

std::uint64_t fact_direct(std::uint64_t n) {
  check_fact_arg(n);
  return n == 0 ? 1 : n * fact_direct(n - 1);
}

std::uint64_t fact_cps(std::uint64_t n) {
  check_fact_arg(n);
  return fact_cps_with(n, [](std::uint64_t m) { return m; });
}

std::uint64_t fact_defunc(std::uint64_t n,
                          std::vector<std::uint64_t>* factors) {
  check_fact_arg(n);
  std::vector<std::uint64_t> k;
  for (; n > 0; --n) k.push_back(n);  // k ++ [S n]
  if (factors != nullptr) *factors = k;
  // foldr (*) 1 k
  std::uint64_t product = 1;
  for (auto it = k.rbegin(); it != k.rend(); ++it) product = *it * product;
  return product;
}

std::uint64_t fact_acc(std::uint64_t n) {
  check_fact_arg(n);
  std::uint64_t k = 1;
  for (; n > 0; --n) k *= n;
  return k;
}

std::int64_t subt_direct(std::uint64_t n) {
  std::int64_t value = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    value = wrapping_sub(static_cast<std::int64_t>(i), value);
  }
  return value;
}

std::int64_t subt_acc(std::uint64_t n) {
  // The continuation m |-> acc + sign * m, starting from the identity.
  std::int64_t acc = 0;
  std::int64_t sign = 1;
  for (std::uint64_t i = n; i >= 1; --i) {
    const auto term = static_cast<std::int64_t>(i);
    acc = sign > 0 ? wrapping_add(acc, term) : wrapping_sub(acc, term);
    sign = -sign;
  }
  // Apply the final continuation to subt 0 = 1.
  return wrapping_add(acc, sign);
}

}  // namespace defunc
