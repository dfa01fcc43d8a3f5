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

#include "harness.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "defunc/gencomp.h"
#include "defunc/machine.h"
#include "defunc/rng.h"
#include "defunc/stack_machine.h"

namespace defunc::cli {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kDirect:
      return "direct";
    case Variant::kCps:
      return "cps";
    case Variant::kMachine:
      return "machine";
    case Variant::kTree:
      return "tree";
    case Variant::kLinear:
      return "linear";
    case Variant::kCompiled:
      return "compiled";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::int64_t evaluate(Variant v, const Expr& e) {
  switch (v) {
    case Variant::kDirect:
      return eval_direct(e);
    case Variant::kCps:
      return eval_cps(e);
    case Variant::kMachine:
      return machine_run(e).value;
    case Variant::kTree:
      return eval_gencomp_tree(e);
    case Variant::kLinear:
      return eval_linear(e);
    case Variant::kCompiled:
      return run_expr(e);
  }
  throw std::invalid_argument("unknown variant");
}

namespace {

constexpr LiteralRange kFuzzLiterals = {
    std::numeric_limits<std::int64_t>::min(),
    std::numeric_limits<std::int64_t>::max()};

constexpr std::size_t kMaxFuzzStack = 8;

std::uint64_t hash_step(std::uint64_t h, std::uint64_t x) {
  return mix64(h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

struct CaseResult {
  std::uint64_t hash = 0;
  std::optional<Mismatch> mismatch;
};

CaseResult run_case(const FuzzOptions& options, std::uint64_t index) {
  const std::uint64_t case_seed = derive_seed(options.seed, index);
  CounterRng rng(case_seed);
  const Expr e = gen_expr(rng.next(), options.max_depth, kFuzzLiterals);

  CaseResult result;
  result.hash = hash_step(0, index);

  std::vector<std::string> values;
  std::optional<std::int64_t> first;
  bool agree = true;
  bool any_error = false;
  for (Variant v : kAllVariants) {
    try {
      const std::int64_t value = evaluate(v, e);
      values.push_back(std::to_string(value));
      result.hash = hash_step(result.hash, static_cast<std::uint64_t>(value));
      if (!first) {
        first = value;
      } else if (*first != value) {
        agree = false;
      }
    } catch (const std::exception& ex) {
      values.push_back(std::string("error: ") + ex.what());
      result.hash = hash_step(result.hash, 0xe44);
      any_error = true;
    }
  }

  std::vector<std::string> failed;
  try {
    const std::int64_t expected = eval_direct(e);
    const std::size_t height = static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(kMaxFuzzStack)));
    Stack s;
    for (std::size_t i = 0; i < height; ++i)
      s.push_back(static_cast<std::int64_t>(rng.next()));
    Stack want = s;
    want.insert(want.begin(), expected);
    if (exec(compile(e), s) != want) failed.emplace_back(kFuzzChecks[0]);
  } catch (const std::exception&) {
    failed.emplace_back(kFuzzChecks[0]);
  }
  try {
    if (!(rotate(rep_tree(e)) == rep_linear(e))) {
      failed.emplace_back(kFuzzChecks[1]);
    }
  } catch (const std::exception&) {
    failed.emplace_back(kFuzzChecks[1]);
  }
  try {
    if (disassemble(compile_linear(rep_linear(e))) != disassemble(compile(e))) {
      failed.emplace_back(kFuzzChecks[2]);
    }
  } catch (const std::exception&) {
    failed.emplace_back(kFuzzChecks[2]);
  }
  result.hash = hash_step(result.hash, failed.size());

  if (!agree || any_error || !failed.empty()) {
    result.mismatch = Mismatch{index, case_seed, print_expr(e),
                               std::move(values), std::move(failed)};
  }
  return result;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseResult> results(options.cases);

  const std::size_t jobs = std::max<std::size_t>(
      1, std::min<std::uint64_t>(options.jobs,
                                 std::max<std::uint64_t>(options.cases, 1)));
  auto work = [&](std::size_t worker) {
    for (std::uint64_t i = worker; i < options.cases; i += jobs) {
      results[i] = run_case(options, i);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  FuzzReport report;
  report.cases_run = options.cases;
  report.digest = hash_step(options.seed, options.max_depth);
  for (auto& r : results) {
    report.digest = hash_step(report.digest, r.hash);
    if (r.mismatch) report.mismatches.push_back(std::move(*r.mismatch));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string format_fuzz_report(const FuzzOptions& options,
                               const FuzzReport& report) {
  std::ostringstream os;
  os << "cases_run: " << report.cases_run << "\n";
  os << "seed: " << options.seed << "\n";
  os << "max_depth: " << options.max_depth << "\n";
  os << "mismatches: " << report.mismatches.size() << "\n";
  for (const Mismatch& m : report.mismatches) {
    os << "mismatch case " << m.index << " (case seed " << m.case_seed
       << "): " << m.expr_text << "\n";
    for (std::size_t i = 0; i < m.values.size() && i < kAllVariants.size();
         ++i) {
      os << "  " << variant_name(kAllVariants[i]) << " = " << m.values[i]
         << "\n";
    }
    for (const std::string& check : m.failed_checks) {
      os << "  failed " << check << "\n";
    }
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(report.digest));
  os << "digest: " << digest << "\n";
  return os.str();
}

std::optional<Shape> parse_shape(std::string_view name) {
  if (name == "left") return Shape::kLeft;
  if (name == "right") return Shape::kRight;
  if (name == "random") return Shape::kRandom;
  return std::nullopt;
}

Tree bench_tree(Shape shape, std::size_t size) {
  switch (shape) {
    case Shape::kLeft:
      return make_spine(size, Side::kLeft);
    case Shape::kRight:
      return make_spine(size, Side::kRight);
    case Shape::kRandom:
      return gen_tree(derive_seed(0xbe4c4, size), size);
  }
  throw std::invalid_argument("unknown shape");
}

namespace {

CostReport run_bench_variant(std::string_view name, const Tree& t,
                             std::span<const std::int64_t> xs) {
  if (name == "flatten_direct") return flatten_direct(t);
  if (name == "flatten_cps_left") return flatten_cps_left(t);
  if (name == "flatten_defunc_left") return flatten_defunc_left(t);
  if (name == "flatten_cps_right") return flatten_cps_right(t);
  if (name == "flatten_defunc_right") return flatten_defunc_right(t);
  if (name == "flatten_pair") return flatten_pair(t);
  if (name == "flatten_stack") return flatten_stack(t);
  if (name == "flatten_nontail") return flatten_nontail(t);
  if (name == "reverse_naive") return reverse_naive(xs);
  if (name == "reverse_cps") return reverse_cps(xs);
  if (name == "reverse_acc") return reverse_acc(xs);
  throw std::invalid_argument("unknown bench variant");
}

}  // namespace

std::vector<BenchRow> run_bench(Shape shape, std::span<const std::size_t> sizes,
                                std::vector<std::string>* skipped) {
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    if (size == 0) throw std::invalid_argument("sizes must be positive");
    const Tree t = bench_tree(shape, size);
    // Reversal runs on the tips in order, i.e. 1..size.
    std::vector<std::int64_t> xs(size);
    std::iota(xs.begin(), xs.end(), std::int64_t{1});
    for (std::string_view name : kBenchVariants) {
      try {
        const CostReport cost = run_bench_variant(name, t, xs);
        rows.push_back({std::string(name), size, cost.append_steps,
                        cost.cons_steps, cost.loop_iterations});
      } catch (const DepthLimitExceeded&) {
        if (skipped) {
          skipped->push_back(std::string(name) + " at size " +
                             std::to_string(size));
        }
      }
    }
  }
  return rows;
}

std::string format_bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream os;
  os << "variant,size,append_steps,cons_steps,loop_iterations\n";
  for (const BenchRow& r : rows) {
    os << r.variant << ',' << r.size << ',' << r.append_steps << ','
       << r.cons_steps << ',' << r.loop_iterations << '\n';
  }
  return os.str();
}

}  // namespace defunc::cli
