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

#ifndef DEFUNC_STACK_MACHINE_H_
#define DEFUNC_STACK_MACHINE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "defunc/expr.h"

namespace defunc {

struct Instr {
  enum class Op : std::uint8_t { kPush, kSub };

  static constexpr Instr push(std::int64_t n) { return {Op::kPush, n}; }
  static constexpr Instr sub() { return {Op::kSub, 0}; }

  bool is_push() const { return op == Op::kPush; }

  Op op;
  // Meaningful for kPush only; always 0 for kSub.
  std::int64_t operand;

  friend bool operator==(const Instr&, const Instr&) = default;
};

using Prog = std::vector<Instr>;

// Operand stack; element 0 is the top.
using Stack = std::vector<std::int64_t>;

std::ostream& operator<<(std::ostream& os, const Instr& instr);

class ExecError : public std::runtime_error {
 public:
  ExecError(std::size_t instruction_index, std::size_t height);

  std::size_t instruction_index() const { return instruction_index_; }

 private:
  std::size_t instruction_index_;
};

// A compiled program did not leave exactly one value. Never expected.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lit n -> [Push n]; Diff e e' -> compile(e) ++ compile(e') ++ [Sub].
Prog compile(const Expr& e);

// Left fold over `program`. Sub pops n (the top), then m, and pushes m - n.
// Throws ExecError on underflow.
Stack exec(const Prog& program, const Stack& stack);

struct ExecProfile {
  Stack stack;
  // Largest stack height reached, counting the initial stack.
  std::size_t max_height;
};
ExecProfile exec_profiled(const Prog& program, const Stack& stack);

// exec(compile(e), []) must hold exactly one value, which is returned.
std::int64_t run_expr(const Expr& e);

class AssembleError : public std::runtime_error {
 public:
  AssembleError(std::size_t line, const std::string& message);

  // 1-based.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: one instruction per line, `PUSH <int>` or `SUB`. '#' starts a
// comment running to end of line; blank lines are ignored.
Prog assemble(std::string_view text);
// One instruction per line, each terminated by '\n'.
std::string disassemble(const Prog& program);

}  // namespace defunc

#endif  // DEFUNC_STACK_MACHINE_H_
