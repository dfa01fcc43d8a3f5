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

#include "defunc/stack_machine.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <utility>

namespace defunc {

std::ostream& operator<<(std::ostream& os, const Instr& instr) {
  if (instr.is_push()) return os << "PUSH " << instr.operand;
  return os << "SUB";
}

ExecError::ExecError(std::size_t instruction_index, std::size_t height)
    : std::runtime_error("stack underflow at instruction " +
                         std::to_string(instruction_index) + ": SUB needs 2 " +
                         "operands, stack has " + std::to_string(height)),
      instruction_index_(instruction_index) {}

AssembleError::AssembleError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Prog compile(const Expr& e) {
  Prog program;
  program.reserve(2 * diff_count(e) + 1);
  // Post-order walk; `expanded` marks a Diff whose children are queued.
  std::vector<std::pair<const Expr*, bool>> todo{{&e, false}};
  while (!todo.empty()) {
    auto [x, expanded] = todo.back();
    todo.pop_back();
    if (x->is_lit()) {
      program.push_back(Instr::push(x->value()));
    } else if (expanded) {
      program.push_back(Instr::sub());
    } else {
      todo.emplace_back(x, true);
      todo.emplace_back(&x->right(), false);
      todo.emplace_back(&x->left(), false);
    }
  }
  return program;
}

ExecProfile exec_profiled(const Prog& program, const Stack& stack) {
  // Work with the top at the back, then flip back on return.
  std::vector<std::int64_t> work(stack.rbegin(), stack.rend());
  std::size_t max_height = work.size();
  for (std::size_t i = 0; i < program.size(); ++i) {
    const Instr& instr = program[i];
    if (instr.is_push()) {
      work.push_back(instr.operand);
      max_height = std::max(max_height, work.size());
      continue;
    }
    if (work.size() < 2) throw ExecError(i, work.size());
    const std::int64_t n = work.back();
    work.pop_back();
    const std::int64_t m = work.back();
    work.back() = wrapping_sub(m, n);
  }
  std::reverse(work.begin(), work.end());
  return {std::move(work), max_height};
}

Stack exec(const Prog& program, const Stack& stack) {
  return exec_profiled(program, stack).stack;
}

std::int64_t run_expr(const Expr& e) {
  Stack result = exec(compile(e), {});
  if (result.size() != 1) {
    throw InvariantError("run_expr: compiled program left " +
                         std::to_string(result.size()) + " values");
  }
  return result.front();
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

Instr assemble_line(std::string_view line, std::size_t line_no) {
  if (line == "SUB") return Instr::sub();
  constexpr std::string_view kPush = "PUSH";
  if (line.substr(0, kPush.size()) != kPush || line.size() == kPush.size() ||
      !is_blank(line[kPush.size()])) {
    throw AssembleError(line_no, "expected 'PUSH <int>' or 'SUB', got '" +
                                     std::string(line) + "'");
  }
  std::string_view operand = trim(line.substr(kPush.size()));
  std::int64_t value = 0;
  const char* first = operand.data();
  const char* last = operand.data() + operand.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw AssembleError(line_no, "integer '" + std::string(operand) +
                                     "' does not fit in 64 bits");
  }
  // from_chars also rejects a leading '+', matching the literal grammar.
  if (ec != std::errc() || ptr != last) {
    throw AssembleError(line_no,
                        "malformed integer '" + std::string(operand) + "'");
  }
  return Instr::push(value);
}

}  // namespace

Prog assemble(std::string_view text) {
  Prog program;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    program.push_back(assemble_line(line, line_no));
  }
  return program;
}

std::string disassemble(const Prog& program) {
  std::string out;
  for (const Instr& instr : program) {
    if (instr.is_push()) {
      out += "PUSH " + std::to_string(instr.operand) + "\n";
    } else {
      out += "SUB\n";
    }
  }
  return out;
}

}  // namespace defunc
