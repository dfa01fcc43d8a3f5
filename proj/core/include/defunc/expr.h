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

#ifndef DEFUNC_EXPR_H_
#define DEFUNC_EXPR_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defunc {

// Every evaluator in the project subtracts with this, so they stay
// extensionally equal even when the result overflows.
constexpr std::int64_t wrapping_sub(std::int64_t m, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(m) -
                                   static_cast<std::uint64_t>(n));
}

// Source language: integer literals and binary subtraction.
//
// Immutable and cheap to copy; subtrees are shared between copies. Equality
// is structural.
class Expr {
 public:
  static Expr lit(std::int64_t value);
  static Expr diff(Expr left, Expr right);

  bool is_lit() const;
  bool is_diff() const { return !is_lit(); }

  // Requires is_lit().
  std::int64_t value() const;
  // Require is_diff().
  const Expr& left() const;
  const Expr& right() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

// Number of Diff nodes.
std::size_t diff_count(const Expr& e);
// Longest root-to-leaf path counted in nodes; a literal has depth 1.
std::size_t expr_depth(const Expr& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}

  // Byte offset into the input where the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t offset, std::string expected);

  const std::string& expected() const { return expected_; }

 private:
  std::string expected_;
};

class LiteralOverflowError : public ParseError {
 public:
  LiteralOverflowError(std::size_t offset, std::string_view literal);
};

// Grammar:
//   expr := term { "-" term }          (left-associative)
//   term := INT | "(" expr ")"
//   INT  := ["-"] digit { digit }      (no space after the sign)
// Whitespace between tokens is ignored. The parser is iterative, so nesting
// depth is bounded only by memory.
Expr parse_expr(std::string_view text);

// Fully parenthesized except around literals: Diff(Lit 1, Lit 2) prints as
// "(1 - 2)". parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

std::ostream& operator<<(std::ostream& os, const Expr& e);

// Direct-style recursive reference evaluator.
std::int64_t eval_direct(const Expr& e);

struct LiteralRange {
  std::int64_t lo;
  std::int64_t hi;
};

// Deterministic random expression with expr_depth(result) <= max_depth and
// literals drawn uniformly from `literals`. The chance of a Diff node shrinks
// with depth. Throws std::invalid_argument if max_depth == 0 or the range is
// empty.
Expr gen_expr(std::uint64_t seed, std::size_t max_depth, LiteralRange literals);

}  // namespace defunc

#endif  // DEFUNC_EXPR_H_
