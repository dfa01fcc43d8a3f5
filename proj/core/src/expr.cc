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

#include "defunc/expr.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "defunc/detail/release.h"
#include "defunc/rng.h"

namespace defunc {

struct Expr::Node {
  Node(std::int64_t v)
      : is_lit(true), value(v), left(nullptr), right(nullptr) {}
  Node(Expr l, Expr r)
      : is_lit(false), value(0), left(std::move(l)), right(std::move(r)) {}
  ~Node() { detail::release_children(*this); }

  std::array<std::shared_ptr<Node>*, 2> children() {
    return {&left.node_, &right.node_};
  }

  bool is_lit;
  std::int64_t value;
  Expr left;
  Expr right;
};

Expr Expr::lit(std::int64_t value) {
  return Expr(std::make_shared<Node>(value));
}

Expr Expr::diff(Expr left, Expr right) {
  return Expr(std::make_shared<Node>(std::move(left), std::move(right)));
}

bool Expr::is_lit() const { return node_->is_lit; }
std::int64_t Expr::value() const { return node_->value; }
const Expr& Expr::left() const { return node_->left; }
const Expr& Expr::right() const { return node_->right; }

bool operator==(const Expr& a, const Expr& b) {
  std::vector<std::pair<const Expr*, const Expr*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->is_lit() != y->is_lit()) return false;
    if (x->is_lit()) {
      if (x->value() != y->value()) return false;
      continue;
    }
    todo.emplace_back(&x->right(), &y->right());
    todo.emplace_back(&x->left(), &y->left());
  }
  return true;
}

std::size_t diff_count(const Expr& e) {
  std::size_t count = 0;
  std::vector<const Expr*> todo{&e};
  while (!todo.empty()) {
    const Expr* x = todo.back();
    todo.pop_back();
    if (x->is_diff()) {
      ++count;
      todo.push_back(&x->left());
      todo.push_back(&x->right());
    }
  }
  return count;
}

std::size_t expr_depth(const Expr& e) {
  std::size_t deepest = 0;
  std::vector<std::pair<const Expr*, std::size_t>> todo{{&e, 1}};
  while (!todo.empty()) {
    auto [x, depth] = todo.back();
    todo.pop_back();
    deepest = std::max(deepest, depth);
    if (x->is_diff()) {
      todo.emplace_back(&x->left(), depth + 1);
      todo.emplace_back(&x->right(), depth + 1);
    }
  }
  return deepest;
}

SyntaxError::SyntaxError(std::size_t offset, std::string expected)
    : ParseError("syntax error at offset " + std::to_string(offset) +
                     ": expected " + expected,
                 offset),
      expected_(std::move(expected)) {}

LiteralOverflowError::LiteralOverflowError(std::size_t offset,
                                           std::string_view literal)
    : ParseError("integer literal '" + std::string(literal) + "' at offset " +
                     std::to_string(offset) + " does not fit in 64 bits",
                 offset) {}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  // Shift-reduce over an explicit stack of open groups. Each group holds the
  // left operand accumulated so far, which keeps "-" left-associative.
  Expr parse() {
    std::vector<std::optional<Expr>> groups(1);
    for (;;) {
      // Term position.
      skip_space();
      if (peek() == '(') {
        ++pos_;
        groups.emplace_back();
        continue;
      }
      Expr operand = literal();
      // Operator position; closing parentheses reduce groups.
      for (;;) {
        std::optional<Expr>& acc = groups.back();
        acc = acc ? Expr::diff(std::move(*acc), std::move(operand))
                  : std::move(operand);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ')' && groups.size() > 1) {
          ++pos_;
          operand = std::move(*groups.back());
          groups.pop_back();
          continue;
        }
        break;
      }
      if (pos_ == text_.size()) {
        if (groups.size() > 1) throw SyntaxError(pos_, "'-' or ')'");
        return std::move(*groups.back());
      }
      if (text_[pos_] != '-') {
        throw SyntaxError(
            pos_, groups.size() > 1 ? "'-' or ')'" : "'-' or end of input");
      }
      ++pos_;
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  Expr literal() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end == digits) {
      throw SyntaxError(end, end == start ? "integer or '('" : "digit");
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec == std::errc::result_out_of_range) {
      throw LiteralOverflowError(start, text_.substr(start, end - start));
    }
    pos_ = end;
    return Expr::lit(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  // Either a subexpression still to print or a fixed piece of punctuation.
  struct Item {
    const Expr* expr;
    const char* text;
  };
  std::vector<Item> todo{{&e, nullptr}};
  while (!todo.empty()) {
    Item item = todo.back();
    todo.pop_back();
    if (item.text != nullptr) {
      out += item.text;
    } else if (item.expr->is_lit()) {
      out += std::to_string(item.expr->value());
    } else {
      out += '(';
      todo.push_back({nullptr, ")"});
      todo.push_back({&item.expr->right(), nullptr});
      todo.push_back({nullptr, " - "});
      todo.push_back({&item.expr->left(), nullptr});
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
  return os << print_expr(e);
}

std::int64_t eval_direct(const Expr& e) {
  if (e.is_lit()) return e.value();
  return wrapping_sub(eval_direct(e.left()), eval_direct(e.right()));
}

namespace {

Expr gen_node(CounterRng& rng, std::size_t level, std::size_t max_depth,
              LiteralRange literals) {
  // P(Diff) = 9 / (10 + level) below the depth cap.
  if (level < max_depth && rng.chance(9, 10 + level)) {
    Expr left = gen_node(rng, level + 1, max_depth, literals);
    Expr right = gen_node(rng, level + 1, max_depth, literals);
    return Expr::diff(std::move(left), std::move(right));
  }
  return Expr::lit(rng.uniform(literals.lo, literals.hi));
}

}  // namespace

Expr gen_expr(std::uint64_t seed, std::size_t max_depth,
              LiteralRange literals) {
  if (max_depth == 0) throw std::invalid_argument("gen_expr: max_depth < 1");
  if (literals.lo > literals.hi) {
    throw std::invalid_argument("gen_expr: empty literal range");
  }
  CounterRng rng(seed);
  return gen_node(rng, 1, max_depth, literals);
}

}  // namespace defunc
