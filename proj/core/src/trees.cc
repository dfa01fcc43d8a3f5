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

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "defunc/accumulation.h"
#include "defunc/detail/release.h"
#include "defunc/rng.h"

namespace defunc {

struct IntList::Cell {
  Cell(std::int64_t h, std::shared_ptr<Cell> t)
      : head(h),
        tail(std::move(t)),
        length(tail == nullptr ? 1 : tail->length + 1) {}
  ~Cell() { detail::release_children(*this); }

  std::array<std::shared_ptr<Cell>*, 1> children() { return {&tail}; }

  std::int64_t head;
  std::shared_ptr<Cell> tail;
  std::size_t length;
};

IntList IntList::from_vector(std::span<const std::int64_t> xs) {
  IntList out;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = out.cons(*it);
  return out;
}

std::size_t IntList::length() const {
  return head_ == nullptr ? 0 : head_->length;
}
std::int64_t IntList::head() const { return head_->head; }
IntList IntList::tail() const { return IntList(head_->tail); }

IntList IntList::cons(std::int64_t x) const {
  return IntList(std::make_shared<Cell>(x, head_));
}

std::vector<std::int64_t> IntList::to_vector() const {
  std::vector<std::int64_t> out;
  out.reserve(length());
  for (const Cell* c = head_.get(); c != nullptr; c = c->tail.get()) {
    out.push_back(c->head);
  }
  return out;
}

bool operator==(const IntList& a, const IntList& b) {
  if (a.length() != b.length()) return false;
  const IntList::Cell* x = a.head_.get();
  const IntList::Cell* y = b.head_.get();
  for (; x != y; x = x->tail.get(), y = y->tail.get()) {
    if (x->head != y->head) return false;
  }
  return true;
}

struct Tree::Node {
  explicit Node(std::int64_t v)
      : is_tip(true), value(v), left(nullptr), right(nullptr) {}
  Node(Tree l, Tree r)
      : is_tip(false), value(0), left(std::move(l)), right(std::move(r)) {}
  ~Node() { detail::release_children(*this); }

  std::array<std::shared_ptr<Node>*, 2> children() {
    return {&left.node_, &right.node_};
  }

  bool is_tip;
  std::int64_t value;
  Tree left;
  Tree right;
};

Tree Tree::tip(std::int64_t value) {
  return Tree(std::make_shared<Node>(value));
}

Tree Tree::bin(Tree left, Tree right) {
  return Tree(std::make_shared<Node>(std::move(left), std::move(right)));
}

bool Tree::is_tip() const { return node_->is_tip; }
std::int64_t Tree::value() const { return node_->value; }
const Tree& Tree::left() const { return node_->left; }
const Tree& Tree::right() const { return node_->right; }

bool operator==(const Tree& a, const Tree& b) {
  std::vector<std::pair<const Tree*, const Tree*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->is_tip() != y->is_tip()) return false;
    if (x->is_tip()) {
      if (x->value() != y->value()) return false;
      continue;
    }
    todo.emplace_back(&x->right(), &y->right());
    todo.emplace_back(&x->left(), &y->left());
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Tree& t) {
  struct Item {
    const Tree* tree;
    const char* text;
  };
  std::vector<Item> todo{{&t, nullptr}};
  while (!todo.empty()) {
    Item item = todo.back();
    todo.pop_back();
    if (item.text != nullptr) {
      os << item.text;
    } else if (item.tree->is_tip()) {
      os << "Tip " << item.tree->value();
    } else {
      os << "Bin(";
      todo.push_back({nullptr, ")"});
      todo.push_back({&item.tree->right(), nullptr});
      todo.push_back({nullptr, ", "});
      todo.push_back({&item.tree->left(), nullptr});
    }
  }
  return os;
}

std::size_t tip_count(const Tree& t) {
  std::size_t count = 0;
  std::vector<const Tree*> todo{&t};
  while (!todo.empty()) {
    const Tree* x = todo.back();
    todo.pop_back();
    if (x->is_tip()) {
      ++count;
    } else {
      todo.push_back(&x->left());
      todo.push_back(&x->right());
    }
  }
  return count;
}

std::size_t tree_depth(const Tree& t) {
  std::size_t deepest = 0;
  std::vector<std::pair<const Tree*, std::size_t>> todo{{&t, 1}};
  while (!todo.empty()) {
    auto [x, depth] = todo.back();
    todo.pop_back();
    deepest = std::max(deepest, depth);
    if (!x->is_tip()) {
      todo.emplace_back(&x->left(), depth + 1);
      todo.emplace_back(&x->right(), depth + 1);
    }
  }
  return deepest;
}

Tree make_spine(std::size_t n, Side side) {
  if (n == 0) throw std::invalid_argument("make_spine: n must be >= 1");
  const auto label = [](std::size_t i) { return static_cast<std::int64_t>(i); };
  if (side == Side::kLeft) {
    Tree t = Tree::tip(1);
    for (std::size_t i = 2; i <= n; ++i)
      t = Tree::bin(std::move(t), Tree::tip(label(i)));
    return t;
  }
  Tree t = Tree::tip(label(n));
  for (std::size_t i = n - 1; i >= 1; --i)
    t = Tree::bin(Tree::tip(label(i)), std::move(t));
  return t;
}

namespace {

Tree gen_subtree(CounterRng& rng, std::int64_t first_label, std::size_t tips) {
  if (tips == 1) return Tree::tip(first_label);
  const auto left_tips = static_cast<std::size_t>(
      rng.uniform(1, static_cast<std::int64_t>(tips) - 1));
  Tree left = gen_subtree(rng, first_label, left_tips);
  Tree right =
      gen_subtree(rng, first_label + static_cast<std::int64_t>(left_tips),
                  tips - left_tips);
  return Tree::bin(std::move(left), std::move(right));
}

}  // namespace

Tree gen_tree(std::uint64_t seed, std::size_t tips) {
  if (tips == 0) throw std::invalid_argument("gen_tree: tips must be >= 1");
  CounterRng rng(seed);
  return gen_subtree(rng, 1, tips);
}

DepthLimitExceeded::DepthLimitExceeded(std::size_t limit)
    : std::runtime_error("recursion depth limit of " + std::to_string(limit) +
                         " exceeded") {}

}  // namespace defunc
