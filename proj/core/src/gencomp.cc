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

#include "defunc/gencomp.h"

#include <array>
#include <ostream>
#include <utility>
#include <vector>

#include "defunc/detail/release.h"
#include "defunc/rng.h"

namespace defunc {

Curried Curried::done(std::int64_t value) { return Curried(value); }

Curried Curried::need(Step step) {
  return Curried(std::make_shared<const Step>(std::move(step)));
}

Curried Curried::feed(std::int64_t arg) const {
  if (is_done()) throw ArityError("argument supplied to a finished value");
  return (*std::get<std::shared_ptr<const Step>>(rep_))(arg);
}

std::size_t arity(const Curried& c, std::size_t limit) {
  std::size_t n = 0;
  for (Curried cur = c; !cur.is_done(); cur = cur.feed(0)) {
    if (++n > limit) throw ArityError("arity exceeds probe limit");
  }
  return n;
}

std::int64_t apply_all(const Curried& c, std::span<const std::int64_t> args) {
  Curried cur = c;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (cur.is_done()) {
      throw ArityError("apply_all: " + std::to_string(args.size() - i) +
                       " argument(s) left over");
    }
    cur = cur.feed(args[i]);
  }
  if (!cur.is_done()) throw ArityError("apply_all: too few arguments");
  return cur.value();
}

Curried gcompose(std::size_t r, Curried g, Curried f) {
  if (r == 0) {
    if (!f.is_done()) throw ArityError("gcompose: f takes more than r args");
    if (g.is_done()) throw ArityError("gcompose: g takes no argument");
    return g.feed(f.value());
  }
  if (f.is_done()) throw ArityError("gcompose: f takes fewer than r args");
  return Curried::need([r, g = std::move(g), f = std::move(f)](std::int64_t x) {
    return gcompose(r - 1, g, f.feed(x));
  });
}

// ---------------------------------------------------------------------------
// TreeCode

struct TreeCode::Node {
  Node(Kind k, std::size_t a, std::int64_t v, TreeCode cx, TreeCode cy)
      : kind(k), arity(a), value(v), x(std::move(cx)), y(std::move(cy)) {}
  ~Node() { detail::release_children(*this); }

  std::array<std::shared_ptr<Node>*, 2> children() {
    return {&x.node_, &y.node_};
  }

  Kind kind;
  std::size_t arity;
  std::int64_t value;
  TreeCode x;
  TreeCode y;
};

TreeCode TreeCode::ret(std::int64_t n) {
  return TreeCode(std::make_shared<Node>(Kind::kRet, 0, n, TreeCode(nullptr),
                                         TreeCode(nullptr)));
}

TreeCode TreeCode::sub_op() {
  return TreeCode(std::make_shared<Node>(Kind::kSubOp, 2, 0, TreeCode(nullptr),
                                         TreeCode(nullptr)));
}

TreeCode TreeCode::b1(TreeCode x, TreeCode y) {
  if (x.arity() != 0 || y.arity() != 1) {
    throw ArityError("B1 needs children of arity 0 and 1, got " +
                     std::to_string(x.arity()) + " and " +
                     std::to_string(y.arity()));
  }
  return TreeCode(
      std::make_shared<Node>(Kind::kB1, 0, 0, std::move(x), std::move(y)));
}

TreeCode TreeCode::b2(TreeCode x, TreeCode y) {
  if (x.arity() != 0 || y.arity() != 2) {
    throw ArityError("B2 needs children of arity 0 and 2, got " +
                     std::to_string(x.arity()) + " and " +
                     std::to_string(y.arity()));
  }
  return TreeCode(
      std::make_shared<Node>(Kind::kB2, 1, 0, std::move(x), std::move(y)));
}

TreeCode::Kind TreeCode::kind() const { return node_->kind; }
std::size_t TreeCode::arity() const { return node_->arity; }
std::int64_t TreeCode::value() const { return node_->value; }
const TreeCode& TreeCode::x() const { return node_->x; }
const TreeCode& TreeCode::y() const { return node_->y; }

bool operator==(const TreeCode& a, const TreeCode& b) {
  std::vector<std::pair<const TreeCode*, const TreeCode*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [p, q] = todo.back();
    todo.pop_back();
    if (p->node_ == q->node_) continue;
    if (p->kind() != q->kind() || p->arity() != q->arity()) return false;
    switch (p->kind()) {
      case TreeCode::Kind::kRet:
        if (p->value() != q->value()) return false;
        break;
      case TreeCode::Kind::kSubOp:
        break;
      case TreeCode::Kind::kB1:
      case TreeCode::Kind::kB2:
        todo.emplace_back(&p->x(), &q->x());
        todo.emplace_back(&p->y(), &q->y());
        break;
    }
  }
  return true;
}

bool arity_consistent(const TreeCode& c) {
  switch (c.kind()) {
    case TreeCode::Kind::kRet:
      return c.arity() == 0;
    case TreeCode::Kind::kSubOp:
      return c.arity() == 2;
    case TreeCode::Kind::kB1:
      return c.arity() == 0 && c.x().arity() == 0 && c.y().arity() == 1 &&
             arity_consistent(c.x()) && arity_consistent(c.y());
    case TreeCode::Kind::kB2:
      return c.arity() == 1 && c.x().arity() == 0 && c.y().arity() == 2 &&
             arity_consistent(c.x()) && arity_consistent(c.y());
  }
  return false;
}

namespace {

using SharedFn = std::shared_ptr<const UnaryFn>;

Curried denote_tree_with(const TreeCode& c, SharedFn k) {
  switch (c.kind()) {
    case TreeCode::Kind::kRet:
      return Curried::done((*k)(c.value()));
    case TreeCode::Kind::kSubOp:
      return Curried::need([k](std::int64_t m) {
        return Curried::need([k, m](std::int64_t n) {
          return Curried::done((*k)(wrapping_sub(m, n)));
        });
      });
    case TreeCode::Kind::kB1: {
      TreeCode y = c.y();
      auto next = std::make_shared<const UnaryFn>(
          [y = std::move(y), k](std::int64_t m) {
            const std::int64_t args[] = {m};
            return apply_all(denote_tree_with(y, k), args);
          });
      return denote_tree_with(c.x(), std::move(next));
    }
    case TreeCode::Kind::kB2:
      return Curried::need([x = c.x(), y = c.y(), k](std::int64_t m) {
        auto next = std::make_shared<const UnaryFn>([y, k, m](std::int64_t n) {
          const std::int64_t args[] = {m, n};
          return apply_all(denote_tree_with(y, k), args);
        });
        return denote_tree_with(x, std::move(next));
      });
  }
  throw std::logic_error("denote_tree: bad kind");
}

}  // namespace

Curried denote_tree(const TreeCode& c, UnaryFn k) {
  return denote_tree_with(c, std::make_shared<const UnaryFn>(std::move(k)));
}

TreeCode rep_tree(const Expr& e) {
  if (e.is_lit()) return TreeCode::ret(e.value());
  return TreeCode::b1(rep_tree(e.left()),
                      TreeCode::b2(rep_tree(e.right()), TreeCode::sub_op()));
}

std::int64_t eval_gencomp_tree(const Expr& e) {
  return apply_all(denote_tree(rep_tree(e), [](std::int64_t n) { return n; }),
                   {});
}

// ---------------------------------------------------------------------------
// LinearCode

struct LinearCode::Node {
  Node(Kind k, std::size_t a, std::int64_t v, LinearCode r)
      : kind(k),
        arity(a),
        value(v),
        length(r.node_ == nullptr ? 1 : r.length() + 1),
        rest(std::move(r)) {}
  ~Node() { detail::release_children(*this); }

  std::array<std::shared_ptr<Node>*, 1> children() { return {&rest.node_}; }

  Kind kind;
  std::size_t arity;
  std::int64_t value;
  std::size_t length;
  LinearCode rest;
};

LinearCode LinearCode::halt() {
  return LinearCode(
      std::make_shared<Node>(Kind::kHalt, 1, 0, LinearCode(nullptr)));
}

LinearCode LinearCode::push_ret(std::int64_t n, LinearCode rest) {
  if (rest.arity() == 0) {
    throw ArityError("PushRet needs a continuation of arity >= 1");
  }
  const std::size_t a = rest.arity() - 1;
  return LinearCode(
      std::make_shared<Node>(Kind::kPushRet, a, n, std::move(rest)));
}

LinearCode LinearCode::sub_cont(LinearCode rest) {
  // The difference is handed on, so the continuation takes at least one.
  if (rest.arity() == 0) {
    throw ArityError("SubCont needs a continuation of arity >= 1");
  }
  const std::size_t a = rest.arity() + 1;
  return LinearCode(
      std::make_shared<Node>(Kind::kSubCont, a, 0, std::move(rest)));
}

LinearCode::Kind LinearCode::kind() const { return node_->kind; }
std::size_t LinearCode::arity() const { return node_->arity; }
std::int64_t LinearCode::value() const { return node_->value; }
const LinearCode& LinearCode::rest() const { return node_->rest; }
std::size_t LinearCode::length() const { return node_->length; }

bool operator==(const LinearCode& a, const LinearCode& b) {
  const LinearCode* p = &a;
  const LinearCode* q = &b;
  for (;;) {
    if (p->node_ == q->node_) return true;
    if (p->kind() != q->kind() || p->arity() != q->arity()) return false;
    if (p->kind() == LinearCode::Kind::kHalt) return true;
    if (p->kind() == LinearCode::Kind::kPushRet && p->value() != q->value()) {
      return false;
    }
    p = &p->rest();
    q = &q->rest();
  }
}

bool arity_consistent(const LinearCode& c) {
  for (const LinearCode* p = &c;; p = &p->rest()) {
    switch (p->kind()) {
      case LinearCode::Kind::kHalt:
        return p->arity() == 1 && p->length() == 1;
      case LinearCode::Kind::kPushRet:
        if (p->rest().arity() < 1 || p->arity() + 1 != p->rest().arity()) {
          return false;
        }
        break;
      case LinearCode::Kind::kSubCont:
        if (p->rest().arity() < 1 || p->arity() != p->rest().arity() + 1) {
          return false;
        }
        break;
    }
    if (p->length() != p->rest().length() + 1) return false;
  }
}

LinearCode append_linear(const LinearCode& x, const LinearCode& y) {
  if (y.arity() == 0) {
    throw ArityError("append_linear: second code must have arity >= 1");
  }
  std::vector<const LinearCode*> spine;
  for (const LinearCode* p = &x; p->kind() != LinearCode::Kind::kHalt;
       p = &p->rest()) {
    spine.push_back(p);
  }
  LinearCode out = y;
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    out = (*it)->kind() == LinearCode::Kind::kPushRet
              ? LinearCode::push_ret((*it)->value(), std::move(out))
              : LinearCode::sub_cont(std::move(out));
  }
  return out;
}

LinearCode rotate(const TreeCode& c) {
  switch (c.kind()) {
    case TreeCode::Kind::kRet:
      return LinearCode::push_ret(c.value(), LinearCode::halt());
    case TreeCode::Kind::kSubOp:
      return LinearCode::sub_cont(LinearCode::halt());
    case TreeCode::Kind::kB1:
    case TreeCode::Kind::kB2:
      return append_linear(rotate(c.x()), rotate(c.y()));
  }
  throw std::logic_error("rotate: bad kind");
}

LinearCode rep_linear(const Expr& e) {
  if (e.is_lit()) return LinearCode::push_ret(e.value(), LinearCode::halt());
  return append_linear(rep_linear(e.left()),
                       append_linear(rep_linear(e.right()),
                                     LinearCode::sub_cont(LinearCode::halt())));
}

std::int64_t denote_linear(const LinearCode& c,
                           std::span<const std::int64_t> args) {
  if (args.size() != c.arity()) {
    throw ArityError("denote_linear: code has arity " +
                     std::to_string(c.arity()) + ", got " +
                     std::to_string(args.size()) + " argument(s)");
  }
  // Top of stack at the back.
  std::vector<std::int64_t> stack(args.rbegin(), args.rend());
  for (const LinearCode* p = &c;; p = &p->rest()) {
    switch (p->kind()) {
      case LinearCode::Kind::kHalt:
        return stack.back();
      case LinearCode::Kind::kPushRet:
        stack.push_back(p->value());
        break;
      case LinearCode::Kind::kSubCont: {
        const std::int64_t n = stack.back();
        stack.pop_back();
        stack.back() = wrapping_sub(stack.back(), n);
        break;
      }
    }
  }
}

Curried abstract_linear(const LinearCode& c) {
  switch (c.kind()) {
    case LinearCode::Kind::kHalt:
      return Curried::need([](std::int64_t n) { return Curried::done(n); });
    case LinearCode::Kind::kPushRet:
      return abstract_linear(c.rest()).feed(c.value());
    case LinearCode::Kind::kSubCont:
      return Curried::need([k = abstract_linear(c.rest())](std::int64_t n) {
        return Curried::need(
            [k, n](std::int64_t m) { return k.feed(wrapping_sub(m, n)); });
      });
  }
  throw std::logic_error("abstract_linear: bad kind");
}

std::int64_t eval_linear(const Expr& e) {
  return denote_linear(rep_linear(e), {});
}

Prog compile_linear(const LinearCode& c) {
  Prog program;
  program.reserve(c.length() - 1);
  for (const LinearCode* p = &c; p->kind() != LinearCode::Kind::kHalt;
       p = &p->rest()) {
    program.push_back(p->kind() == LinearCode::Kind::kPushRet
                          ? Instr::push(p->value())
                          : Instr::sub());
  }
  return program;
}

namespace {

std::string arity_suffix(std::size_t arity) {
  return " (arity " + std::to_string(arity) + ")\n";
}

void render_tree_into(const TreeCode& c, std::size_t indent, std::string& out) {
  out.append(indent, ' ');
  switch (c.kind()) {
    case TreeCode::Kind::kRet:
      out += "RET " + std::to_string(c.value()) + arity_suffix(c.arity());
      return;
    case TreeCode::Kind::kSubOp:
      out += "SUB" + arity_suffix(c.arity());
      return;
    case TreeCode::Kind::kB1:
    case TreeCode::Kind::kB2:
      out += (c.kind() == TreeCode::Kind::kB1 ? "B1" : "B2") +
             arity_suffix(c.arity());
      render_tree_into(c.x(), indent + 2, out);
      render_tree_into(c.y(), indent + 2, out);
      return;
  }
}

}  // namespace

std::string render_tree(const TreeCode& c) {
  std::string out;
  render_tree_into(c, 0, out);
  return out;
}

std::string render_linear(const LinearCode& c) {
  std::string out;
  for (const LinearCode* p = &c;; p = &p->rest()) {
    switch (p->kind()) {
      case LinearCode::Kind::kHalt:
        out += "HALT" + arity_suffix(p->arity());
        return out;
      case LinearCode::Kind::kPushRet:
        out +=
            "PUSHRET " + std::to_string(p->value()) + arity_suffix(p->arity());
        break;
      case LinearCode::Kind::kSubCont:
        out += "SUBCONT" + arity_suffix(p->arity());
        break;
    }
  }
}

std::ostream& operator<<(std::ostream& os, const TreeCode& c) {
  return os << render_tree(c);
}

std::ostream& operator<<(std::ostream& os, const LinearCode& c) {
  return os << render_linear(c);
}

namespace {

TreeCode gen_tree_node(CounterRng& rng, std::size_t arity, std::size_t depth,
                       LiteralRange literals) {
  switch (arity) {
    case 0:
      if (depth == 0 || rng.chance(1, 3)) {
        return TreeCode::ret(rng.uniform(literals.lo, literals.hi));
      } else {
        TreeCode x = gen_tree_node(rng, 0, depth - 1, literals);
        TreeCode y = gen_tree_node(rng, 1, depth - 1, literals);
        return TreeCode::b1(std::move(x), std::move(y));
      }
    case 1: {
      // No leaf has arity 1, so B2 is the only choice.
      TreeCode x = gen_tree_node(rng, 0, depth == 0 ? 0 : depth - 1, literals);
      TreeCode y = gen_tree_node(rng, 2, depth == 0 ? 0 : depth - 1, literals);
      return TreeCode::b2(std::move(x), std::move(y));
    }
    case 2:
      return TreeCode::sub_op();
  }
  throw std::invalid_argument("gen_tree_code: arity must be 0, 1 or 2");
}

}  // namespace

TreeCode gen_tree_code(std::uint64_t seed, std::size_t arity,
                       std::size_t max_depth, LiteralRange literals) {
  CounterRng rng(seed);
  return gen_tree_node(rng, arity, max_depth, literals);
}

LinearCode gen_linear_code(std::uint64_t seed, std::size_t arity,
                           std::size_t length, std::size_t max_arity,
                           LiteralRange literals) {
  CounterRng rng(seed);
  LinearCode code = LinearCode::halt();
  auto push = [&] {
    code = LinearCode::push_ret(rng.uniform(literals.lo, literals.hi),
                                std::move(code));
  };
  // Only the outermost node may have arity 0, so stay at 1 or above here.
  for (std::size_t i = 0; i < length; ++i) {
    if (code.arity() == 1) {
      code = LinearCode::sub_cont(std::move(code));
    } else if (code.arity() >= max_arity || rng.chance(1, 2)) {
      push();
    } else {
      code = LinearCode::sub_cont(std::move(code));
    }
  }
  while (code.arity() > arity) push();
  while (code.arity() < arity) code = LinearCode::sub_cont(std::move(code));
  return code;
}

}  // namespace defunc
