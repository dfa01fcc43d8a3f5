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

#include <gtest/gtest.h>

#include <limits>
#include <string>

#include "support.h"

namespace defunc {
namespace {

using testing::kAllLiterals;
using testing::kSmallLiterals;

Expr L(std::int64_t n) { return Expr::lit(n); }
Expr D(Expr a, Expr b) { return Expr::diff(std::move(a), std::move(b)); }

TEST(ParseExpr, Examples) {
  EXPECT_EQ(parse_expr("(3 - 4) - 5"), D(D(L(3), L(4)), L(5)));
  EXPECT_EQ(parse_expr("7"), L(7));
  EXPECT_EQ(parse_expr("1 - 2 - 3"), D(D(L(1), L(2)), L(3)));
}

TEST(ParseExpr, SignsAndSpacing) {
  EXPECT_EQ(parse_expr("-5"), L(-5));
  EXPECT_EQ(parse_expr("  ( -3--4 )  "), D(L(-3), L(-4)));
  EXPECT_EQ(parse_expr("1-(2-3)"), D(L(1), D(L(2), L(3))));
  EXPECT_EQ(parse_expr("((((9))))"), L(9));
  EXPECT_EQ(parse_expr("\t1\n-\r\n2"), D(L(1), L(2)));
}

TEST(ParseExpr, Int64Extremes) {
  EXPECT_EQ(parse_expr("9223372036854775807"),
            L(std::numeric_limits<std::int64_t>::max()));
  EXPECT_EQ(parse_expr("-9223372036854775808"),
            L(std::numeric_limits<std::int64_t>::min()));
}

TEST(ParseExpr, SyntaxErrorsCarryOffset) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c :
       {Case{"", 0}, Case{"(1 - 2", 6}, Case{"1 -", 3}, Case{"1 2", 2},
        Case{"- 3", 1}, Case{")", 0}, Case{"1 - )", 4}, Case{"(1))", 3},
        Case{"1 + 2", 2}, Case{"--1", 1}, Case{"()", 1}}) {
    try {
      parse_expr(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const LiteralOverflowError&) {
      ADD_FAILURE() << "overflow for '" << c.text << "'";
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text;
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(ParseExpr, OverflowIsDistinct) {
  EXPECT_THROW(parse_expr("9223372036854775808"), LiteralOverflowError);
  EXPECT_THROW(parse_expr("1 - -9223372036854775809"), LiteralOverflowError);
  try {
    parse_expr("(1 - 99999999999999999999)");
    FAIL();
  } catch (const LiteralOverflowError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(PrintExpr, Examples) {
  EXPECT_EQ(print_expr(L(7)), "7");
  EXPECT_EQ(print_expr(D(L(1), L(2))), "(1 - 2)");
  EXPECT_EQ(print_expr(D(D(L(3), L(4)), L(5))), "((3 - 4) - 5)");
  EXPECT_EQ(print_expr(D(L(-1), L(-2))), "(-1 - -2)");
}

TEST(PrintExpr, RoundTripGenerated) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const Expr e = gen_expr(derive_seed(11, i), 1 + i % 10,
                            i % 2 ? kAllLiterals : kSmallLiterals);
    ASSERT_EQ(parse_expr(print_expr(e)), e) << print_expr(e);
  }
}

TEST(ParseExpr, LeftAssociativeTriples) {
  CounterRng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t a = rng.uniform(-1000, 1000);
    const std::int64_t b = rng.uniform(-1000, 1000);
    const std::int64_t c = rng.uniform(-1000, 1000);
    const std::string text = std::to_string(a) + " - " + std::to_string(b) +
                             " - " + std::to_string(c);
    EXPECT_EQ(parse_expr(text), D(D(L(a), L(b)), L(c))) << text;
  }
}

TEST(EvalDirect, Examples) {
  EXPECT_EQ(eval_direct(D(D(L(3), L(4)), L(5))), -6);
  EXPECT_EQ(eval_direct(L(42)), 42);
  EXPECT_EQ(eval_direct(D(L(10), L(10))), 0);
}

TEST(EvalDirect, WrapsAtOverflow) {
  const auto min = std::numeric_limits<std::int64_t>::min();
  const auto max = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(eval_direct(D(L(min), L(1))), max);
  EXPECT_EQ(eval_direct(D(L(max), L(-1))), min);
  EXPECT_EQ(eval_direct(D(L(0), L(min))), min);
}

TEST(EvalDirect, MatchesOracleOnFullRange) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const Expr e = gen_expr(derive_seed(12, i), 9, kAllLiterals);
    ASSERT_EQ(eval_direct(e), testing::oracle_eval(e));
  }
}

TEST(GenExpr, DepthOneIsLiteral) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Expr e = gen_expr(s, 1, {0, 9});
    ASSERT_TRUE(e.is_lit());
    EXPECT_GE(e.value(), 0);
    EXPECT_LE(e.value(), 9);
  }
  EXPECT_TRUE(gen_expr(1, 1, {0, 9}).is_lit());
}

TEST(GenExpr, Deterministic) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    EXPECT_EQ(gen_expr(s, 8, kSmallLiterals), gen_expr(s, 8, kSmallLiterals));
  }
}

TEST(GenExpr, DepthBoundAndLiteralRange) {
  EXPECT_LE(testing::oracle_depth(gen_expr(2, 6, {-100, 100})), 6u);
  std::size_t deepest = 0;
  for (std::uint64_t s = 0; s < 5000; ++s) {
    const std::size_t d = 1 + s % 8;
    const Expr e = gen_expr(s, d, {-3, 7});
    const std::size_t depth = testing::oracle_depth(e);
    ASSERT_LE(depth, d);
    ASSERT_EQ(expr_depth(e), depth);
    ASSERT_EQ(diff_count(e), testing::oracle_diffs(e));
    deepest = std::max(deepest, depth);
    std::vector<std::int64_t> literals;
    testing::oracle_literals(e, literals);
    for (std::int64_t v : literals) {
      ASSERT_GE(v, -3);
      ASSERT_LE(v, 7);
    }
  }
  EXPECT_EQ(deepest, 8u);
}

TEST(GenExpr, SeedsDiffer) {
  int distinct = 0;
  for (std::uint64_t s = 1; s < 100; ++s) {
    distinct +=
        !(gen_expr(s, 8, kSmallLiterals) == gen_expr(s - 1, 8, kSmallLiterals));
  }
  EXPECT_GT(distinct, 80);
}

TEST(GenExpr, RejectsBadArguments) {
  EXPECT_THROW(gen_expr(1, 0, {0, 9}), std::invalid_argument);
  EXPECT_THROW(gen_expr(1, 3, {5, 4}), std::invalid_argument);
}

TEST(Expr, DeepChainsDoNotOverflow) {
  constexpr int kDepth = 1000000;
  Expr left = L(0);
  Expr right = L(0);
  for (int i = 1; i <= kDepth; ++i) {
    left = D(left, L(1));
    right = D(L(1), right);
  }
  EXPECT_EQ(expr_depth(left), kDepth + 1u);
  EXPECT_EQ(diff_count(right), static_cast<std::size_t>(kDepth));
  const std::string text = print_expr(left);
  EXPECT_EQ(parse_expr(text), left);
  EXPECT_FALSE(left == right);
}

}  // namespace
}  // namespace defunc
