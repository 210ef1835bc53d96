#include "secm/expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "secm/errors.hpp"

using namespace secm;

namespace {

Expr random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 1);
  std::uniform_real_distribution<double> value(0, 5);  // literals are unsigned
  switch (pick(rng)) {
    case 0:
      return Expr::number(value(rng));
    case 1:
      return Expr::variable();
    case 2:
      return Expr::negate(random_tree(rng, depth - 1));
    case 3:
      return Expr::call(known_functions()[rng() % known_functions().size()], random_tree(rng, depth - 1));
    default: {
      static const Expr::Kind kinds[] = {Expr::Kind::add, Expr::Kind::subtract, Expr::Kind::multiply,
                                         Expr::Kind::divide, Expr::Kind::power};
      return Expr::binary(kinds[rng() % 5], random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    }
  }
}

}  // namespace

TEST(Parse, IntegralEquationExample) {
  EXPECT_NEAR(parse("x^3-2/(x+5)+1/(x^2+3)").evaluate(1), 11.0 / 12.0, 1e-15);
  EXPECT_DOUBLE_EQ(parse("x").evaluate(0.25), 0.25);
  EXPECT_DOUBLE_EQ(parse("sqrt(1-x^2)").evaluate(0), 1.0);
  EXPECT_DOUBLE_EQ(parse("1/(1+x^2)").evaluate(1), 0.5);
  EXPECT_NEAR(parse("ln(x/(1-x))").evaluate(0.25), std::log(1.0 / 3.0), 1e-15);
}

TEST(Parse, RoundTripRightHandSide) {
  const Expr e = parse("2*x^11 - 7*x^10 + 8*x^5 - 3*x + 2");
  const double x = 11.0 / 12.0;
  EXPECT_NEAR(e.evaluate(x), 2 * std::pow(x, 11) - 7 * std::pow(x, 10) + 8 * std::pow(x, 5) - 3 * x + 2, 1e-14);
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_DOUBLE_EQ(parse("2^3^2").evaluate(0), 512.0);
  EXPECT_DOUBLE_EQ(parse("1 + 2 * 3").evaluate(0), 7.0);
  EXPECT_DOUBLE_EQ(parse("8 / 4 / 2").evaluate(0), 1.0);
  EXPECT_DOUBLE_EQ(parse("10 - 4 - 3").evaluate(0), 3.0);
  EXPECT_DOUBLE_EQ(parse("-2^2").evaluate(0), 4.0);
  EXPECT_DOUBLE_EQ(parse("-(2^2)").evaluate(0), -4.0);
  EXPECT_DOUBLE_EQ(parse("(1 + 2) * x").evaluate(2), 6.0);
  EXPECT_DOUBLE_EQ(parse("1.5e1").evaluate(0), 15.0);
}

TEST(Parse, Functions) {
  EXPECT_NEAR(parse("sqrt(x) + ln(x) + exp(0) + sin(0) + cos(0) + atan(1) + abs(-x)").evaluate(4),
              2 + std::log(4.0) + 1 + 0 + 1 + std::atan(1.0) + 4, 1e-15);
  EXPECT_EQ(known_functions().size(), 7u);
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  try {
    parse("1 + * 2");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse("(x + 1");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("2x"), SyntaxError);
  EXPECT_THROW(parse("1e999"), SyntaxError);
}

TEST(Parse, UnknownFunction) {
  try {
    parse("1 + foo(x)");
    FAIL() << "no error";
  } catch (const UnknownFunction& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.name(), "foo");
  }
  EXPECT_THROW(Expr::call("gamma", Expr::variable()), UnknownFunction);
  EXPECT_THROW(parse("y"), UnknownFunction);
}

TEST(Evaluate, Failures) {
  EXPECT_THROW(parse("1 / x").evaluate(0), EvaluationFailure);
  EXPECT_THROW(parse("ln(x)").evaluate(0), EvaluationFailure);
  EXPECT_THROW(parse("ln(x)").evaluate(-1), EvaluationFailure);
  EXPECT_THROW(parse("sqrt(x)").evaluate(-1), EvaluationFailure);
  EXPECT_THROW(parse("exp(x)").evaluate(1000), EvaluationFailure);
  EXPECT_DOUBLE_EQ(evaluate(parse("sqrt(x)"), 0), 0.0);
}

TEST(Print, ParsesBackToTheSameTree) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Expr e = random_tree(rng, 4);
    const std::string text = e.print();
    const Expr once = parse(text);
    EXPECT_TRUE(once == e) << text;
    EXPECT_TRUE(parse(once.print()) == once) << text;
    EXPECT_EQ(once.print(), text);
  }
}

TEST(Precedence, AgreesWithExplicitGrouping) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> value(0.5, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = value(rng);
    EXPECT_NEAR(parse("x+2*x^2").evaluate(x), parse("x+(2*(x^2))").evaluate(x), 1e-12);
    EXPECT_NEAR(parse("x-3-x/2").evaluate(x), parse("(x-3)-(x/2)").evaluate(x), 1e-12);
  }
}

TEST(FunctionObject, MatchesEvaluate) {
  const Expr e = parse("x^3/(x+2)");
  const RealFunction f = e.function_object();
  EXPECT_DOUBLE_EQ(f(1.5), e.evaluate(1.5));
}
