#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "uqring/errors.hpp"
#include "uqring/expr.hpp"

using namespace uqring;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_ring(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return 0;
}

GroupExpr random_group(std::mt19937_64& rng, int depth) {
  GroupExpr g;
  switch (rng() % (depth > 0 ? 4 : 3)) {
    case 0: g.head = "D4"; break;
    case 1: g.head = "Q8"; break;
    case 2:
      g.head = "C";
      g.order = 1 + rng() % 9;
      break;
    default:
      g.head = "prod";
      g.parts = {random_group(rng, depth - 1), random_group(rng, depth - 1)};
  }
  return g;
}

RingExpr random_ring(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> leaves = {"F2", "Zmod", "@"};
  static const std::vector<std::string> inner = {"M",       "T",     "product", "trivext", "polyq", "groupring",
                                                 "corner",  "quot",  "A",       "B",       "C",     "S",
                                                 "Tnm",     "U",     "formal"};
  auto num = [&] { return static_cast<std::size_t>(rng() % 20); };
  RingExpr e;
  if (depth == 0 || rng() % 3 == 0) {
    e.head = leaves[rng() % leaves.size()];
    if (e.head == "Zmod") e.ints = {num()};
    if (e.head == "@") e.word = "tables/r" + std::to_string(num()) + ".json";
    return e;
  }
  e.head = inner[rng() % inner.size()];
  auto sub = [&] { return random_ring(rng, depth - 1); };
  const std::string& h = e.head;
  if (h == "M" || h == "T" || h == "C" || h == "U") {
    e.ints = {num()};
    e.rings = {sub()};
  } else if (h == "A" || h == "B" || h == "S" || h == "Tnm") {
    e.ints = {num(), num()};
    e.rings = {sub()};
  } else if (h == "product") {
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) e.rings.push_back(sub());
  } else if (h == "trivext") {
    e.rings = {sub()};
  } else if (h == "polyq" || h == "corner") {
    e.rings = {sub()};
    e.ints = {num()};
  } else if (h == "groupring") {
    e.rings = {sub()};
    e.groups = {random_group(rng, 2)};
  } else if (h == "quot") {
    e.rings = {sub()};
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) e.ints.push_back(num());
  } else {
    e.rings = {sub(), sub()};
    e.word = rng() % 2 ? "regular" : "zero";
  }
  return e;
}

}  // namespace

TEST(Expr, EvaluatesExamples) {
  EXPECT_EQ(evaluate("T(3, Zmod(2))")->size(), 64u);
  EXPECT_EQ(evaluate("groupring(F2, C(3))")->size(), 8u);
  EXPECT_EQ(evaluate("groupring(F2, prod(C(2), C(2)))")->size(), 16u);
  EXPECT_EQ(evaluate("groupring(F2, Q8)")->size(), 256u);
  EXPECT_EQ(evaluate("quot(Zmod(8), ideal(4))")->size(), 4u);
  EXPECT_EQ(evaluate("formal(F2, Zmod(3), zero)")->size(), 6u);
  EXPECT_EQ(evaluate("Tnm(2, 2, F2)")->size(), 8u);
  EXPECT_EQ(evaluate(" product( F2 ,Zmod(4) ) ")->size(), 8u);
}

TEST(Expr, LabelsMatchCanonicalPrint) {
  for (const char* e : {"F2", "Zmod(6)", "M(2, F2)", "T(3, Zmod(4))", "product(F2, Zmod(4))", "trivext(F2)",
                        "polyq(F2, 3)", "groupring(F2, C(3))", "groupring(F2, prod(C(2), C(2)))", "groupring(F2, D4)",
                        "A(2, 2, F2)", "B(2, 3, F2)", "C(4, F2)", "S(2, 2, F2)", "Tnm(2, 2, F2)", "U(4, F2)",
                        "formal(F2, F2, regular)", "quot(Zmod(8), ideal(4))"}) {
    EXPECT_EQ(print(parse_ring(e)), e);
    EXPECT_EQ(evaluate(e)->label(), e);
  }
}

TEST(Expr, F2IsSugarForZmod2) {
  EXPECT_EQ(evaluate("Zmod(2)")->label(), evaluate("F2")->label());
}

TEST(Expr, ParseErrorsCarryPositions) {
  EXPECT_EQ(parse_error_position("M(2, Zmod(2)"), 12u);
  EXPECT_EQ(parse_error_position("Foo(2)"), 0u);
  EXPECT_EQ(parse_error_position("M(x, F2)"), 2u);
  EXPECT_EQ(parse_error_position("F2 extra"), 3u);
  EXPECT_EQ(parse_error_position("formal(F2, F2, left)"), 15u);
  EXPECT_EQ(parse_error_position("groupring(F2, Z(3))"), 14u);
  EXPECT_EQ(parse_error_position(""), 0u);
}

TEST(Expr, EvaluationErrors) {
  EXPECT_THROW(evaluate("corner(M(2, F2), 99)"), InvalidArgument);
  EXPECT_THROW(evaluate("Zmod(1)"), ZeroRing);
  EXPECT_THROW(evaluate("quot(Zmod(8), ideal(40))"), InvalidArgument);
  EXPECT_THROW(evaluate("M(3, Zmod(4))"), SizeCapExceeded);
  EXPECT_THROW(evaluate("formal(F2, Zmod(3), regular)"), InvalidArgument);
  const auto m2 = evaluate("M(2, F2)");
  Index nonidempotent = 0;
  while (m2->mul(nonidempotent, nonidempotent) == nonidempotent) ++nonidempotent;
  EXPECT_THROW(evaluate("corner(M(2, F2), " + std::to_string(nonidempotent) + ")"), NotIdempotent);
}

TEST(Expr, PrintParseRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const RingExpr e = random_ring(rng, 3);
    const std::string text = print(e);
    ASSERT_EQ(parse_ring(text), e) << text;
  }
  for (int i = 0; i < 200; ++i) {
    const GroupExpr g = random_group(rng, 3);
    ASSERT_EQ(parse_group(print(g)), g) << print(g);
  }
}

TEST(Expr, JsonImport) {
  const auto path = std::filesystem::temp_directory_path() / "uqring_z4.json";
  {
    std::ofstream f(path);
    f << R"({"size": 4, "zero": 0, "one": 1,
             "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
             "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]]})";
  }
  const Ring r = evaluate("@" + path.string());
  EXPECT_EQ(r->size(), 4u);
  EXPECT_EQ(evaluate("product(@" + path.string() + ", F2)")->size(), 8u);
  {
    std::ofstream f(path);
    f << R"({"size": 2, "zero": 0, "one": 1, "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]]})";
  }
  EXPECT_THROW(evaluate("@" + path.string()), AxiomViolation);
  {
    std::ofstream f(path);
    f << R"({"size": 2, "zero": 0, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]})";
  }
  EXPECT_THROW(evaluate("@" + path.string()), ImportError);
  std::filesystem::remove(path);
  EXPECT_THROW(evaluate("@" + path.string()), ImportError);
}
