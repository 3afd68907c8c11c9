#include "sumsym/ordered_group.hpp"

#include "sumsym/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace sumsym {
namespace {

using testing::Rng;
using testing::uniform;

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

TEST(OrderedGroupTest, AddExamples) {
  EXPECT_EQ(add(Scalar(Integer{}), Scalar(Integer(7))), Scalar(Integer(7)));
  EXPECT_EQ(add(Scalar(q(1, 3)), Scalar(q(1, 6))), Scalar(q(1, 2)));
  EXPECT_EQ(add(Scalar(LexPair{1, -5}), Scalar(LexPair{0, 5})), Scalar(LexPair{1, 0}));
}

TEST(OrderedGroupTest, SubExamples) {
  const Scalar x = LexPair{3, -2};
  EXPECT_EQ(sub(x, x), zero(Domain::kLexPair));
  EXPECT_EQ(sub(Scalar(q(1, 2)), Scalar(q(1, 3))), Scalar(q(1, 6)));
  EXPECT_EQ(sub(Scalar(LexPair{1, 0}), Scalar(LexPair{0, 99})), Scalar(LexPair{1, -99}));
}

TEST(OrderedGroupTest, CompareExamples) {
  EXPECT_EQ(compare(Scalar(Integer{}), Scalar(Integer{})), std::strong_ordering::equal);
  EXPECT_EQ(compare(Scalar(LexPair{0, 1000}), Scalar(LexPair{1, -1000})), std::strong_ordering::less);
  EXPECT_EQ(compare(Scalar(q(2, 4)), Scalar(q(1, 2))), std::strong_ordering::equal);
}

TEST(OrderedGroupTest, MixedDomainsAreRejected) {
  EXPECT_THROW(add(Scalar(Integer(1)), Scalar(q(1, 2))), DomainMismatch);
  EXPECT_THROW(sub(Scalar(LexPair{}), Scalar(Integer(1))), DomainMismatch);
  EXPECT_THROW(compare(Scalar(q(1, 2)), Scalar(LexPair{})), DomainMismatch);
}

TEST(OrderedGroupTest, RationalIsCanonical) {
  const Rational r = q(6, -4);
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(q(4, 2).str(), "2");
  EXPECT_THROW(q(1, 0), InvalidArgument);
}

TEST(OrderedGroupTest, LexicographicOrder) {
  EXPECT_LT((LexPair{0, 1000}), (LexPair{1, -1000}));
  EXPECT_LT((LexPair{1, -1}), (LexPair{1, 0}));
  EXPECT_GT((LexPair{0, 1}), LexPair{});
  // Non-Archimedean: no multiple of (0,1) reaches (1,0).
  LexPair small{0, 1};
  LexPair acc{};
  for (int k = 0; k < 1000; ++k) acc += small;
  EXPECT_LT(acc, (LexPair{1, 0}));
}

TEST(OrderedGroupTest, ArbitraryPrecision) {
  Integer big = Integer::parse("123456789012345678901234567890");
  EXPECT_EQ((big + big - big).str(), "123456789012345678901234567890");
  EXPECT_EQ((big * big).str(), "15241578753238836750495351562536198787501905199875019052100");
}

TEST(OrderedGroupTest, StrictLiteralGrammar) {
  EXPECT_EQ(Integer::parse("-12").str(), "-12");
  EXPECT_EQ(Integer::parse("0").str(), "0");
  for (const char* bad : {"", "-", "+1", "01", "-0", "1.0", "1e3", " 1", "1 ", "0x1", "1/2"}) {
    EXPECT_THROW(Integer::parse(bad), ParseError) << bad;
  }

  EXPECT_EQ(Rational::parse("3/2"), q(3, 2));
  EXPECT_EQ(Rational::parse("-7"), q(-7, 1));
  EXPECT_EQ(Rational::parse("5/1"), q(5, 1));
  for (const char* bad : {"2/4", "0/5", "1/0", "1/-2", "-1/-2", "1.5", "1/2/3", "/2", "1/", "0.5", "nan"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }

  EXPECT_EQ(LexPair::parse("(1,-5)"), (LexPair{1, -5}));
  for (const char* bad : {"(1, 2)", "1,2", "(1,2", "(1,2,3)", "(1)", "()", "(1,2)x", "(a,b)", "(01,2)"}) {
    EXPECT_THROW(LexPair::parse(bad), ParseError) << bad;
  }
}

TEST(OrderedGroupTest, TextRoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar values[] = {
        Integer(uniform(rng, -1000000, 1000000)),
        testing::random_rational(rng, 1000, 1000, true),
        LexPair{uniform(rng, -50, 50), uniform(rng, -50, 50)},
    };
    for (const auto& v : values) EXPECT_EQ(parse_scalar(to_string(v), domain_of(v)), v);
  }
}

TEST(OrderedGroupTest, DomainNames) {
  for (Domain d : {Domain::kInteger, Domain::kRational, Domain::kLexPair}) {
    EXPECT_EQ(parse_domain(domain_name(d)), d);
  }
  EXPECT_THROW(parse_domain("real"), ParseError);
}

// Group axioms and order compatibility on random triples, per domain.
template <typename G, typename Gen>
void check_group_properties(Gen gen) {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const G a = gen(rng);
    const G b = gen(rng);
    const G c = gen(rng);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + G{}, a);
    EXPECT_EQ(a + (-a), G{});
    if (a > b) EXPECT_GT(a + c, b + c);
    EXPECT_EQ(a >= b, a - b >= G{});
  }
}

TEST(OrderedGroupTest, IntegerGroupProperties) {
  check_group_properties<Integer>([](Rng& r) { return Integer(uniform(r, -100, 100)); });
}

TEST(OrderedGroupTest, RationalGroupProperties) {
  check_group_properties<Rational>([](Rng& r) { return testing::random_rational(r, 20, 12, true); });
}

TEST(OrderedGroupTest, LexPairGroupProperties) {
  check_group_properties<LexPair>([](Rng& r) { return LexPair{uniform(r, -3, 3), uniform(r, -100, 100)}; });
}

TEST(OrderedGroupTest, MinimumIsUnique) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Scalar> xs;
    for (int k = 0; k < 8; ++k) xs.emplace_back(LexPair{uniform(rng, -2, 2), uniform(rng, -5, 5)});
    const auto m = *std::min_element(xs.begin(), xs.end(), [](const Scalar& a, const Scalar& b) {
      return compare(a, b) == std::strong_ordering::less;
    });
    for (const auto& x : xs) EXPECT_NE(compare(m, x), std::strong_ordering::greater);
  }
}

}  // namespace
}  // namespace sumsym
