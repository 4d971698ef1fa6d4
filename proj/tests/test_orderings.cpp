#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "support.hpp"
#include "trdeg/dependence.hpp"
#include "trdeg/error.hpp"
#include "trdeg/ordering.hpp"
#include "trdeg/parse.hpp"

using namespace trdeg;
using oracle::Dense;
using testing_support::to_monomial;

namespace {

constexpr int kChecks = 10'000;
constexpr std::size_t kVars = 5;
constexpr unsigned kDeg = 8;

int sign(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

struct Family {
  std::string name;
  MonomialOrdering ord;
  std::function<int(const Dense&, const Dense&)> reference;
};

int matrix_reference(const Dense& a, const Dense& b, const std::vector<std::vector<long>>& rows) {
  for (const auto& r : rows) {
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const long w = i < r.size() ? r[i] : 0;
      sa += w * static_cast<long>(a[i]);
      sb += w * static_cast<long>(b[i]);
    }
    if (sa != sb) return sa > sb ? 1 : -1;
  }
  return oracle::lex(a, b);
}

std::vector<Family> families() {
  const std::vector<std::vector<long>> m{{1, 1, 1, 1, 1}, {0, 0, 0, 0, -1}, {0, 0, 0, -1, 0}};
  std::vector<std::vector<Rational>> mq;
  for (const auto& r : m) {
    mq.emplace_back();
    for (long x : r) mq.back().push_back(Rational(x));
  }
  return {
      {"lex", MonomialOrdering::lex(), oracle::lex},
      {"grlex", MonomialOrdering::grlex(), oracle::grlex},
      {"grevlex", MonomialOrdering::grevlex(), oracle::grevlex},
      {"wlex", MonomialOrdering::weighted_lex({Rational(2), Rational(3), Rational(1), Rational(5)}),
       [](const Dense& a, const Dense& b) { return oracle::weighted(a, b, {2, 3, 1, 5, 1}); }},
      {"matrix", MonomialOrdering::matrix(mq),
       [m](const Dense& a, const Dense& b) { return matrix_reference(a, b, m); }},
  };
}

class OrderingAxioms : public ::testing::TestWithParam<std::size_t> {};

}  // namespace

TEST_P(OrderingAxioms, RandomChecksAgainstReference) {
  const Family fam = families()[GetParam()];
  const auto& ord = fam.ord;
  std::mt19937_64 rng(1000 + GetParam());
  const Monomial one;
  for (int i = 0; i < kChecks; ++i) {
    const Dense a = oracle::random_dense(rng, kVars, kDeg);
    const Dense b = oracle::random_dense(rng, kVars, kDeg);
    const Dense c = oracle::random_dense(rng, kVars, kDeg);
    const Monomial s = to_monomial(a), t = to_monomial(b), u = to_monomial(c);
    const int st = sign(ord.compare(s, t));
    ASSERT_EQ(st, fam.reference(a, b)) << fam.name;
    // totality and antisymmetry
    ASSERT_EQ(sign(ord.compare(t, s)), -st);
    ASSERT_EQ(st == 0, s == t);
    // transitivity
    if (st <= 0 && sign(ord.compare(t, u)) <= 0) ASSERT_LE(sign(ord.compare(s, u)), 0);
    // global: 1 <= s, strict for s != 1
    ASSERT_EQ(sign(ord.compare(one, s)), s.is_one() ? 0 : -1);
    // multiplicative in both directions
    ASSERT_EQ(sign(ord.compare(u * s, u * t)), st);
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, OrderingAxioms, ::testing::Range<std::size_t>(0, 5));

TEST(Ordering, UnivariateAgreement) {
  for (const auto& fam : families()) {
    for (Exp i = 0; i < 10; ++i) {
      for (Exp j = 0; j < 10; ++j) {
        const Monomial a = i ? Monomial::variable(1, i) : Monomial{};
        const Monomial b = j ? Monomial::variable(1, j) : Monomial{};
        EXPECT_EQ(sign(fam.ord.compare(a, b)), i < j ? -1 : (i > j ? 1 : 0)) << fam.name;
      }
    }
  }
}

TEST(Ordering, PriorityPermutationMatchesRelabelledLex) {
  std::mt19937_64 rng(5);
  const auto ord = MonomialOrdering::lex({3, 1, 2});
  for (int i = 0; i < 2000; ++i) {
    const Dense a = oracle::random_dense(rng, 3, 6), b = oracle::random_dense(rng, 3, 6);
    const Dense pa{a[2], a[0], a[1]}, pb{b[2], b[0], b[1]};
    EXPECT_EQ(sign(ord.compare(to_monomial(a), to_monomial(b))), oracle::lex(pa, pb));
  }
}

TEST(Ordering, CompareExamples) {
  const Monomial x1 = Monomial::variable(1), x2 = Monomial::variable(2);
  EXPECT_TRUE(MonomialOrdering::lex({1, 2}).compare(x1, Monomial::variable(2, 2)) > 0);
  EXPECT_TRUE(MonomialOrdering::grevlex().compare(x1 * x2, Monomial::variable(1, 3)) < 0);
  EXPECT_TRUE(MonomialOrdering::lex({2, 1}).compare(x1, x2) < 0);
}

TEST(Ordering, ParseRoundTrip) {
  for (const char* text : {"lex", "lex:x2>x1", "grlex", "grevlex", "grevlex:x3>x1>x2", "wlex:2,3",
                           "wlex:1/2,3:x2>x1", "matrix:[[1,1],[1,0]]"}) {
    const auto ord = MonomialOrdering::parse(text);
    EXPECT_EQ(MonomialOrdering::parse(ord.to_string()), ord) << text;
  }
  const std::vector<std::string> names{"t1", "t2"};
  EXPECT_EQ(MonomialOrdering::parse("lex:t2>t1", names), MonomialOrdering::lex({2, 1}));
  EXPECT_THROW(MonomialOrdering::parse("matrix:[[1,-1],[0,1]]"), Error);
  EXPECT_THROW(MonomialOrdering::parse("wlex:0,1"), Error);
  EXPECT_THROW(MonomialOrdering::parse("revlex"), Error);
}

TEST(Ordering, IsSubmonic) {
  const RingPtr zx = parse_ring("Poly(ZZ; x1,x2)");
  const RingPtr zx1 = parse_ring("Poly(ZZ; x)");
  const auto lex12 = MonomialOrdering::lex({1, 2});
  const auto lex21 = MonomialOrdering::lex({2, 1});
  for (int n = 0; n < 5; ++n) {
    const std::string f = "x2^" + std::to_string(n) + " - 5*x1 - 7*x2^" + std::to_string(n + 1);
    EXPECT_TRUE(is_submonic(parse_poly(f, zx), lex12)) << f;
  }
  for (const auto& ord : families()) {
    EXPECT_TRUE(is_submonic(parse_poly("1 - x*(2*x^3 - x + 9)", zx1), ord.ord)) << ord.name;
  }
  EXPECT_TRUE(is_submonic(parse_poly("2*x1 + x2", zx), lex12));
  EXPECT_FALSE(is_submonic(parse_poly("2*x1 + x2", zx), lex21));
  EXPECT_FALSE(is_submonic(Polynomial(Ring::integers()), lex12));
}

namespace {

std::vector<Monomial> to_monomials(const std::vector<Dense>& ds) {
  std::vector<Monomial> out;
  for (const auto& d : ds) out.push_back(to_monomial(d));
  return out;
}

}  // namespace

TEST(Weights, Examples) {
  const auto grevlex = MonomialOrdering::grevlex();
  const auto a = to_monomials({{3, 0}, {0, 3}});
  EXPECT_EQ(separating_weights(to_monomial({1, 1}), a, grevlex).to_string(), "(1,1)");
  const auto b = to_monomials({{1, 0}});
  EXPECT_EQ(separating_weights(to_monomial({0, 2}), b, MonomialOrdering::lex({1, 2})).to_string(),
            "(3,1)");
  for (const auto& fam : families()) {
    EXPECT_THROW(separating_weights(to_monomial({2, 0}), b, fam.ord), PreconditionViolation);
  }
}

// The chosen vector is the brute-force minimum (smallest max entry, then lex).
TEST(Weights, MatchesBruteForceMinimum) {
  std::mt19937_64 rng(21);
  const auto fams = families();
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto& fam = fams[i % fams.size()];
    const std::size_t nv = 1 + rng() % 3;
    const Dense t = oracle::random_dense(rng, nv, 4);
    std::vector<Dense> above;
    for (int k = 0; k < 40 && above.size() < 3; ++k) {
      Dense m = oracle::random_dense(rng, nv, 4);
      if (fam.reference(m, t) > 0) above.push_back(m);
    }
    if (above.empty()) continue;
    const auto w = separating_weights(to_monomial(t), to_monomials(above), fam.ord);
    const auto expected = oracle::min_separating_weights(t, above, 40);
    ASSERT_TRUE(expected.has_value());
    // Library weights cover the largest mentioned variable; pad the oracle's.
    std::vector<long> got;
    for (const auto& x : w.w) got.push_back(x.get_si());
    std::vector<long> want = *expected;
    want.resize(got.size(), 1);
    ASSERT_LE(got.size(), nv);
    EXPECT_EQ(got, std::vector<long>(want.begin(), want.begin() + got.size()))
        << fam.name << " trailing " << to_monomial(t).to_string();
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Weights, WeightGraded) {
  EXPECT_EQ(is_weight_graded(MonomialOrdering::grevlex(), 3)->to_string(), "(1,1,1)");
  EXPECT_EQ(is_weight_graded(MonomialOrdering::grlex(), 2)->to_string(), "(1,1)");
  EXPECT_FALSE(is_weight_graded(MonomialOrdering::lex(), 2).has_value());
  EXPECT_EQ(
      is_weight_graded(MonomialOrdering::weighted_lex({Rational(2), Rational(3)}), 2)->to_string(),
      "(2,3)");
  EXPECT_FALSE(is_weight_graded(MonomialOrdering::parse("matrix:[[1,0],[0,1]]"), 2).has_value());
  EXPECT_EQ(is_weight_graded(MonomialOrdering::parse("matrix:[[1,2],[1,0]]"), 2)->to_string(),
            "(1,2)");
}

TEST(Weights, GradedWeightsAreMonotone) {
  std::mt19937_64 rng(8);
  for (const auto& fam : families()) {
    const auto w = is_weight_graded(fam.ord, kVars);
    if (!w) continue;
    for (int i = 0; i < 2000; ++i) {
      const Monomial s = to_monomial(oracle::random_dense(rng, kVars, kDeg));
      const Monomial t = to_monomial(oracle::random_dense(rng, kVars, kDeg));
      if (fam.ord.compare(s, t) <= 0) EXPECT_LE(w->weight(s), w->weight(t)) << fam.name;
    }
  }
}
