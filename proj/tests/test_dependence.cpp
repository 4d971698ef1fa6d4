#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "trdeg/dependence.hpp"
#include "trdeg/error.hpp"
#include "trdeg/parse.hpp"

using namespace trdeg;

namespace {

AlgebraConfig self(const char* ring) {
  const RingPtr r = parse_ring(ring);
  return AlgebraConfig::make(r, r);
}

std::vector<Element> elems(const AlgebraConfig& c, const char* text) {
  return parse_element_list(text, c.algebra);
}

// Polynomial over R in x1..xn, read through a Poly ring over R.
Polynomial relation(const AlgebraConfig& c, const char* text, std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return parse_poly(text, Ring::poly(c.coeffs, vars));
}

SubmonicCertificate make_cert(const AlgebraConfig& c, std::vector<Element> e,
                              MonomialOrdering ord, Polynomial f) {
  SubmonicCertificate cert{c, std::move(e), ord, f, Monomial{}, 0, false};
  if (!f.is_zero()) cert.trailing = f.trailing_term(ord).mono;
  cert.degree_bound = static_cast<unsigned>(f.is_zero() ? 0 : f.total_degree());
  return cert;
}

// Minimal n with b^n in (a, b^(n+1)) by brute force over gcds.
unsigned minimal_pid_n(long a, long b) {
  mpz_class bn = 1;
  for (unsigned n = 0;; ++n) {
    const mpz_class next = bn * b;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(a).get_mpz_t(), next.get_mpz_t());
    if (mpz_divisible_p(bn.get_mpz_t(), g.get_mpz_t())) return n;
    bn = next;
  }
}

}  // namespace

TEST(Config, SupportedTable) {
  EXPECT_EQ(self("ZZ").letter(), 'a');
  EXPECT_EQ(self("Zmod(6)").letter(), 'b');
  EXPECT_EQ(AlgebraConfig::make(Ring::integers(), parse_ring("Poly(ZZ; x)")).letter(), 'c');
  EXPECT_EQ(AlgebraConfig::make(Ring::integers(), Ring::zmod(6)).letter(), 'c');
  EXPECT_EQ(self("Poly(GF(7); t1,t2)").letter(), 'd');
  EXPECT_EQ(self("Quot(Poly(QQ; x,y); [x*y])").letter(), 'd');
  EXPECT_EQ(AlgebraConfig::make(Ring::rationals(), parse_ring("Poly(QQ; x)")).letter(), 'e');
  EXPECT_EQ(self("GF(5)").letter(), 'f');
  EXPECT_THROW(AlgebraConfig::make(Ring::rationals(), Ring::integers()), UnsupportedConfiguration);
  EXPECT_THROW(AlgebraConfig::make(Ring::integers(), parse_ring("Poly(QQ; x)")),
               UnsupportedConfiguration);
  EXPECT_THROW(self("Poly(ZZ; x)"), UnsupportedConfiguration);
}

TEST(Search, IntegerPairTwelveEighteen) {
  const auto c = self("ZZ");
  const auto v = search_submonic_relation(c, elems(c, "12,18"), MonomialOrdering::lex({1, 2}), 3);
  ASSERT_TRUE(v.dependent());
  EXPECT_EQ(v.certificate->poly, relation(c, "x2^2 - 27*x1", 2));
  EXPECT_TRUE(v.certificate->verified);
  EXPECT_TRUE(verify_certificate(*v.certificate).ok);
}

TEST(Search, OrderingAsymmetry) {
  const auto c = self("Poly(GF(7); t1,t2)");
  const auto e = elems(c, "t1, t1*t2");
  const auto lex12 = MonomialOrdering::lex({1, 2});
  const auto lex21 = MonomialOrdering::lex({2, 1});
  const auto dep = search_submonic_relation(c, e, lex12, 1);
  ASSERT_TRUE(dep.dependent());
  // b - t2 * a
  EXPECT_EQ(dep.certificate->poly, relation(c, "x2 - t2*x1", 2));
  const auto none = search_submonic_relation(c, e, lex21, 4);
  EXPECT_EQ(none.kind, VerdictKind::NoRelationUpTo);
  EXPECT_EQ(none.degree_bound, 4u);
  EXPECT_FALSE(none.certificate.has_value());
}

TEST(Search, ResidueTwoModSix) {
  const auto c = self("Zmod(6)");
  const auto e = elems(c, "2");
  // x - x^3 is one valid answer; the search returns the first relation with
  // the least trailing monomial, so only the trailing monomial x is pinned.
  EXPECT_TRUE(verify_certificate(
                  make_cert(c, e, MonomialOrdering::lex(), relation(c, "x1 - x1^3", 1)))
                  .ok);
  for (const auto& ord : {MonomialOrdering::lex(), MonomialOrdering::grevlex()}) {
    const auto v = search_submonic_relation(c, e, ord, 3);
    ASSERT_TRUE(v.dependent());
    EXPECT_EQ(v.certificate->trailing, Monomial::variable(1));
    EXPECT_TRUE(verify_certificate(*v.certificate).ok);
    EXPECT_LE(v.certificate->poly.total_degree(), 3u);
  }
}

TEST(Search, TwoIsIndependentUpToSix) {
  const auto c = self("ZZ");
  for (const auto& ord : {MonomialOrdering::lex(), MonomialOrdering::grevlex()}) {
    const auto v = search_submonic_relation(c, elems(c, "2"), ord, 6);
    EXPECT_EQ(v.kind, VerdictKind::NoRelationUpTo);
    EXPECT_EQ(v.degree_bound, 6u);
  }
}

TEST(Search, UnitsAndZeroInDomains) {
  const auto c = self("ZZ");
  for (long a = -6; a <= 6; ++a) {
    const std::vector<Element> e{c.algebra->from_integer(a)};
    const bool expected = a >= -1 && a <= 1;
    EXPECT_EQ(search_submonic_relation(c, e, MonomialOrdering::lex(), 4).dependent(), expected)
        << a;
  }
  const auto p = self("Poly(GF(7); t)");
  for (const char* text : {"0", "1", "3", "6"}) {
    EXPECT_TRUE(search_submonic_relation(p, elems(p, text), MonomialOrdering::lex(), 2).dependent())
        << text;
  }
  for (const char* text : {"t", "t + 1", "2*t^2"}) {
    EXPECT_FALSE(
        search_submonic_relation(p, elems(p, text), MonomialOrdering::lex(), 4).dependent())
        << text;
  }
}

TEST(Search, BoundedCompletenessIsMonotone) {
  std::mt19937_64 rng(3);
  const RingPtr zx = parse_ring("Poly(ZZ; x)");
  const AlgebraConfig c = AlgebraConfig::make(Ring::integers(), zx);
  int dependent = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<Element> e;
    for (int k = 0; k < 2; ++k) {
      const long a = static_cast<long>(rng() % 7) - 3, b = static_cast<long>(rng() % 7) - 3;
      e.push_back(parse_element(std::to_string(a) + "*x + (" + std::to_string(b) + ")", zx));
    }
    bool seen = false;
    for (unsigned d = 0; d <= 4; ++d) {
      const auto v = search_submonic_relation(c, e, MonomialOrdering::grevlex(), d);
      if (seen) EXPECT_TRUE(v.dependent()) << "lost relation at D=" << d;
      if (v.dependent()) EXPECT_TRUE(verify_certificate(*v.certificate).ok);
      seen = seen || v.dependent();
    }
    dependent += seen;
  }
  EXPECT_GT(dependent, 0);
}

TEST(Search, IntegerCoefficientsIntoResidues) {
  const AlgebraConfig c = AlgebraConfig::make(Ring::integers(), Ring::zmod(10));
  const auto v =
      search_submonic_relation(c, parse_element_list("4", c.algebra), MonomialOrdering::lex(), 4);
  ASSERT_TRUE(v.dependent());
  EXPECT_TRUE(verify_certificate(*v.certificate).ok);
}

TEST(Search, QuotientAndFieldConfigs) {
  const auto q = self("Quot(Poly(QQ; x,y); [x*y])");
  EXPECT_FALSE(search_submonic_relation(q, elems(q, "x"), MonomialOrdering::lex(), 3).dependent());
  const auto pair = search_submonic_relation(q, elems(q, "x, y"), MonomialOrdering::lex(), 3);
  ASSERT_TRUE(pair.dependent());
  EXPECT_TRUE(verify_certificate(*pair.certificate).ok);

  const AlgebraConfig e = AlgebraConfig::make(Ring::rationals(), parse_ring("Poly(QQ; x)"));
  const auto v = search_submonic_relation(e, parse_element_list("x, x^2 + 1", e.algebra),
                                          MonomialOrdering::grevlex(), 2);
  ASSERT_TRUE(v.dependent());
  EXPECT_TRUE(verify_certificate(*v.certificate).ok);
}

TEST(Search, ResourceCapIsReportedDistinctly) {
  const auto c = self("ZZ");
  const auto v = search_submonic_relation(c, elems(c, "2, 3, 5"), MonomialOrdering::lex(), 10,
                                          SearchOptions{50});
  EXPECT_EQ(v.kind, VerdictKind::ResourceExceeded);
  EXPECT_EQ(to_string(v.kind), "resource_exceeded");
}

TEST(Verify, ReasonCodes) {
  const auto c = self("Poly(GF(7); t1,t2)");
  const auto e = elems(c, "t1, t1*t2");
  const Polynomial f = relation(c, "x2 - t2*x1", 2);
  EXPECT_TRUE(verify_certificate(make_cert(c, e, MonomialOrdering::lex({1, 2}), f)).ok);
  const auto flipped = verify_certificate(make_cert(c, e, MonomialOrdering::lex({2, 1}), f));
  EXPECT_FALSE(flipped.ok);
  EXPECT_EQ(flipped.reason, "not_submonic");
  const auto zero =
      verify_certificate(make_cert(c, e, MonomialOrdering::lex(), Polynomial(c.coeffs)));
  EXPECT_FALSE(zero.ok);
  EXPECT_EQ(zero.reason, "zero_polynomial");
  auto wrong = make_cert(c, e, MonomialOrdering::lex({1, 2}), relation(c, "x2 - t1*x1", 2));
  EXPECT_EQ(verify_certificate(wrong).reason, "nonvanishing");
  auto trailing = make_cert(c, e, MonomialOrdering::lex({1, 2}), f);
  trailing.trailing = Monomial::variable(1);
  EXPECT_EQ(verify_certificate(trailing).reason, "trailing_mismatch");
  auto arity = make_cert(c, {e[0]}, MonomialOrdering::lex({1, 2}), f);
  EXPECT_EQ(verify_certificate(arity).reason, "arity");
}

TEST(Pid, Examples) {
  const auto c = self("ZZ");
  const auto a = pid_pair_certificate(12, 18);
  EXPECT_EQ(a.poly, relation(c, "x2^2 - 27*x1", 2));
  const auto b = pid_pair_certificate(4, 6);
  EXPECT_EQ(b.poly, relation(c, "x2^2 - 9*x1", 2));
  for (long v : {1, 5, -7}) {
    const auto u = pid_pair_certificate(1, v);
    EXPECT_EQ(u.poly, relation(c, "1 - x1", 2)) << v;
    EXPECT_TRUE(verify_certificate(u).ok);
  }
  EXPECT_THROW(pid_pair_certificate(0, 3), PreconditionViolation);
  EXPECT_THROW(pid_pair_certificate(3, 0), PreconditionViolation);
}

// pid certificates have the documented shape with minimal n, and generic lex
// search lands on the same trailing monomial x2^n.
TEST(Pid, AgreesWithBruteForceAndGenericSearch) {
  const auto c = self("ZZ");
  const auto lex = MonomialOrdering::lex({1, 2});
  for (long a = -12; a <= 12; a += 1) {
    for (long b = -12; b <= 12; b += 1) {
      if (a == 0 || b == 0) continue;
      const auto cert = pid_pair_certificate(a, b);
      ASSERT_TRUE(verify_certificate(cert).ok) << a << "," << b;
      const unsigned n = minimal_pid_n(a, b);
      EXPECT_EQ(cert.trailing, n ? Monomial::variable(2, n) : Monomial{}) << a << "," << b;
      const auto v = search_submonic_relation(c, elems(c, (std::to_string(a) + "," +
                                                           std::to_string(b)).c_str()),
                                              lex, n + 1);
      ASSERT_TRUE(v.dependent());
      EXPECT_EQ(v.certificate->trailing, cert.trailing) << a << "," << b;
    }
  }
}

TEST(Matrix, IntegerPool) {
  const auto c = self("ZZ");
  const auto pool = elems(c, "2,3,4,5,6,7,8,9,10");
  const auto m = dependence_matrix(c, pool, 2, MonomialOrdering::lex(), 4);
  EXPECT_EQ(m.tuples.size(), 36u);
  EXPECT_EQ(m.dependent, 36u);
  EXPECT_TRUE(m.candidates.empty());
  for (const auto& t : m.tuples) EXPECT_TRUE(verify_certificate(*t.verdict.certificate).ok);
}

TEST(Matrix, FiniteRingAndCandidates) {
  const auto z12 = self("Zmod(12)");
  const auto all =
      dependence_matrix(z12, elems(z12, "0,1,2,3,4,5,6,7,8,9,10,11"), 1, MonomialOrdering::lex(), 13);
  EXPECT_EQ(all.dependent, 12u);
  const auto zz = self("ZZ");
  const auto two = dependence_matrix(zz, elems(zz, "2"), 1, MonomialOrdering::lex(), 6);
  EXPECT_EQ(two.no_relation, 1u);
  ASSERT_EQ(two.candidates.size(), 1u);
  EXPECT_EQ(two.candidates[0], 0u);
}

TEST(Matrix, SerialMatchesParallel) {
  const auto c = self("Poly(GF(5); t)");
  const auto pool = elems(c, "t, t^2, t+1, 2, t^3 - t, 0");
  const auto ord = MonomialOrdering::grevlex();
  const auto p = dependence_matrix(c, pool, 2, ord, 3, {}, Execution::Parallel);
  const auto s = dependence_matrix(c, pool, 2, ord, 3, {}, Execution::Serial);
  ASSERT_EQ(p.tuples.size(), s.tuples.size());
  for (std::size_t i = 0; i < p.tuples.size(); ++i) {
    EXPECT_EQ(p.tuples[i].indices, s.tuples[i].indices);
    EXPECT_EQ(p.tuples[i].verdict.kind, s.tuples[i].verdict.kind);
    if (p.tuples[i].verdict.certificate)
      EXPECT_EQ(p.tuples[i].verdict.certificate->poly, s.tuples[i].verdict.certificate->poly);
  }
  EXPECT_EQ(p.candidates, s.candidates);
}

TEST(Matrix, Combinations) {
  EXPECT_EQ(combinations(4, 2).size(), 6u);
  EXPECT_EQ(combinations(3, 0).size(), 1u);
  EXPECT_TRUE(combinations(2, 3).empty());
  EXPECT_EQ(combinations(4, 2).front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(combinations(4, 2).back(), (std::vector<std::size_t>{2, 3}));
}
