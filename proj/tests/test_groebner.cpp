#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/parse.hpp"

using namespace trdeg;
using testing_support::random_poly;
using testing_support::to_monomial;

namespace {

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(t, r));
  return out;
}

std::vector<std::string> printed(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& p : gb.polys()) out.push_back(p.to_string(gb.ring()->vars()));
  return out;
}

}  // namespace

TEST(Buchberger, Examples) {
  const RingPtr r = parse_ring("Poly(QQ; x,y)");
  const auto g = MonomialOrdering::grevlex();
  EXPECT_EQ(printed(buchberger(r, polys(r, {"x*y"}), g)), std::vector<std::string>{"x*y"});
  const auto mono = buchberger(r, polys(r, {"x^2", "x*y", "y^2"}), g);
  EXPECT_EQ(mono.polys().size(), 3u);
  const auto lin = buchberger(r, polys(r, {"x+y", "x-y"}), g);
  EXPECT_EQ(printed(lin), (std::vector<std::string>{"y", "x"}));
  EXPECT_THROW(buchberger(parse_ring("Poly(ZZ; x)"), polys(parse_ring("Poly(ZZ; x)"), {"x"}), g),
               UnsupportedConfiguration);
}

// Every basis from random generators satisfies the S-polynomial criterion,
// contains each original generator in its ideal, and is reduced and monic.
TEST(Buchberger, RandomBasesPassPostHocChecks) {
  std::mt19937_64 rng(13);
  const std::vector<MonomialOrdering> ords{MonomialOrdering::grevlex(), MonomialOrdering::lex(),
                                           MonomialOrdering::grlex({2, 1, 3})};
  for (const char* text : {"Poly(QQ; x,y,z)", "Poly(GF(7); x,y,z)", "Poly(GF(2); a,b,c)"}) {
    const RingPtr r = parse_ring(text);
    for (int i = 0; i < 40; ++i) {
      const auto& ord = ords[i % ords.size()];
      std::vector<Polynomial> gens;
      const std::size_t n = 1 + rng() % 3;
      while (gens.size() < n) {
        Polynomial p = random_poly(rng, r, 2, 3, 3);
        if (!p.is_zero()) gens.push_back(std::move(p));
      }
      const GroebnerBasis gb = buchberger(r, gens, ord);
      ASSERT_TRUE(s_polynomials_reduce_to_zero(gb)) << text;
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
      for (std::size_t a = 0; a < gb.polys().size(); ++a) {
        const Term& lt = gb.polys()[a].leading_term(ord);
        EXPECT_TRUE(lt.coeff.is_one());
        for (std::size_t b = 0; b < gb.polys().size(); ++b) {
          if (a == b) continue;
          for (const auto& t : gb.polys()[b].terms()) EXPECT_FALSE(lt.mono.divides(t.mono));
        }
      }
      // Lifted cofactors reproduce the basis.
      const LiftedBasis lifted = buchberger_lifted(r, gens, ord);
      for (std::size_t k = 0; k < lifted.basis.polys().size(); ++k) {
        Polynomial acc(r->coefficient_ring());
        for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + lifted.cofactors[k][j] * gens[j];
        EXPECT_EQ(acc, lifted.basis.polys()[k]);
      }
    }
  }
}

TEST(NormalForm, Examples) {
  const RingPtr r = parse_ring("Poly(QQ; x,y)");
  const auto g = MonomialOrdering::grevlex();
  const auto xy = buchberger(r, polys(r, {"x*y"}), g);
  EXPECT_EQ(normal_form(parse_poly("x", r), xy), parse_poly("x", r));
  EXPECT_TRUE(normal_form(parse_poly("x^2*y", r), xy).is_zero());
  const auto both = buchberger(r, polys(r, {"x", "y"}), g);
  EXPECT_TRUE(normal_form(parse_poly("x^2 + y", r), both).is_zero());
  // Idempotent, and f - NF(f) lies in the ideal.
  std::mt19937_64 rng(2);
  const auto gb = buchberger(r, polys(r, {"x^2 - y", "x*y - 1"}), g);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_poly(rng, r, 5, 5, 4);
    const Polynomial nf = normal_form(f, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_TRUE(normal_form(f - nf, gb).is_zero());
    for (const auto& t : nf.terms())
      for (const auto& lm : gb.leading_monomials()) EXPECT_FALSE(lm.divides(t.mono));
  }
  EXPECT_THROW(normal_form(parse_poly("x", parse_ring("Poly(GF(5); x,y)")), xy), RingMismatch);
}

TEST(Membership, OrderingAsymmetryIdeal) {
  const RingPtr r = parse_ring("Poly(GF(7); t1,t2)");
  const auto g = MonomialOrdering::grevlex();
  const auto gens = polys(r, {"t1^2*t2^2", "t1^3*t2"});
  EXPECT_FALSE(ideal_membership(r, parse_poly("t1^2*t2", r), gens, g));
  EXPECT_TRUE(ideal_membership(r, parse_poly("t1^2*t2^2", r), gens, g));
  EXPECT_TRUE(ideal_membership(r, Polynomial(r->coefficient_ring()), gens, g));
}

// For monomial ideals membership of a monomial is plain divisibility.
TEST(Membership, MonomialIdealsMatchDivisibility) {
  std::mt19937_64 rng(19);
  const RingPtr r = parse_ring("Poly(QQ; x1,x2,x3)");
  const RingPtr k = r->coefficient_ring();
  for (int i = 0; i < 300; ++i) {
    std::vector<Monomial> gens_m;
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < 1 + rng() % 4; ++j) {
      const Monomial m = to_monomial(oracle::random_dense(rng, 3, 4));
      gens_m.push_back(m);
      gens.push_back(Polynomial::term(m, k->one()));
    }
    const Monomial f = to_monomial(oracle::random_dense(rng, 3, 6));
    bool divisible = false;
    for (const auto& g : gens_m) divisible = divisible || g.divides(f);
    EXPECT_EQ(ideal_membership(r, Polynomial::term(f, k->one()), gens, MonomialOrdering::grevlex()),
              divisible);
  }
}

TEST(Membership, LiftReproducesTarget) {
  const RingPtr r = parse_ring("Poly(QQ; x,y)");
  const auto gens = polys(r, {"x+y", "x*y-1"});
  const Polynomial f = parse_poly("x^3 + y^3 + 3*x*y - 3", r);
  for (const auto& ord : {MonomialOrdering::grevlex(), MonomialOrdering::lex()}) {
    const auto lift = ideal_lift(r, f, gens, ord);
    if (!lift) {
      EXPECT_FALSE(ideal_membership(r, f, gens, ord));
      continue;
    }
    Polynomial acc(r->coefficient_ring());
    for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + (*lift)[j] * gens[j];
    EXPECT_EQ(acc, f);
  }
  EXPECT_FALSE(ideal_lift(r, parse_poly("x", r), gens, MonomialOrdering::grevlex()).has_value());
}

TEST(Staircase, Dimensions) {
  const auto g = MonomialOrdering::grevlex();
  const RingPtr r2 = parse_ring("Poly(QQ; x,y)");
  const RingPtr r3 = parse_ring("Poly(QQ; x,y,z)");
  EXPECT_EQ(staircase_dimension(r2, polys(r2, {"x*y"}), g), 1);
  EXPECT_EQ(staircase_dimension(r2, polys(r2, {"x^2", "x*y", "y^2"}), g), 0);
  EXPECT_EQ(staircase_dimension(r3, polys(r3, {"x*z", "y*z"}), g), 2);
  EXPECT_EQ(staircase_dimension(r2, polys(r2, {"1"}), g), -1);
  EXPECT_EQ(staircase_dimension(r3, {}, g), 3);
}

TEST(Staircase, AddingGeneratorsNeverRaisesDimension) {
  std::mt19937_64 rng(29);
  const RingPtr r = parse_ring("Poly(GF(5); a,b,c,d)");
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    int prev = staircase_dimension(r, gens, MonomialOrdering::grevlex());
    EXPECT_EQ(prev, 4);
    for (int k = 0; k < 3; ++k) {
      gens.push_back(random_poly(rng, r, 2, 3, 2));
      const int d = staircase_dimension(r, gens, MonomialOrdering::grevlex());
      EXPECT_LE(d, prev);
      // Dimension does not depend on the ordering used.
      EXPECT_EQ(d, staircase_dimension(r, gens, MonomialOrdering::lex()));
      prev = d;
    }
  }
}
