// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "../support.hpp"
#include "trdeg/coquand_lombardi.hpp"
#include "trdeg/dependence.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/harness.hpp"
#include "trdeg/linalg.hpp"
#include "trdeg/parse.hpp"
#include "trdeg/serialize.hpp"

using namespace trdeg;
using testing_support::to_monomial;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

// Every Coquand-Lombardi certificate produced by criteria 1-3.
std::vector<ClCertificate> g_cl_certificates;

std::string str(long v) { return std::to_string(v); }

void finite_rings(Check& c) {
  const auto lex = MonomialOrdering::lex();
  for (long n = 2; n <= 30; ++n) {
    const RingPtr r = Ring::zmod(n);
    const AlgebraConfig config = AlgebraConfig::make(r, r);
    for (long a = 0; a < n; ++a) {
      const std::vector<Element> e{r->from_integer(a)};
      const auto v = search_submonic_relation(config, e, lex, static_cast<unsigned>(n + 1));
      c.expect(v.dependent() && verify_certificate(*v.certificate).ok,
               "no singleton certificate for " + str(a) + " in Z/" + str(n));
    }
    const auto fd = finite_ring_dim_lt(r, 1);
    c.expect(fd.holds && fd.witnesses.size() == static_cast<std::size_t>(n) &&
                 fd.tuples == static_cast<std::uint64_t>(n),
             "finite_ring_dim_lt(Z/" + str(n) + ", 1) incomplete");
    for (const auto& w : fd.witnesses) g_cl_certificates.push_back(w);
  }
}

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

void integers(Check& c) {
  const RingPtr zz = Ring::integers();
  const AlgebraConfig config = AlgebraConfig::make(zz, zz);
  const auto lex = MonomialOrdering::lex({1, 2});
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      if (a == 0 || b == 0) continue;
      const std::string pair = "(" + str(a) + "," + str(b) + ")";
      const auto pid = pid_pair_certificate(a, b);
      c.expect(verify_certificate(pid).ok, "pid certificate fails " + pair);
      const unsigned n = minimal_pid_n(a, b);
      const Monomial expected = n ? Monomial::variable(2, n) : Monomial{};
      c.expect(pid.trailing == expected, "pid n not minimal " + pair);
      const std::vector<Element> e{zz->from_integer(a), zz->from_integer(b)};
      const auto v = search_submonic_relation(config, e, lex, n + 1);
      c.expect(v.dependent() && verify_certificate(*v.certificate).ok,
               "generic search fails " + pair);
      c.expect(v.dependent() && v.certificate->trailing == pid.trailing,
               "generic and pid disagree on n " + pair);
      const auto cl = cl_search(zz, e, 8);
      c.expect(cl.found(), "cl_search M=8 fails " + pair);
      if (cl.found()) g_cl_certificates.push_back(*cl.certificate);
    }
  }
  const std::vector<Element> two{zz->from_integer(2)};
  const auto v = search_submonic_relation(config, two, lex, 6);
  c.expect(v.kind == VerdictKind::NoRelationUpTo && v.degree_bound == 6,
           "singleton 2 should give NoRelationUpTo(6)");
}

void ordering_asymmetry(Check& c) {
  const RingPtr r = parse_ring("Poly(GF(7); t1,t2)");
  const AlgebraConfig config = AlgebraConfig::make(r, r);
  const auto e = parse_element_list("t1, t1*t2", r);
  const auto dep = search_submonic_relation(config, e, MonomialOrdering::lex({1, 2}), 1);
  c.expect(dep.dependent() && verify_certificate(*dep.certificate).ok,
           "lex(x1>x2) D=1 should be Dependent");
  if (dep.dependent()) {
    const Polynomial expected =
        parse_poly("x2 - t2*x1", Ring::poly(r, {"x1", "x2"}));
    c.expect(dep.certificate->poly == expected, "relation should be b - t2*a");
  }
  const auto none = search_submonic_relation(config, e, MonomialOrdering::lex({2, 1}), 4);
  c.expect(none.kind == VerdictKind::NoRelationUpTo && none.degree_bound == 4,
           "lex(x2>x1) D=4 should be NoRelationUpTo(4)");
}

void conversion(Check& c) {
  c.expect(!g_cl_certificates.empty(), "no certificates collected");
  for (const auto& cert : g_cl_certificates) {
    const auto sub = cl_to_submonic(cert);
    c.expect(sub.ordering == MonomialOrdering::lex() && verify_certificate(sub).ok,
             "conversion fails in " + cert.ring->descriptor());
  }
}

void dimension(Check& c) {
  const auto g = MonomialOrdering::grevlex();
  auto sd = [&](const char* ring, std::initializer_list<const char*> gens) {
    const RingPtr r = parse_ring(ring);
    std::vector<Polynomial> ps;
    for (const char* t : gens) ps.push_back(parse_poly(t, r));
    return staircase_dimension(r, ps, g);
  };
  c.expect(sd("Poly(QQ; x,y)", {"x*y"}) == 1, "(xy) should have dimension 1");
  c.expect(sd("Poly(QQ; x,y)", {"x^2", "x*y", "y^2"}) == 0, "(x^2,xy,y^2) should be 0");
  c.expect(sd("Poly(QQ; x,y,z)", {"x*z", "y*z"}) == 2, "(xz,yz) should be 2");
  c.expect(sd("Poly(QQ; x,y)", {"1"}) == -1, "(1) should be -1");
  c.expect(known_dim(parse_ring("ZZ")) == 1, "known_dim(ZZ) should be 1");
  c.expect(known_dim(parse_ring("Poly(ZZ; x)")) == 2, "known_dim(ZZ[x]) should be 2");
}

MonomialOrdering random_ordering(std::mt19937_64& rng, std::size_t nvars) {
  std::vector<Var> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = static_cast<Var>(i + 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  switch (rng() % 5) {
    case 0:
      return MonomialOrdering::lex(perm);
    case 1:
      return MonomialOrdering::grlex(perm);
    case 2:
      return MonomialOrdering::grevlex(perm);
    case 3: {
      std::vector<Rational> w;
      for (std::size_t i = 0; i < nvars; ++i) w.emplace_back(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
      return MonomialOrdering::weighted_lex(w, perm);
    }
    default: {
      // First row strictly positive, further rows arbitrary.
      std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(nvars));
      for (std::size_t i = 0; i < nvars; ++i) {
        rows[0][i] = 1 + static_cast<long>(rng() % 4);
        rows[1][i] = static_cast<long>(rng() % 7) - 3;
      }
      return MonomialOrdering::matrix(rows);
    }
  }
}

void weights(Check& c) {
  std::mt19937_64 rng(2024);
  int instances = 0;
  while (instances < 500) {
    const std::size_t nv = 1 + rng() % 4;
    const MonomialOrdering ord = random_ordering(rng, nv);
    const Monomial t = to_monomial(oracle::random_dense(rng, nv, 6));
    std::vector<Monomial> above;
    for (int k = 0; k < 500 && above.size() < 5; ++k) {
      const Monomial m = to_monomial(oracle::random_dense(rng, nv, 6));
      if (ord.compare(m, t) > 0) above.push_back(m);
    }
    if (above.size() < 5) continue;
    ++instances;
    const WeightVector w = separating_weights(t, above, ord);
    bool ok = true;
    for (const auto& x : w.w) ok = ok && x >= 1;
    for (const auto& m : above) ok = ok && w.weight(t) < w.weight(m);
    c.expect(ok, "weights " + w.to_string() + " fail for " + t.to_string() + " under " +
                     ord.to_string());
  }
}

void experiment(Check& c) {
  ExperimentSpec spec;  // seed 42, 1000 trials, deg <= 2, |coeff| <= 5, grevlex, D = 6, R = ZZ
  const auto report = run_experiment(spec);
  c.expect(report.trials.size() == 1000, "trial count");
  c.expect(report.all_verified, "a certificate failed re-verification");
  for (const auto& t : report.trials) {
    if (!t.verdict.certificate) continue;
    c.expect(load_submonic(to_json(*t.verdict.certificate)).check.ok,
             "trial " + str(static_cast<long>(t.index)) + " does not re-verify after reload");
  }
  const auto again = run_experiment(spec, Execution::Serial);
  c.expect(again.to_json() == report.to_json(), "report not deterministic");
  std::printf("  experiment: %zu dependent, %zu no relation, %zu resource exceeded\n",
              report.dependent, report.no_relation, report.resource_exceeded);
  for (std::size_t i : report.unresolved) {
    std::printf("  unresolved trial %zu:", i);
    for (const auto& e : report.trials[i].elements) std::printf(" [%s]", e.to_string().c_str());
    std::printf("\n");
  }
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

void properties(Check& c) {
  // Ordering axioms, 10^4 random checks per family against dense references.
  std::mt19937_64 rng(8);
  const std::vector<std::pair<MonomialOrdering, std::function<int(const oracle::Dense&,
                                                                   const oracle::Dense&)>>>
      fams{{MonomialOrdering::lex(), oracle::lex},
           {MonomialOrdering::grlex(), oracle::grlex},
           {MonomialOrdering::grevlex(), oracle::grevlex},
           {MonomialOrdering::weighted_lex({Rational(3), Rational(1), Rational(2)}),
            [](const oracle::Dense& a, const oracle::Dense& b) {
              return oracle::weighted(a, b, {3, 1, 2});
            }},
           {MonomialOrdering::matrix({{1, 1, 1, 1, 1}, {0, 0, 0, 0, -1}}),
            [](const oracle::Dense& a, const oracle::Dense& b) {
              if (oracle::total(a) != oracle::total(b)) return oracle::total(a) > oracle::total(b) ? 1 : -1;
              if (a[4] != b[4]) return a[4] < b[4] ? 1 : -1;
              return oracle::lex(a, b);
            }}};
  for (const auto& [ord, ref] : fams) {
    for (int i = 0; i < 10'000; ++i) {
      const auto a = oracle::random_dense(rng, 5, 8), b = oracle::random_dense(rng, 5, 8),
                 u = oracle::random_dense(rng, 5, 8);
      const Monomial s = to_monomial(a), t = to_monomial(b), m = to_monomial(u);
      const int st = sign(ord.compare(s, t));
      bool ok = st == ref(a, b) && sign(ord.compare(t, s)) == -st && (st == 0) == (s == t) &&
                sign(ord.compare(m * s, m * t)) == st &&
                sign(ord.compare(Monomial{}, s)) == (s.is_one() ? 0 : -1);
      if (!ok) {
        c.expect(false, "ordering axiom fails for " + ord.to_string());
        break;
      }
    }
    c.expect(true, "");
  }
  // HNF post-conditions.
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix a(r, cols);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < cols; ++y) a(x, y) = static_cast<long>(rng() % 41) - 20;
    const HnfResult h = hnf(a);
    std::vector<std::vector<mpz_class>> u;
    for (std::size_t x = 0; x < r; ++x) u.push_back(h.U.row(x));
    bool ok = h.U * a == h.H && abs(oracle::determinant(u)) == 1;
    for (std::size_t k = 0; k < h.rank; ++k) {
      ok = ok && h.H(k, h.pivots[k]) > 0 && (k == 0 || h.pivots[k] > h.pivots[k - 1]);
      for (std::size_t j = 0; j < k; ++j)
        ok = ok && h.H(j, h.pivots[k]) >= 0 && h.H(j, h.pivots[k]) < h.H(k, h.pivots[k]);
    }
    for (std::size_t k = h.rank; k < r; ++k)
      for (std::size_t y = 0; y < cols; ++y) ok = ok && h.H(k, y) == 0;
    c.expect(ok, "hnf post-condition fails on " + a.to_string());
  }
  // Groebner S-polynomials reduce to zero.
  const RingPtr ring = parse_ring("Poly(GF(7); x,y,z)");
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(testing_support::random_poly(rng, ring, 2, 3, 3));
    const auto gb = buchberger(ring, gens, i % 2 ? MonomialOrdering::lex()
                                                 : MonomialOrdering::grevlex());
    c.expect(s_polynomials_reduce_to_zero(gb), "S-polynomial criterion fails");
  }
  // Certificate JSON round-trip.
  for (long a = 1; a <= 20; ++a) {
    const auto cert = pid_pair_certificate(a, a + 7);
    const std::string json = to_json(cert);
    const auto back = load_submonic(json);
    c.expect(back.check.ok && to_json(back.cert) == json, "submonic round-trip fails");
  }
  for (const auto& w : finite_ring_dim_lt(Ring::zmod(18), 1).witnesses) {
    const std::string json = to_json(w);
    const auto back = load_cl(json);
    c.expect(back.check.ok && to_json(back.cert) == json, "cl round-trip fails");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "finite rings have trdeg 0", finite_rings},
      {2, "trdeg(ZZ) = 1 = dim(ZZ)", integers},
      {3, "ordering asymmetry over GF(7)[t1,t2]", ordering_asymmetry},
      {4, "CL certificates convert to lex-submonic relations", conversion},
      {5, "dimension oracle", dimension},
      {6, "weight separation", weights},
      {7, "randomized triple experiment over ZZ[x]", experiment},
      {8, "property suites", properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", check.ok() ? "PASS" : "FAIL", cr.id,
                cr.name, check.count, secs);
    for (const auto& f : check.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += !check.ok();
  }
  return failed == 0 ? 0 : 1;
}
