#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "trdeg/monomial.hpp"
#include "trdeg/ring.hpp"

namespace testing_support {

inline trdeg::Monomial to_monomial(const oracle::Dense& d) {
  std::vector<trdeg::Exp> e(d.begin(), d.end());
  return trdeg::Monomial::from_dense(e);
}

// Random polynomial over `ring` (a Poly ring) with small coefficients.
inline trdeg::Polynomial random_poly(std::mt19937_64& rng, const trdeg::RingPtr& ring,
                                     unsigned max_deg, std::size_t max_terms, long coeff_bound) {
  const auto& k = ring->coefficient_ring();
  std::vector<trdeg::Term> terms;
  const std::size_t count = rng() % (max_terms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const long c = static_cast<long>(rng() % (2 * coeff_bound + 1)) - coeff_bound;
    terms.push_back({to_monomial(oracle::random_dense(rng, ring->nvars(), max_deg)),
                     k->from_integer(c)});
  }
  return trdeg::Polynomial::from_terms(k, std::move(terms));
}

// Evaluates an integer or residue polynomial at an integer point, reducing
// modulo `modulus` when it is nonzero. Works term by term from the raw data.
inline mpz_class eval_at(const trdeg::Polynomial& f, const std::vector<mpz_class>& point,
                         const mpz_class& modulus = 0) {
  mpz_class sum = 0;
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.scalar().value();
    for (const auto& [var, e] : t.mono.entries()) {
      for (unsigned k = 0; k < e; ++k) v *= point[var - 1];
    }
    sum += v;
  }
  if (modulus != 0) {
    sum %= modulus;
    if (sum < 0) sum += modulus;
  }
  return sum;
}

}  // namespace testing_support
