#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trdeg/ordering.hpp"
#include "trdeg/ring.hpp"

namespace trdeg {

/// Reduced Groebner basis of an ideal in a polynomial ring over QQ or GF(p).
/// Basis elements are monic and sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrdering ord, std::vector<Polynomial> basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrdering& ordering() const noexcept { return ord_; }
  const std::vector<Polynomial>& polys() const noexcept { return basis_; }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const noexcept { return basis_.empty(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  MonomialOrdering ord_;
  std::vector<Polynomial> basis_;
};

/// A basis together with cofactors: basis.polys()[i] = sum_j cofactors[i][j] * gens[j].
struct LiftedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

/// `ring` is the polynomial ring (Poly over a field) the generators live in.
/// Throws UnsupportedConfiguration for non-field coefficients.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const MonomialOrdering& ord);
LiftedBasis buchberger_lifted(const RingPtr& ring, std::span<const Polynomial> gens,
                              const MonomialOrdering& ord);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i] * divisors[i] + remainder, and
/// no term of the remainder is divisible by a leading monomial of a divisor.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrdering& ord);

/// Throws RingMismatch if f is not over the basis' coefficient field.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const RingPtr& ring, const Polynomial& f,
                      std::span<const Polynomial> gens, const MonomialOrdering& ord);

/// Cofactors c with f = sum c_j * gens[j], or nullopt when f is not in the ideal.
std::optional<std::vector<Polynomial>> ideal_lift(const RingPtr& ring, const Polynomial& f,
                                                  std::span<const Polynomial> gens,
                                                  const MonomialOrdering& ord);

/// Krull dimension of ring/(gens): the size of a largest set of variables
/// containing the support of no leading monomial. -1 for the unit ideal.
int staircase_dimension(const RingPtr& ring, std::span<const Polynomial> gens,
                        const MonomialOrdering& ord);

/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
bool s_polynomials_reduce_to_zero(const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord);

}  // namespace trdeg
