#include "trdeg/groebner.hpp"

#include <algorithm>

#include "trdeg/error.hpp"

namespace trdeg {

namespace {

void require_field_poly_ring(const RingPtr& ring) {
  if (ring->kind() != Ring::Kind::Poly || !ring->base()->is_field()) {
    throw UnsupportedConfiguration("Groebner bases need a polynomial ring over QQ or GF(p), got " +
                                   ring->descriptor());
  }
}

void require_coefficients(const RingPtr& ring, const Polynomial& f) {
  if (!(*f.coeff_ring() == *ring->base())) {
    throw RingMismatch("polynomial over " + f.coeff_ring()->descriptor() +
                       " used with a basis over " + ring->base()->descriptor());
  }
}

struct Entry {
  Polynomial poly;
  Monomial lm;
  std::vector<Polynomial> cof;  // empty when cofactors are not tracked
};

void make_monic(Entry& e, const MonomialOrdering& ord) {
  const Term& lt = e.poly.leading_term(ord);
  e.lm = lt.mono;
  if (lt.coeff.is_one()) return;
  const Element inv = lt.coeff.ring().inverse(lt.coeff);
  e.poly = e.poly.scaled(Monomial{}, inv);
  for (auto& c : e.cof) c = c.scaled(Monomial{}, inv);
}

// Fully reduces `e` by the entries of `basis` whose index is not `skip`.
void reduce_fully(Entry& e, const std::vector<Entry>& basis, const MonomialOrdering& ord,
                  std::size_t skip = static_cast<std::size_t>(-1)) {
  Polynomial rest = e.poly;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term(ord);
    const Entry* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k != skip && basis[k].lm.divides(lt.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      rest = rest - Polynomial::term(lt.mono, lt.coeff);
      remainder.push_back(lt);
      continue;
    }
    const Monomial m = lt.mono / divisor->lm;
    rest = rest - divisor->poly.scaled(m, lt.coeff);
    for (std::size_t j = 0; j < e.cof.size(); ++j) {
      e.cof[j] = e.cof[j] - divisor->cof[j].scaled(m, lt.coeff);
    }
  }
  e.poly = Polynomial::from_terms(e.poly.coeff_ring(), std::move(remainder));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

LiftedBasis run_buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                           const MonomialOrdering& ord, bool track) {
  require_field_poly_ring(ring);
  const RingPtr& field = ring->base();
  const Polynomial zero(field);

  std::vector<Entry> basis;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    require_coefficients(ring, gens[g]);
    if (gens[g].is_zero()) continue;
    Entry e{gens[g], Monomial{}, {}};
    if (track) {
      e.cof.assign(gens.size(), zero);
      e.cof[g] = Polynomial::constant(field->one());
    }
    make_monic(e, ord);
    basis.push_back(std::move(e));
  }

  std::vector<Pair> pending;
  auto add_pairs = [&](std::size_t newest) {
    for (std::size_t k = 0; k < newest; ++k) {
      pending.push_back({k, newest, lcm(basis[k].lm, basis[newest].lm)});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs(k);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pending.begin(), pending.end(),
                       [&](const Pair& p) { return p.i == a && p.j == b; });
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree, ties broken by the ordering.
    auto pick = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return ord.less(a.lcm, b.lcm);
    });
    const Pair pair = *pick;
    pending.erase(pick);

    if (basis[pair.i].lm.coprime(basis[pair.j].lm)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || !basis[k].lm.divides(pair.lcm)) continue;
      chain = !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    const Entry& f = basis[pair.i];
    const Entry& g = basis[pair.j];
    const Monomial mf = pair.lcm / f.lm;
    const Monomial mg = pair.lcm / g.lm;
    const Element one = field->one();
    Entry s{f.poly.scaled(mf, one) - g.poly.scaled(mg, one), Monomial{}, {}};
    if (track) {
      s.cof.reserve(gens.size());
      for (std::size_t j = 0; j < gens.size(); ++j) {
        s.cof.push_back(f.cof[j].scaled(mf, one) - g.cof[j].scaled(mg, one));
      }
    }
    reduce_fully(s, basis, ord);
    if (s.poly.is_zero()) continue;
    make_monic(s, ord);
    basis.push_back(std::move(s));
    add_pairs(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<bool> redundant(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && !redundant[i]; ++j) {
      if (i == j || !basis[j].lm.divides(basis[i].lm)) continue;
      redundant[i] = !(basis[j].lm == basis[i].lm) || j < i;
    }
  }
  std::vector<Entry> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!redundant[i]) minimal.push_back(std::move(basis[i]));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduce_fully(minimal[i], minimal, ord, i);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Entry& a, const Entry& b) { return ord.less(a.lm, b.lm); });

  std::vector<Polynomial> polys;
  std::vector<std::vector<Polynomial>> cofactors;
  for (auto& e : minimal) {
    polys.push_back(std::move(e.poly));
    cofactors.push_back(std::move(e.cof));
  }
  return {GroebnerBasis(ring, ord, std::move(polys)), std::move(cofactors)};
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrdering ord, std::vector<Polynomial> basis)
    : ring_(std::move(ring)), ord_(std::move(ord)), basis_(std::move(basis)) {}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(basis_.begin(), basis_.end(), [&](const Polynomial& p) {
    return p.leading_term(ord_).mono.is_one();
  });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& p : basis_) out.push_back(p.leading_term(ord_).mono);
  return out;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const MonomialOrdering& ord) {
  return run_buchberger(ring, gens, ord, false).basis;
}

LiftedBasis buchberger_lifted(const RingPtr& ring, std::span<const Polynomial> gens,
                              const MonomialOrdering& ord) {
  return run_buchberger(ring, gens, ord, true);
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrdering& ord) {
  const RingPtr& coeffs = f.coeff_ring();
  std::vector<Polynomial> quotients(divisors.size(), Polynomial(coeffs));
  std::vector<Term> leading;
  for (const auto& d : divisors) {
    if (!(*d.coeff_ring() == *coeffs)) throw RingMismatch("divisor over a different ring");
    leading.push_back(d.is_zero() ? Term{Monomial{}, coeffs->zero()} : d.leading_term(ord));
  }
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term(ord);
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k].is_zero() || !leading[k].mono.divides(lt.mono)) continue;
      if (!coeffs->is_unit(leading[k].coeff)) continue;
      const Monomial m = lt.mono / leading[k].mono;
      const Element c = lt.coeff * coeffs->inverse(leading[k].coeff);
      rest = rest - divisors[k].scaled(m, c);
      quotients[k] = quotients[k] + Polynomial::term(m, c);
      divided = true;
      break;
    }
    if (!divided) {
      rest = rest - Polynomial::term(lt.mono, lt.coeff);
      remainder.push_back(lt);
    }
  }
  return {std::move(quotients), Polynomial::from_terms(coeffs, std::move(remainder))};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_coefficients(gb.ring(), f);
  return divide(f, gb.polys(), gb.ordering()).remainder;
}

bool ideal_membership(const RingPtr& ring, const Polynomial& f,
                      std::span<const Polynomial> gens, const MonomialOrdering& ord) {
  require_coefficients(ring, f);
  if (f.is_zero()) return true;
  return normal_form(f, buchberger(ring, gens, ord)).is_zero();
}

std::optional<std::vector<Polynomial>> ideal_lift(const RingPtr& ring, const Polynomial& f,
                                                  std::span<const Polynomial> gens,
                                                  const MonomialOrdering& ord) {
  require_coefficients(ring, f);
  const LiftedBasis lifted = buchberger_lifted(ring, gens, ord);
  const Division div = divide(f, lifted.basis.polys(), ord);
  if (!div.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> out(gens.size(), Polynomial(ring->base()));
  for (std::size_t i = 0; i < div.quotients.size(); ++i) {
    if (div.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      out[j] = out[j] + div.quotients[i] * lifted.cofactors[i][j];
    }
  }
  return out;
}

int staircase_dimension(const RingPtr& ring, std::span<const Polynomial> gens,
                        const MonomialOrdering& ord) {
  const GroebnerBasis gb = buchberger(ring, gens, ord);
  if (gb.is_unit_ideal()) return -1;
  const std::size_t n = ring->nvars();
  if (n > 24) throw PreconditionViolation("staircase dimension limited to 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t mask = 0;
    for (const auto& [v, e] : m.entries()) mask |= 1u << (v - 1);
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) {
      return (s & ~subset) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord) {
  const Term& a = f.leading_term(ord);
  const Term& b = g.leading_term(ord);
  const Monomial l = lcm(a.mono, b.mono);
  const RingPtr& k = f.coeff_ring();
  return f.scaled(l / a.mono, k->inverse(a.coeff)) - g.scaled(l / b.mono, k->inverse(b.coeff));
}

bool s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& polys = gb.polys();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!normal_form(s_polynomial(polys[i], polys[j], gb.ordering()), gb).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace trdeg
