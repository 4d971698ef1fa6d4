#include "trdeg/coquand_lombardi.hpp"

#include <algorithm>
#include <exception>

#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/linalg.hpp"

namespace trdeg {

namespace {

void require_cl_ring(const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::Rationals:
    case Ring::Kind::PrimeField:
    case Ring::Kind::Zmod:
    case Ring::Kind::Quot:
      return;
    case Ring::Kind::Poly:
      if (ring.base()->is_field()) return;
      break;
  }
  throw UnsupportedConfiguration("cl_search does not support " + ring.descriptor());
}

// Generators a_j * prod_(i<=j) a_i^(m_i) and the target prod a_i^(m_i).
struct ClInstance {
  Element target;
  std::vector<Element> gens;
};

ClInstance instance(const Ring& ring, std::span<const Element> elems,
                    std::span<const unsigned> m) {
  Element prefix = ring.one();
  std::vector<Element> gens;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    prefix = prefix * elems[j].pow(m[j]);
    gens.push_back(elems[j] * prefix);
  }
  return {prefix, std::move(gens)};
}

// Coefficients r with target = sum r_j gens_j, if any.
std::optional<std::vector<Element>> membership(const RingPtr& ring, const ClInstance& inst) {
  const std::size_t n = inst.gens.size();
  switch (ring->kind()) {
    case Ring::Kind::Integers: {
      const std::vector<Integer> target{inst.target.scalar().value()};
      std::vector<std::vector<Integer>> gens;
      for (const auto& g : inst.gens) gens.push_back({g.scalar().value()});
      auto x = solve_integer(target, gens);
      if (!x) return std::nullopt;
      std::vector<Element> out;
      for (const auto& v : *x) out.push_back(ring->from_integer(v));
      return out;
    }
    case Ring::Kind::Rationals:
    case Ring::Kind::PrimeField:
    case Ring::Kind::Zmod: {
      const std::vector<Scalar> target{inst.target.scalar()};
      std::vector<std::vector<Scalar>> gens;
      for (const auto& g : inst.gens) gens.push_back({g.scalar()});
      const SpanSolution sol = solve_in_span(target, gens, *ring);
      if (!sol.in_span()) return std::nullopt;
      std::vector<Element> out;
      for (const auto& s : *sol.coefficients) out.push_back(ring->from_scalar(s));
      return out;
    }
    case Ring::Kind::Poly:
    case Ring::Kind::Quot: {
      const RingPtr ambient = ring->kind() == Ring::Kind::Quot ? ring->base() : ring;
      std::vector<Polynomial> gens;
      for (const auto& g : inst.gens) gens.push_back(g.poly());
      if (ring->kind() == Ring::Kind::Quot) {
        const auto& extra = ring->ideal().polys();
        gens.insert(gens.end(), extra.begin(), extra.end());
      }
      const auto lift = ideal_lift(ambient, inst.target.poly(), gens, MonomialOrdering::grevlex());
      if (!lift) return std::nullopt;
      std::vector<Element> out;
      for (std::size_t j = 0; j < n; ++j) out.push_back(ring->from_polynomial((*lift)[j]));
      return out;
    }
  }
  return std::nullopt;
}

// Visits the vectors in {0..max}^n with sum `total` in lexicographic order;
// stops early when `visit` returns true.
template <typename Visit>
bool for_each_composition(std::vector<unsigned>& m, std::size_t pos, unsigned remaining,
                          unsigned max, Visit& visit) {
  if (pos + 1 == m.size()) {
    if (remaining > max) return false;
    m[pos] = remaining;
    return visit(m);
  }
  const unsigned top = std::min(remaining, max);
  for (unsigned v = 0; v <= top; ++v) {
    // The remaining slots can absorb at most max each.
    if (remaining - v > max * static_cast<unsigned>(m.size() - pos - 1)) continue;
    m[pos] = v;
    if (for_each_composition(m, pos + 1, remaining - v, max, visit)) return true;
  }
  return false;
}

}  // namespace

ClResult cl_search(const RingPtr& ring, std::span<const Element> elems, unsigned max_exp) {
  require_cl_ring(*ring);
  if (elems.empty()) throw PreconditionViolation("cl_search needs at least one element");
  for (const auto& e : elems) {
    if (!(e.ring() == *ring)) {
      throw RingMismatch("element " + e.to_string() + " is not in " + ring->descriptor());
    }
  }
  ClResult result;
  result.exponent_bound = max_exp;
  const std::size_t n = elems.size();
  std::vector<unsigned> m(n, 0);
  auto visit = [&](const std::vector<unsigned>& exps) {
    const ClInstance inst = instance(*ring, elems, exps);
    auto coeffs = membership(ring, inst);
    if (!coeffs) return false;
    ClCertificate cert{ring, {elems.begin(), elems.end()}, exps, std::move(*coeffs), false};
    const VerifyResult check = cl_verify(cert);
    if (!check.ok) {
      throw InternalInconsistency("cl_search produced a certificate that fails: " + check.reason);
    }
    cert.verified = true;
    result.certificate = std::move(cert);
    return true;
  };
  const unsigned max_total = max_exp * static_cast<unsigned>(n);
  for (unsigned total = 0; total <= max_total; ++total) {
    if (for_each_composition(m, 0, total, max_exp, visit)) break;
  }
  return result;
}

VerifyResult cl_verify(const ClCertificate& cert) {
  try {
    if (!cert.ring) return {false, "missing_ring"};
    require_cl_ring(*cert.ring);
    const std::size_t n = cert.elements.size();
    if (n == 0) return {false, "empty_tuple"};
    if (cert.exponents.size() != n || cert.coeffs.size() != n) return {false, "arity"};
    for (const auto& e : cert.elements) {
      if (!(e.ring() == *cert.ring)) return {false, "ring_mismatch"};
    }
    for (const auto& r : cert.coeffs) {
      if (!(r.ring() == *cert.ring)) return {false, "ring_mismatch"};
    }
    const ClInstance inst = instance(*cert.ring, cert.elements, cert.exponents);
    Element rhs = cert.ring->zero();
    for (std::size_t j = 0; j < n; ++j) rhs = rhs + cert.coeffs[j] * inst.gens[j];
    if (!(rhs == inst.target)) return {false, "identity_fails"};
    return {true, "ok"};
  } catch (const UnsupportedConfiguration&) {
    return {false, "unsupported_ring"};
  } catch (const Error& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

SubmonicCertificate cl_to_submonic(const ClCertificate& cert) {
  const VerifyResult check = cl_verify(cert);
  if (!check.ok) {
    throw PreconditionViolation("cl_to_submonic needs a verified certificate (" + check.reason +
                                ")");
  }
  const RingPtr& ring = cert.ring;
  const std::size_t n = cert.elements.size();
  std::vector<Term> terms;
  Monomial prefix;
  for (std::size_t j = 0; j < n; ++j) {
    const Var v = static_cast<Var>(j + 1);
    if (cert.exponents[j] > 0) prefix = prefix * Monomial::variable(v, cert.exponents[j]);
    terms.push_back({prefix * Monomial::variable(v), -cert.coeffs[j]});
  }
  terms.push_back({prefix, ring->one()});
  const MonomialOrdering lex = MonomialOrdering::lex();
  Polynomial f = Polynomial::from_terms(ring, std::move(terms));
  SubmonicCertificate out{AlgebraConfig::make(ring, ring),
                          cert.elements,
                          lex,
                          f,
                          prefix,
                          static_cast<unsigned>(f.total_degree()),
                          false};
  const VerifyResult sub = verify_certificate(out);
  if (!sub.ok) {
    throw InternalInconsistency("converted CL certificate fails verification: " + sub.reason);
  }
  out.verified = true;
  return out;
}

std::vector<Element> ring_elements(const Ring& ring) {
  if (!ring.is_finite()) throw PreconditionViolation(ring.descriptor() + " is not finite");
  if (!ring.modulus().fits_ulong_p() || ring.modulus() > kTupleCap) {
    throw ResourceExceeded(ring.descriptor() + " is too large to enumerate");
  }
  std::vector<Element> out;
  const unsigned long size = ring.modulus().get_ui();
  for (unsigned long i = 0; i < size; ++i) out.push_back(ring.from_integer(Integer(i)));
  return out;
}

FiniteDimResult finite_ring_dim_lt(const RingPtr& ring, unsigned n, std::optional<unsigned> max_exp,
                                   Execution exec) {
  if (n == 0) throw PreconditionViolation("arity must be at least 1");
  const std::vector<Element> elems = ring_elements(*ring);
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), elems.size(), n);
  if (count > kTupleCap) {
    throw ResourceExceeded("finite_ring_dim_lt would enumerate " + count.get_str() +
                           " tuples (cap " + std::to_string(kTupleCap) + ")");
  }
  const std::uint64_t total = count.get_ui();
  const unsigned bound = max_exp.value_or(static_cast<unsigned>(elems.size()));

  auto tuple_at = [&](std::uint64_t index) {
    std::vector<Element> t(n, elems.front());
    for (std::size_t pos = n; pos-- > 0;) {
      t[pos] = elems[index % elems.size()];
      index /= elems.size();
    }
    return t;
  };

  std::vector<ClResult> results(total);
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < total; ++i) results[i] = cl_search(ring, tuple_at(i), bound);
  } else {
    std::exception_ptr failure;
    const auto signed_total = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < signed_total; ++i) {
      try {
        results[static_cast<std::size_t>(i)] =
            cl_search(ring, tuple_at(static_cast<std::uint64_t>(i)), bound);
      } catch (...) {
#pragma omp critical(trdeg_cl_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  FiniteDimResult out;
  out.tuples = total;
  out.holds = true;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (results[i].found()) {
      out.witnesses.push_back(std::move(*results[i].certificate));
    } else if (out.holds) {
      out.holds = false;
      out.failing = tuple_at(i);
    }
  }
  return out;
}

}  // namespace trdeg
