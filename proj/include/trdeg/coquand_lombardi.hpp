#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trdeg/dependence.hpp"
#include "trdeg/ring.hpp"

namespace trdeg {

/// Exponents m_1..m_n and coefficients r_1..r_n in R with
///   prod a_i^(m_i) = sum_j r_j * a_j * prod_(i<=j) a_i^(m_i).
struct ClCertificate {
  RingPtr ring;
  std::vector<Element> elements;
  std::vector<unsigned> exponents;
  std::vector<Element> coeffs;
  bool verified = false;
};

struct ClResult {
  std::optional<ClCertificate> certificate;
  unsigned exponent_bound = 0;

  bool found() const noexcept { return certificate.has_value(); }
};

/// Supported rings: ZZ, QQ, GF(p), Zmod(n), Poly over a field, Quot.
/// Exponent vectors with every m_i <= M are tried by increasing sum, then
/// lexicographically.
ClResult cl_search(const RingPtr& ring, std::span<const Element> elems, unsigned max_exp);

/// Exact re-evaluation of the identity.
VerifyResult cl_verify(const ClCertificate& cert);

/// The lex-submonic relation prod x_i^(m_i) - sum_j r_j x_j prod_(i<=j) x_i^(m_i)
/// over R = A = cert.ring. Throws PreconditionViolation if cert fails cl_verify.
SubmonicCertificate cl_to_submonic(const ClCertificate& cert);

struct FiniteDimResult {
  bool holds = false;
  std::uint64_t tuples = 0;
  std::vector<ClCertificate> witnesses;  // one per tuple, in enumeration order
  std::optional<std::vector<Element>> failing;
};

/// Decides dim(R) < n for a finite ring by running cl_search on every n-tuple.
/// `max_exp` defaults to the ring size. Throws ResourceExceeded past kTupleCap.
FiniteDimResult finite_ring_dim_lt(const RingPtr& ring, unsigned n,
                                   std::optional<unsigned> max_exp = std::nullopt,
                                   Execution exec = Execution::Parallel);

/// All elements of a finite ring, 0, 1, ..., size - 1.
std::vector<Element> ring_elements(const Ring& ring);

}  // namespace trdeg
