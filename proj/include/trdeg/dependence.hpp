#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trdeg/ordering.hpp"
#include "trdeg/ring.hpp"

namespace trdeg {

/// A coefficient ring R together with an R-algebra A. Supported pairs:
///   a  R = A = ZZ
///   b  R = A = Zmod(n)
///   c  R = ZZ and A = Poly(ZZ; ...) or A = Zmod(n)
///   d  R = A = Poly(field; ...) or R = A = Quot(...)
///   e  R = field k and A = Poly(k; ...) or a Quot over k
///   f  R = A = a field
struct AlgebraConfig {
  enum class Kind { IntegerSelf, ResidueSelf, IntegerInto, PolynomialSelf, FieldInto, FieldSelf };

  RingPtr coeffs;
  RingPtr algebra;
  Kind kind;

  /// Throws UnsupportedConfiguration outside the table above.
  static AlgebraConfig make(RingPtr coeffs, RingPtr algebra);

  /// The structure map R -> A.
  Element map(const Element& r) const;
  char letter() const;
};

struct SubmonicCertificate {
  AlgebraConfig config;
  std::vector<Element> elements;
  MonomialOrdering ordering;
  Polynomial poly;  // over config.coeffs
  Monomial trailing;
  unsigned degree_bound = 0;
  bool verified = false;
};

enum class VerdictKind { Dependent, NoRelationUpTo, ResourceExceeded };

std::string to_string(VerdictKind kind);

struct DependenceVerdict {
  VerdictKind kind = VerdictKind::NoRelationUpTo;
  unsigned degree_bound = 0;
  std::uint64_t candidates = 0;  // number of monomials of degree <= bound
  std::optional<SubmonicCertificate> certificate;

  bool dependent() const noexcept { return kind == VerdictKind::Dependent; }
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // "ok" or a short reason code

  explicit operator bool() const noexcept { return ok; }
};

/// Default 20000, overridden by the TRDEG_MONOMIAL_CAP environment variable.
std::uint64_t default_monomial_cap();

struct SearchOptions {
  std::uint64_t monomial_cap = default_monomial_cap();
};

/// f(a_1, ..., a_n) in A, with the structure map applied to the coefficients.
Element eval_poly(const Polynomial& f, std::span<const Element> args, const AlgebraConfig& config);

/// Least support monomial under `ord` with its coefficient. Throws
/// PreconditionViolation for the zero polynomial.
Term trailing_term(const Polynomial& f, const MonomialOrdering& ord);

/// f != 0 and its trailing coefficient is exactly 1.
bool is_submonic(const Polynomial& f, const MonomialOrdering& ord);

/// Exact decision at bound D: the least monomial t (under `ord`) of degree at
/// most D such that -t(a) lies in the R-span of {s(a) : s > t, deg s <= D}.
/// The returned relation uses the shortest run of monomials above t, taken
/// in increasing order, that already reaches -t(a).
DependenceVerdict search_submonic_relation(const AlgebraConfig& config,
                                           std::span<const Element> elems,
                                           const MonomialOrdering& ord, unsigned max_degree,
                                           const SearchOptions& options = {});

/// Pure recomputation: nonzero, submonic under the stored ordering, stored
/// trailing monomial correct, and vanishing at the stored elements.
VerifyResult verify_certificate(const SubmonicCertificate& cert);

/// Minimal n with gcd(a, b^(n+1)) | b^n and the relation
/// x2^n - c*x1 - d*x2^(n+1) where b^n = c*a + d*b^(n+1), under lex x1 > x2.
SubmonicCertificate pid_pair_certificate(const Integer& a, const Integer& b);

enum class Execution { Parallel, Serial };

struct TupleVerdict {
  std::vector<std::size_t> indices;  // positions in the pool, increasing
  DependenceVerdict verdict;
};

struct DependenceMatrix {
  std::vector<TupleVerdict> tuples;
  std::size_t dependent = 0;
  std::size_t no_relation = 0;
  std::size_t resource_exceeded = 0;
  /// Tuples with no relation up to the bound: candidate witnesses for trdeg >= arity.
  std::vector<std::size_t> candidates;
};

/// Default cap on the number of tuples enumerated by sweeps.
inline constexpr std::uint64_t kTupleCap = 1'000'000;

/// Every arity-subset of the pool (pool order kept). Throws ResourceExceeded
/// past kTupleCap tuples.
DependenceMatrix dependence_matrix(const AlgebraConfig& config, std::span<const Element> pool,
                                   std::size_t arity, const MonomialOrdering& ord,
                                   unsigned max_degree, const SearchOptions& options = {},
                                   Execution exec = Execution::Parallel);

/// Index subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace trdeg
