#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trdeg/monomial.hpp"
#include "trdeg/scalar.hpp"

namespace trdeg {

class Ring;
class Element;
class GroebnerBasis;
class MonomialOrdering;
struct Term;

using RingPtr = std::shared_ptr<const Ring>;

/// Sparse polynomial with coefficients in `coeff_ring()`.
///
/// Terms are kept sorted by the canonical Monomial order with pairwise
/// distinct monomials and nonzero coefficients, so == is polynomial equality.
/// Variable names are not stored; they belong to the enclosing Ring.
class Polynomial {
 public:
  explicit Polynomial(RingPtr coeffs);
  Polynomial(const Polynomial&);
  Polynomial(Polynomial&&) noexcept;
  Polynomial& operator=(const Polynomial&);
  Polynomial& operator=(Polynomial&&) noexcept;
  ~Polynomial();

  static Polynomial constant(const Element& c);
  static Polynomial term(const Monomial& m, const Element& c);
  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr coeffs, std::vector<Term> terms);

  const RingPtr& coeff_ring() const noexcept { return coeffs_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept;
  std::size_t size() const noexcept;
  std::uint64_t total_degree() const;
  Var max_var() const;
  /// Coefficient of m (zero if absent).
  Element coefficient(const Monomial& m) const;

  /// Greatest / least term under `ord`. Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrdering& ord) const;
  const Term& trailing_term(const MonomialOrdering& ord) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// c * m * this.
  Polynomial scaled(const Monomial& m, const Element& c) const;
  Polynomial pow(unsigned long e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Renders with the given variable names; terms appear in decreasing
  /// grevlex order so output is stable.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  RingPtr coeffs_;
  std::vector<Term> terms_;
};

/// An element of a ring, in canonical form: scalars for the base rings,
/// a Polynomial over the base ring for Poly, and the normal form modulo the
/// ideal's Groebner basis for Quot.
class Element {
 public:
  Element(RingPtr ring, Scalar value);
  Element(RingPtr ring, Polynomial value);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  bool is_scalar() const noexcept { return std::holds_alternative<Scalar>(rep_); }
  const Scalar& scalar() const;
  const Polynomial& poly() const;

  bool is_zero() const;
  bool is_one() const;

  Element pow(unsigned long e) const;
  std::string to_string() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  RingPtr ring_;
  std::variant<Scalar, Polynomial> rep_;
};

struct Term {
  Monomial mono;
  Element coeff;
};

inline bool Polynomial::is_zero() const noexcept { return terms_.empty(); }
inline std::size_t Polynomial::size() const noexcept { return terms_.size(); }

/// Immutable ring descriptor: ZZ, QQ, Zmod(n), GF(p), Poly(base; vars) or
/// Quot(Poly(field; vars); [generators]).
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { Integers, Rationals, Zmod, PrimeField, Poly, Quot };

  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr zmod(const Integer& n);
  static RingPtr prime_field(const Integer& p);
  static RingPtr poly(RingPtr base, std::vector<std::string> vars);
  /// `poly_ring` must be a polynomial ring over QQ or GF(p).
  static RingPtr quot(const RingPtr& poly_ring, std::vector<Polynomial> generators);

  Kind kind() const noexcept { return kind_; }
  bool is_scalar() const noexcept { return kind_ != Kind::Poly && kind_ != Kind::Quot; }
  bool is_polynomial_like() const noexcept { return !is_scalar(); }
  bool is_field() const noexcept { return kind_ == Kind::Rationals || kind_ == Kind::PrimeField; }
  bool is_finite() const noexcept { return kind_ == Kind::Zmod || kind_ == Kind::PrimeField; }
  /// Number of elements of a finite ring.
  const Integer& modulus() const;

  /// Poly: the coefficient ring. Quot: the ambient polynomial ring.
  const RingPtr& base() const;
  /// Poly/Quot: the ring of polynomial coefficients.
  const RingPtr& coefficient_ring() const;
  /// Poly: own variables. Quot: variables of the ambient ring.
  const std::vector<std::string>& vars() const;
  std::size_t nvars() const { return vars().size(); }
  const GroebnerBasis& ideal() const;
  const std::vector<Polynomial>& ideal_generators() const;

  /// Canonical text, also the identity of the ring.
  const std::string& descriptor() const noexcept { return descriptor_; }
  friend bool operator==(const Ring& a, const Ring& b) { return a.descriptor_ == b.descriptor_; }

  Element zero() const;
  Element one() const;
  Element from_integer(const Integer& n) const;
  /// Throws RingMismatch when the denominator is not invertible here.
  Element from_rational(const Rational& q) const;
  Element from_scalar(const Scalar& s) const;
  /// Poly/Quot: wraps (and for Quot reduces) a polynomial over coefficient_ring().
  Element from_polynomial(Polynomial p) const;
  /// Variable x_index (1-based) of a Poly/Quot ring.
  Element variable(std::size_t index) const;
  /// Resolves a variable name here or in nested coefficient rings.
  std::optional<Element> variable_named(std::string_view name) const;

  /// Canonical map from x.ring() into this ring. Throws UnsupportedConfiguration
  /// when no canonical homomorphism exists.
  Element image(const Element& x) const;
  bool has_image_from(const Ring& other) const;

  bool is_unit(const Element& x) const;
  /// Throws PreconditionViolation when x is not a unit.
  Element inverse(const Element& x) const;

  std::string format(const Element& x) const;

  // Not for direct use: construction goes through the factories above.
  struct Private;
  Ring(const Private&, Kind kind);

 private:
  Element reduce(Polynomial p) const;

  Kind kind_;
  Integer modulus_;
  RingPtr base_;
  RingPtr coeffs_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> ideal_generators_;
  std::shared_ptr<const GroebnerBasis> ideal_;
  std::string descriptor_;
};

}  // namespace trdeg
