#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace trdeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// An exact element of one of the base rings: ZZ, QQ, ZZ/n or GF(p).
///
/// Residues are always stored in [0, n); rationals in lowest terms with a
/// positive denominator. Binary operations require both operands to be of the
/// same kind and modulus and throw RingMismatch otherwise.
class Scalar {
 public:
  enum class Kind : std::uint8_t { Integer, Rational, Residue, PrimeField };

  static Scalar integer(Integer value);
  static Scalar rational(Rational value);
  /// Requires modulus >= 2.
  static Scalar residue(const Integer& value, const Integer& modulus);
  /// Requires `prime` to pass a primality test.
  static Scalar prime_field(const Integer& value, const Integer& prime);

  Kind kind() const noexcept { return kind_; }

  /// Integer value, or the representative in [0, n) for residues.
  /// For rationals this is the numerator.
  const Integer& value() const noexcept { return num_; }
  Rational rational() const;
  /// Modulus of a residue / prime-field element.
  const Integer& modulus() const;

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const;
  bool is_unit() const;
  /// Throws PreconditionViolation when the value is not a unit.
  Scalar inverse() const;
  Scalar pow(unsigned long exponent) const;

  /// A scalar of the same kind and modulus holding `value`.
  Scalar like(const Integer& value) const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(Kind kind, Integer num, Integer aux)
      : kind_(kind), num_(std::move(num)), aux_(std::move(aux)) {}

  void require_compatible(const Scalar& other) const;

  Kind kind_;
  Integer num_;
  // Denominator for rationals, modulus for residues; unused for integers.
  Integer aux_;
};

bool is_probable_prime(const Integer& n);

}  // namespace trdeg
