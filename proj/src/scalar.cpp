#include "trdeg/scalar.hpp"

#include "trdeg/error.hpp"

namespace trdeg {

namespace {

Integer reduce_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Scalar Scalar::integer(Integer value) {
  return Scalar(Kind::Integer, std::move(value), Integer(0));
}

Scalar Scalar::rational(Rational value) {
  value.canonicalize();
  return Scalar(Kind::Rational, value.get_num(), value.get_den());
}

Scalar Scalar::residue(const Integer& value, const Integer& modulus) {
  if (modulus < 2) {
    throw PreconditionViolation("residue modulus must be at least 2, got " +
                                modulus.get_str());
  }
  return Scalar(Kind::Residue, reduce_mod(value, modulus), modulus);
}

Scalar Scalar::prime_field(const Integer& value, const Integer& prime) {
  if (!is_probable_prime(prime)) {
    throw PreconditionViolation("GF(p) requires a prime, got " + prime.get_str());
  }
  return Scalar(Kind::PrimeField, reduce_mod(value, prime), prime);
}

Rational Scalar::rational() const {
  if (kind_ == Kind::Rational) {
    Rational q;
    mpq_set_num(q.get_mpq_t(), num_.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), aux_.get_mpz_t());
    return q;
  }
  return Rational(num_);
}

const Integer& Scalar::modulus() const {
  if (kind_ != Kind::Residue && kind_ != Kind::PrimeField) {
    throw RingMismatch("scalar has no modulus");
  }
  return aux_;
}

bool Scalar::is_one() const {
  if (kind_ == Kind::Rational) return num_ == 1 && aux_ == 1;
  return num_ == 1;
}

bool Scalar::is_unit() const {
  switch (kind_) {
    case Kind::Integer:
      return num_ == 1 || num_ == -1;
    case Kind::Rational:
    case Kind::PrimeField:
      return num_ != 0;
    case Kind::Residue: {
      Integer g;
      mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), aux_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) {
    throw PreconditionViolation("not a unit: " + to_string());
  }
  switch (kind_) {
    case Kind::Integer:
      return *this;
    case Kind::Rational: {
      Rational q = rational();
      return rational(Rational(1) / q);
    }
    case Kind::Residue:
    case Kind::PrimeField: {
      Integer inv;
      mpz_invert(inv.get_mpz_t(), num_.get_mpz_t(), aux_.get_mpz_t());
      return Scalar(kind_, inv, aux_);
    }
  }
  return *this;
}

Scalar Scalar::pow(unsigned long exponent) const {
  switch (kind_) {
    case Kind::Integer: {
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), num_.get_mpz_t(), exponent);
      return integer(r);
    }
    case Kind::Rational: {
      Integer n, d;
      mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), exponent);
      mpz_pow_ui(d.get_mpz_t(), aux_.get_mpz_t(), exponent);
      return Scalar(Kind::Rational, n, d);
    }
    case Kind::Residue:
    case Kind::PrimeField: {
      Integer r;
      mpz_powm_ui(r.get_mpz_t(), num_.get_mpz_t(), exponent, aux_.get_mpz_t());
      return Scalar(kind_, r, aux_);
    }
  }
  return *this;
}

Scalar Scalar::like(const Integer& value) const {
  switch (kind_) {
    case Kind::Integer:
      return integer(value);
    case Kind::Rational:
      return Scalar(Kind::Rational, value, Integer(1));
    case Kind::Residue:
    case Kind::PrimeField:
      return Scalar(kind_, reduce_mod(value, aux_), aux_);
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (kind_ == Kind::Rational && aux_ != 1) {
    return num_.get_str() + "/" + aux_.get_str();
  }
  return num_.get_str();
}

void Scalar::require_compatible(const Scalar& other) const {
  if (kind_ != other.kind_) {
    throw RingMismatch("scalars of different kinds");
  }
  if ((kind_ == Kind::Residue || kind_ == Kind::PrimeField) && aux_ != other.aux_) {
    throw RingMismatch("residues with different moduli " + aux_.get_str() + " and " +
                       other.aux_.get_str());
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.require_compatible(b);
  switch (a.kind_) {
    case Scalar::Kind::Integer:
      return Scalar::integer(a.num_ + b.num_);
    case Scalar::Kind::Rational:
      return Scalar::rational(a.rational() + b.rational());
    default:
      return Scalar(a.kind_, reduce_mod(a.num_ + b.num_, a.aux_), a.aux_);
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  a.require_compatible(b);
  switch (a.kind_) {
    case Scalar::Kind::Integer:
      return Scalar::integer(a.num_ - b.num_);
    case Scalar::Kind::Rational:
      return Scalar::rational(a.rational() - b.rational());
    default:
      return Scalar(a.kind_, reduce_mod(a.num_ - b.num_, a.aux_), a.aux_);
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_compatible(b);
  switch (a.kind_) {
    case Scalar::Kind::Integer:
      return Scalar::integer(a.num_ * b.num_);
    case Scalar::Kind::Rational:
      return Scalar::rational(a.rational() * b.rational());
    default:
      return Scalar(a.kind_, reduce_mod(a.num_ * b.num_, a.aux_), a.aux_);
  }
}

Scalar operator-(const Scalar& a) {
  switch (a.kind_) {
    case Scalar::Kind::Integer:
      return Scalar::integer(-a.num_);
    case Scalar::Kind::Rational:
      return Scalar(a.kind_, -a.num_, a.aux_);
    default:
      return Scalar(a.kind_, reduce_mod(-a.num_, a.aux_), a.aux_);
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.kind_ == b.kind_ && a.num_ == b.num_ && a.aux_ == b.aux_;
}

}  // namespace trdeg
