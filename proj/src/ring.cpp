#include "trdeg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/ordering.hpp"

namespace trdeg {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr coeffs) : coeffs_(std::move(coeffs)) {}
Polynomial::Polynomial(const Polynomial&) = default;
Polynomial::Polynomial(Polynomial&&) noexcept = default;
Polynomial& Polynomial::operator=(const Polynomial&) = default;
Polynomial& Polynomial::operator=(Polynomial&&) noexcept = default;
Polynomial::~Polynomial() = default;

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b)) {
    throw RingMismatch("operands live in " + a->descriptor() + " and " + b->descriptor());
  }
}

}  // namespace

Polynomial Polynomial::constant(const Element& c) {
  return term(Monomial{}, c);
}

Polynomial Polynomial::term(const Monomial& m, const Element& c) {
  Polynomial p(c.ring_ptr());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr coeffs, std::vector<Term> terms) {
  Polynomial p(std::move(coeffs));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    require_same_ring(p.coeffs_, t.coeff.ring_ptr());
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Var Polynomial::max_var() const {
  Var v = 0;
  for (const auto& t : terms_) v = std::max(v, t.mono.max_var());
  return v;
}

Element Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return coeffs_->zero();
}

const Term& Polynomial::leading_term(const MonomialOrdering& ord) const {
  if (terms_.empty()) throw PreconditionViolation("zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (ord.less(best->mono, t.mono)) best = &t;
  }
  return *best;
}

const Term& Polynomial::trailing_term(const MonomialOrdering& ord) const {
  if (terms_.empty()) throw PreconditionViolation("zero polynomial has no trailing term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (ord.less(t.mono, best->mono)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(coeffs_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

namespace {

template <class Combine>
Polynomial merge(const Polynomial& a, const Polynomial& b, Combine combine, bool negate_b) {
  require_same_ring(a.coeff_ring(), b.coeff_ring());
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono < y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono < x[i].mono) {
      out.push_back(negate_b ? Term{y[j].mono, -y[j].coeff} : y[j]);
      ++j;
    } else {
      Element c = combine(x[i].coeff, y[j].coeff);
      if (!c.is_zero()) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_terms(a.coeff_ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return merge(a, b, [](const Element& u, const Element& v) { return u + v; }, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return merge(a, b, [](const Element& u, const Element& v) { return u - v; }, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.coeffs_, b.coeffs_);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(a.coeffs_, std::move(products));
}

Polynomial Polynomial::scaled(const Monomial& m, const Element& c) const {
  require_same_ring(coeffs_, c.ring_ptr());
  Polynomial p(coeffs_);
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the (multiplicative) storage order.
  for (const auto& t : terms_) {
    Element k = t.coeff * c;
    if (!k.is_zero()) p.terms_.push_back({t.mono * m, std::move(k)});
  }
  return p;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(coeffs_->one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.coeffs_ == *b.coeffs_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  const auto display = MonomialOrdering::grevlex();
  std::sort(order.begin(), order.end(),
            [&](const Term* a, const Term* b) { return display.less(b->mono, a->mono); });
  std::string out;
  for (const Term* t : order) {
    std::string c = t->coeff.to_string();
    std::string piece;
    if (t->mono.is_one()) {
      piece = c;
    } else if (t->coeff.is_one()) {
      piece = t->mono.to_string(names);
    } else if (c == "-1") {
      piece = "-" + t->mono.to_string(names);
    } else {
      bool compound = !t->coeff.is_scalar() && t->coeff.poly().size() > 1;
      piece = (compound ? "(" + c + ")" : c) + "*" + t->mono.to_string(names);
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(RingPtr ring, Scalar value) : ring_(std::move(ring)), rep_(std::move(value)) {}
Element::Element(RingPtr ring, Polynomial value) : ring_(std::move(ring)), rep_(std::move(value)) {}

const Scalar& Element::scalar() const {
  if (const auto* s = std::get_if<Scalar>(&rep_)) return *s;
  throw RingMismatch("element of " + ring_->descriptor() + " is not a scalar");
}

const Polynomial& Element::poly() const {
  if (const auto* p = std::get_if<Polynomial>(&rep_)) return *p;
  throw RingMismatch("element of " + ring_->descriptor() + " is not a polynomial");
}

bool Element::is_zero() const {
  if (const auto* s = std::get_if<Scalar>(&rep_)) return s->is_zero();
  return std::get<Polynomial>(rep_).is_zero();
}

bool Element::is_one() const {
  if (const auto* s = std::get_if<Scalar>(&rep_)) return s->is_one();
  const auto& p = std::get<Polynomial>(rep_);
  return p.size() == 1 && p.terms().front().mono.is_one() && p.terms().front().coeff.is_one();
}

Element Element::pow(unsigned long e) const {
  if (const auto* s = std::get_if<Scalar>(&rep_)) return Element(ring_, s->pow(e));
  Element result = ring_->one();
  Element base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Element::to_string() const { return ring_->format(*this); }

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_scalar()) return Element(a.ring_, a.scalar() + b.scalar());
  // Sums of normal forms are normal forms, so Quot needs no reduction here.
  return Element(a.ring_, a.poly() + b.poly());
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_scalar()) return Element(a.ring_, a.scalar() - b.scalar());
  return Element(a.ring_, a.poly() - b.poly());
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_scalar()) return Element(a.ring_, a.scalar() * b.scalar());
  if (a.ring_->kind() == Ring::Kind::Quot) return a.ring_->from_polynomial(a.poly() * b.poly());
  return Element(a.ring_, a.poly() * b.poly());
}

Element operator-(const Element& a) {
  if (a.is_scalar()) return Element(a.ring_, -a.scalar());
  return Element(a.ring_, -a.poly());
}

bool operator==(const Element& a, const Element& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  if (a.is_scalar() != b.is_scalar()) return false;
  if (a.is_scalar()) return a.scalar() == b.scalar();
  return a.poly() == b.poly();
}

// ---------------------------------------------------------------------------
// Ring

struct Ring::Private {};

Ring::Ring(const Private&, Kind kind) : kind_(kind) {}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void collect_names(const Ring& r, std::unordered_set<std::string>& out) {
  if (r.kind() == Ring::Kind::Poly) {
    out.insert(r.vars().begin(), r.vars().end());
    collect_names(*r.base(), out);
  } else if (r.kind() == Ring::Kind::Quot) {
    collect_names(*r.base(), out);
  }
}

}  // namespace

RingPtr Ring::integers() {
  static const RingPtr zz = [] {
    auto r = std::make_shared<Ring>(Private{}, Kind::Integers);
    r->descriptor_ = "ZZ";
    return r;
  }();
  return zz;
}

RingPtr Ring::rationals() {
  static const RingPtr qq = [] {
    auto r = std::make_shared<Ring>(Private{}, Kind::Rationals);
    r->descriptor_ = "QQ";
    return r;
  }();
  return qq;
}

RingPtr Ring::zmod(const Integer& n) {
  if (n < 2) throw PreconditionViolation("Zmod(n) requires n >= 2, got " + n.get_str());
  auto r = std::make_shared<Ring>(Private{}, Kind::Zmod);
  r->modulus_ = n;
  r->descriptor_ = "Zmod(" + n.get_str() + ")";
  return r;
}

RingPtr Ring::prime_field(const Integer& p) {
  if (!is_probable_prime(p)) throw PreconditionViolation("GF(p) requires a prime, got " + p.get_str());
  auto r = std::make_shared<Ring>(Private{}, Kind::PrimeField);
  r->modulus_ = p;
  r->descriptor_ = "GF(" + p.get_str() + ")";
  return r;
}

RingPtr Ring::poly(RingPtr base, std::vector<std::string> vars) {
  if (vars.empty()) throw PreconditionViolation("polynomial ring needs at least one variable");
  std::unordered_set<std::string> seen;
  collect_names(*base, seen);
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw PreconditionViolation("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionViolation("variable '" + v + "' declared twice");
  }
  auto r = std::make_shared<Ring>(Private{}, Kind::Poly);
  r->descriptor_ = "Poly(" + base->descriptor() + "; ";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) r->descriptor_ += ',';
    r->descriptor_ += vars[i];
  }
  r->descriptor_ += ")";
  r->coeffs_ = base;
  r->base_ = std::move(base);
  r->vars_ = std::move(vars);
  return r;
}

RingPtr Ring::quot(const RingPtr& poly_ring, std::vector<Polynomial> generators) {
  if (poly_ring->kind() != Kind::Poly || !poly_ring->base()->is_field()) {
    throw UnsupportedConfiguration("Quot needs a polynomial ring over QQ or GF(p), got " +
                                   poly_ring->descriptor());
  }
  for (const auto& g : generators) require_same_ring(g.coeff_ring(), poly_ring->base());
  auto r = std::make_shared<Ring>(Private{}, Kind::Quot);
  r->base_ = poly_ring;
  r->coeffs_ = poly_ring->base();
  r->vars_ = poly_ring->vars();
  r->ideal_ = std::make_shared<const GroebnerBasis>(
      buchberger(poly_ring, generators, MonomialOrdering::grevlex()));
  r->descriptor_ = "Quot(" + poly_ring->descriptor() + "; [";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) r->descriptor_ += ", ";
    r->descriptor_ += generators[i].to_string(r->vars_);
  }
  r->descriptor_ += "])";
  r->ideal_generators_ = std::move(generators);
  return r;
}

const Integer& Ring::modulus() const {
  if (!is_finite()) throw RingMismatch(descriptor_ + " is not a finite ring");
  return modulus_;
}

const RingPtr& Ring::base() const {
  if (is_scalar()) throw RingMismatch(descriptor_ + " has no base ring");
  return base_;
}

const RingPtr& Ring::coefficient_ring() const {
  if (is_scalar()) throw RingMismatch(descriptor_ + " has no coefficient ring");
  return coeffs_;
}

const std::vector<std::string>& Ring::vars() const {
  if (is_scalar()) throw RingMismatch(descriptor_ + " has no variables");
  return vars_;
}

const GroebnerBasis& Ring::ideal() const {
  if (kind_ != Kind::Quot) throw RingMismatch(descriptor_ + " is not a quotient ring");
  return *ideal_;
}

const std::vector<Polynomial>& Ring::ideal_generators() const {
  if (kind_ != Kind::Quot) throw RingMismatch(descriptor_ + " is not a quotient ring");
  return ideal_generators_;
}

Element Ring::zero() const { return from_integer(Integer(0)); }
Element Ring::one() const { return from_integer(Integer(1)); }

Element Ring::from_integer(const Integer& n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::Integers:
      return Element(self, Scalar::integer(n));
    case Kind::Rationals:
      return Element(self, Scalar::rational(Rational(n)));
    case Kind::Zmod:
      return Element(self, Scalar::residue(n, modulus_));
    case Kind::PrimeField:
      return Element(self, Scalar::prime_field(n, modulus_));
    case Kind::Poly:
      return Element(self, Polynomial::constant(base_->from_integer(n)));
    case Kind::Quot:
      return reduce(Polynomial::constant(coeffs_->from_integer(n)));
  }
  throw InternalInconsistency("unknown ring kind");
}

Element Ring::from_rational(const Rational& q_in) const {
  Rational q = q_in;
  q.canonicalize();
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::Integers:
    case Kind::Zmod:
      if (q.get_den() != 1) {
        throw RingMismatch("coefficient " + q.get_str() + " is not in " + descriptor_);
      }
      return from_integer(q.get_num());
    case Kind::Rationals:
      return Element(self, Scalar::rational(q));
    case Kind::PrimeField: {
      Scalar den = Scalar::prime_field(q.get_den(), modulus_);
      if (den.is_zero()) {
        throw RingMismatch("denominator of " + q.get_str() + " vanishes in " + descriptor_);
      }
      return Element(self, Scalar::prime_field(q.get_num(), modulus_) * den.inverse());
    }
    case Kind::Poly:
      return Element(self, Polynomial::constant(base_->from_rational(q)));
    case Kind::Quot:
      return reduce(Polynomial::constant(coeffs_->from_rational(q)));
  }
  throw InternalInconsistency("unknown ring kind");
}

Element Ring::from_scalar(const Scalar& s) const {
  auto self = shared_from_this();
  auto mismatch = [&] {
    return RingMismatch("scalar " + s.to_string() + " does not belong to " + descriptor_);
  };
  switch (kind_) {
    case Kind::Integers:
      if (s.kind() != Scalar::Kind::Integer) throw mismatch();
      return Element(self, s);
    case Kind::Rationals:
      if (s.kind() != Scalar::Kind::Rational) throw mismatch();
      return Element(self, s);
    case Kind::Zmod:
      if (s.kind() != Scalar::Kind::Residue || s.modulus() != modulus_) throw mismatch();
      return Element(self, s);
    case Kind::PrimeField:
      if (s.kind() != Scalar::Kind::PrimeField || s.modulus() != modulus_) throw mismatch();
      return Element(self, s);
    case Kind::Poly:
      return Element(self, Polynomial::constant(base_->from_scalar(s)));
    case Kind::Quot:
      return reduce(Polynomial::constant(coeffs_->from_scalar(s)));
  }
  throw InternalInconsistency("unknown ring kind");
}

Element Ring::from_polynomial(Polynomial p) const {
  if (is_scalar()) throw RingMismatch(descriptor_ + " has no polynomial elements");
  require_same_ring(p.coeff_ring(), coeffs_);
  if (kind_ == Kind::Quot) return reduce(std::move(p));
  return Element(shared_from_this(), std::move(p));
}

Element Ring::reduce(Polynomial p) const {
  return Element(shared_from_this(), normal_form(p, *ideal_));
}

Element Ring::variable(std::size_t index) const {
  if (is_scalar() || index == 0 || index > vars_.size()) {
    throw PreconditionViolation("no variable " + std::to_string(index) + " in " + descriptor_);
  }
  return from_polynomial(
      Polynomial::term(Monomial::variable(static_cast<Var>(index)), coeffs_->one()));
}

std::optional<Element> Ring::variable_named(std::string_view name) const {
  if (is_scalar()) return std::nullopt;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return variable(i + 1);
  }
  if (kind_ == Kind::Poly) {
    if (auto inner = base_->variable_named(name)) {
      return Element(shared_from_this(), Polynomial::constant(*inner));
    }
  }
  return std::nullopt;
}

bool Ring::has_image_from(const Ring& src) const {
  if (src == *this || src.kind_ == Kind::Integers) return true;
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return false;
    case Kind::Zmod:
    case Kind::PrimeField:
      return src.is_finite() && mpz_divisible_p(src.modulus_.get_mpz_t(), modulus_.get_mpz_t());
    case Kind::Poly:
      return base_->has_image_from(src);
    case Kind::Quot:
      return *base_ == src || base_->has_image_from(src);
  }
  return false;
}

Element Ring::image(const Element& x) const {
  const Ring& src = x.ring();
  if (src == *this) {
    return x.is_scalar() ? Element(shared_from_this(), x.scalar())
                         : Element(shared_from_this(), x.poly());
  }
  if (!has_image_from(src)) {
    throw UnsupportedConfiguration("no canonical map from " + src.descriptor() + " to " +
                                   descriptor_);
  }
  if (src.kind_ == Kind::Integers) return from_integer(x.scalar().value());
  switch (kind_) {
    case Kind::Zmod:
    case Kind::PrimeField:
      return from_integer(x.scalar().value());
    case Kind::Poly:
      return Element(shared_from_this(), Polynomial::constant(base_->image(x)));
    case Kind::Quot:
      if (*base_ == src) return reduce(x.poly());
      return reduce(base_->image(x).poly());
    default:
      break;
  }
  throw InternalInconsistency("image: unreachable");
}

bool Ring::is_unit(const Element& x) const {
  require_same_ring(shared_from_this(), x.ring_ptr());
  if (x.is_scalar()) return x.scalar().is_unit();
  if (kind_ == Kind::Quot) {
    std::vector<Polynomial> gens = ideal_->polys();
    gens.push_back(x.poly());
    return ideal_membership(base_, Polynomial::constant(coeffs_->one()), gens, ideal_->ordering());
  }
  // Constant units only; exact for polynomial rings over a domain.
  const auto& p = x.poly();
  return p.size() == 1 && p.terms().front().mono.is_one() &&
         base_->is_unit(p.terms().front().coeff);
}

Element Ring::inverse(const Element& x) const {
  if (!is_unit(x)) throw PreconditionViolation(format(x) + " is not a unit in " + descriptor_);
  if (x.is_scalar()) return Element(shared_from_this(), x.scalar().inverse());
  if (kind_ == Kind::Quot) {
    std::vector<Polynomial> gens{x.poly()};
    for (const auto& g : ideal_->polys()) gens.push_back(g);
    auto cof = ideal_lift(base_, Polynomial::constant(coeffs_->one()), gens, ideal_->ordering());
    return reduce(cof->front());
  }
  const auto& t = x.poly().terms().front();
  return Element(shared_from_this(), Polynomial::constant(base_->inverse(t.coeff)));
}

std::string Ring::format(const Element& x) const {
  if (x.is_scalar()) return x.scalar().to_string();
  return x.poly().to_string(vars_);
}

}  // namespace trdeg
