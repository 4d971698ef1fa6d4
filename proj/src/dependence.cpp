#include "trdeg/dependence.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <variant>

#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/linalg.hpp"

namespace trdeg {

// ---------------------------------------------------------------------------
// Configurations

AlgebraConfig AlgebraConfig::make(RingPtr coeffs, RingPtr algebra) {
  const Ring& r = *coeffs;
  const Ring& a = *algebra;
  auto field_poly_like = [](const Ring& x) {
    return (x.kind() == Ring::Kind::Poly || x.kind() == Ring::Kind::Quot) &&
           x.coefficient_ring()->is_field() &&
           (x.kind() == Ring::Kind::Quot || x.base()->is_scalar());
  };
  std::optional<Kind> kind;
  if (r == a) {
    switch (r.kind()) {
      case Ring::Kind::Integers: kind = Kind::IntegerSelf; break;
      case Ring::Kind::Zmod: kind = Kind::ResidueSelf; break;
      case Ring::Kind::Rationals:
      case Ring::Kind::PrimeField: kind = Kind::FieldSelf; break;
      case Ring::Kind::Poly:
      case Ring::Kind::Quot:
        if (field_poly_like(r)) kind = Kind::PolynomialSelf;
        break;
    }
  } else if (r.kind() == Ring::Kind::Integers) {
    if (a.kind() == Ring::Kind::Zmod ||
        (a.kind() == Ring::Kind::Poly && a.base()->kind() == Ring::Kind::Integers)) {
      kind = Kind::IntegerInto;
    }
  } else if (r.is_field() && field_poly_like(a) && *a.coefficient_ring() == r) {
    kind = Kind::FieldInto;
  }
  if (!kind) {
    throw UnsupportedConfiguration("unsupported configuration: R = " + r.descriptor() +
                                   ", A = " + a.descriptor());
  }
  return AlgebraConfig{std::move(coeffs), std::move(algebra), *kind};
}

Element AlgebraConfig::map(const Element& r) const {
  if (!(r.ring() == *coeffs)) {
    throw RingMismatch("coefficient " + r.to_string() + " is not in " + coeffs->descriptor());
  }
  return algebra->image(r);
}

char AlgebraConfig::letter() const {
  switch (kind) {
    case Kind::IntegerSelf: return 'a';
    case Kind::ResidueSelf: return 'b';
    case Kind::IntegerInto: return 'c';
    case Kind::PolynomialSelf: return 'd';
    case Kind::FieldInto: return 'e';
    case Kind::FieldSelf: return 'f';
  }
  return '?';
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Dependent: return "dependent";
    case VerdictKind::NoRelationUpTo: return "no_relation";
    case VerdictKind::ResourceExceeded: return "resource_exceeded";
  }
  return "?";
}

std::uint64_t default_monomial_cap() {
  constexpr std::uint64_t kDefault = 20000;
  const char* env = std::getenv("TRDEG_MONOMIAL_CAP");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

// ---------------------------------------------------------------------------
// Evaluation and the submonic predicate

Element eval_poly(const Polynomial& f, std::span<const Element> args,
                  const AlgebraConfig& config) {
  if (!(*f.coeff_ring() == *config.coeffs)) {
    throw RingMismatch("polynomial over " + f.coeff_ring()->descriptor() + ", expected " +
                       config.coeffs->descriptor());
  }
  if (f.max_var() > args.size()) {
    throw PreconditionViolation("polynomial mentions x" + std::to_string(f.max_var()) +
                                " but only " + std::to_string(args.size()) +
                                " arguments were given");
  }
  for (const auto& a : args) {
    if (!(a.ring() == *config.algebra)) {
      throw RingMismatch("argument " + a.to_string() + " is not in " +
                         config.algebra->descriptor());
    }
  }
  Element acc = config.algebra->zero();
  for (const Term& t : f.terms()) {
    Element v = config.map(t.coeff);
    for (const auto& [var, e] : t.mono.entries()) v = v * args[var - 1].pow(e);
    acc = acc + v;
  }
  return acc;
}

Term trailing_term(const Polynomial& f, const MonomialOrdering& ord) {
  if (f.is_zero()) throw PreconditionViolation("the zero polynomial has no trailing term");
  return f.trailing_term(ord);
}

bool is_submonic(const Polynomial& f, const MonomialOrdering& ord) {
  return !f.is_zero() && f.trailing_term(ord).coeff.is_one();
}

VerifyResult verify_certificate(const SubmonicCertificate& cert) {
  try {
    const AlgebraConfig check = AlgebraConfig::make(cert.config.coeffs, cert.config.algebra);
    if (check.kind != cert.config.kind) return {false, "config_mismatch"};
    if (cert.poly.is_zero()) return {false, "zero_polynomial"};
    if (!(*cert.poly.coeff_ring() == *cert.config.coeffs)) return {false, "ring_mismatch"};
    for (const auto& e : cert.elements) {
      if (!(e.ring() == *cert.config.algebra)) return {false, "ring_mismatch"};
    }
    if (cert.poly.max_var() > cert.elements.size()) return {false, "arity"};
    const Term& tail = cert.poly.trailing_term(cert.ordering);
    if (!tail.coeff.is_one()) return {false, "not_submonic"};
    if (!(tail.mono == cert.trailing)) return {false, "trailing_mismatch"};
    if (!eval_poly(cert.poly, cert.elements, cert.config).is_zero()) {
      return {false, "nonvanishing"};
    }
    return {true, "ok"};
  } catch (const UnsupportedConfiguration&) {
    return {false, "unsupported_configuration"};
  } catch (const Error& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

// ---------------------------------------------------------------------------
// Search

namespace {

// Values t(a) for every candidate monomial, sharing powers of each a_i.
std::vector<Element> monomial_values(std::span<const Monomial> monos,
                                     std::span<const Element> elems, unsigned max_degree) {
  std::vector<std::vector<Element>> powers;
  for (const auto& a : elems) {
    std::vector<Element> p{a.ring().one()};
    for (unsigned e = 1; e <= max_degree; ++e) p.push_back(p.back() * a);
    powers.push_back(std::move(p));
  }
  std::vector<Element> out;
  out.reserve(monos.size());
  for (const auto& m : monos) {
    Element v = elems.front().ring().one();
    for (const auto& [var, e] : m.entries()) v = v * powers[var - 1][e];
    out.push_back(std::move(v));
  }
  return out;
}

// Linear engine: coordinates of A-values in ZZ^N, (Z/n)^N or k^N.
class LinearEngine {
 public:
  explicit LinearEngine(const AlgebraConfig& config) : config_(config) {
    const Ring& a = *config.algebra;
    switch (config.kind) {
      case AlgebraConfig::Kind::IntegerSelf:
        integer_ = true;
        solve_ring_ = Ring::integers();
        break;
      case AlgebraConfig::Kind::ResidueSelf:
        integer_ = true;
        modulus_ = a.modulus();
        solve_ring_ = config.coeffs;
        break;
      case AlgebraConfig::Kind::IntegerInto:
        integer_ = true;
        if (a.kind() == Ring::Kind::Zmod) {
          modulus_ = a.modulus();
          solve_ring_ = config.algebra;
        } else {
          solve_ring_ = Ring::integers();
        }
        break;
      case AlgebraConfig::Kind::FieldInto:
      case AlgebraConfig::Kind::FieldSelf:
        integer_ = false;
        solve_ring_ = config.coeffs;
        break;
      case AlgebraConfig::Kind::PolynomialSelf:
        throw InternalInconsistency("the linear engine does not handle ideal configurations");
    }
  }

  using Space = std::variant<IntegerLattice, FieldSpan>;

  Space empty_space() const {
    if (integer_) return IntegerLattice(modulus_);
    return FieldSpan{};
  }

  void insert(Space& s, const Element& x) {
    if (integer_) std::get<IntegerLattice>(s).insert(int_vector(x));
    else std::get<FieldSpan>(s).insert(field_vector(x));
  }

  bool contains(const Space& s, const Element& x) {
    if (integer_) return std::get<IntegerLattice>(s).contains(int_vector(x));
    return std::get<FieldSpan>(s).contains(field_vector(x));
  }

  // Coefficients c_j in R with sum c_j * gens[j] = target.
  std::optional<std::vector<Element>> solve(const Element& target,
                                            std::span<const Element> gens) {
    const std::vector<Scalar> t = dense(target);
    std::vector<std::vector<Scalar>> g;
    for (const auto& x : gens) g.push_back(dense(x));
    const SpanSolution sol = solve_in_span(t, g, *solve_ring_);
    if (!sol.in_span()) return std::nullopt;
    std::vector<Element> out;
    for (const Scalar& s : *sol.coefficients) {
      if (config_.coeffs->kind() == Ring::Kind::Integers) {
        out.push_back(config_.coeffs->from_integer(s.value()));
      } else {
        out.push_back(config_.coeffs->from_scalar(s));
      }
    }
    return out;
  }

 private:
  std::size_t coordinate(const Monomial& m) {
    auto [it, inserted] = coords_.try_emplace(m, coords_.size());
    return it->second;
  }

  // Entries of x as (coordinate, scalar) pairs.
  std::vector<std::pair<std::size_t, Scalar>> entries(const Element& x) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    if (x.is_scalar()) {
      if (!x.scalar().is_zero()) out.emplace_back(0, x.scalar());
      return out;
    }
    for (const Term& t : x.poly().terms()) out.emplace_back(coordinate(t.mono), t.coeff.scalar());
    return out;
  }

  SparseIntVector int_vector(const Element& x) {
    SparseIntVector v;
    for (auto& [c, s] : entries(x)) v.emplace(c, s.value());
    return v;
  }

  SparseVector field_vector(const Element& x) {
    SparseVector v;
    for (auto& [c, s] : entries(x)) v.emplace(c, s);
    return v;
  }

  std::vector<Scalar> dense(const Element& x) {
    const auto e = entries(x);
    const Scalar zero = solve_ring_->zero().scalar();
    std::vector<Scalar> out(coords_.empty() ? 1 : coords_.size(), zero);
    for (const auto& [c, s] : e) {
      if (out.size() <= c) out.resize(c + 1, zero);
      out[c] = solve_ring_->kind() == Ring::Kind::Zmod ? Scalar::residue(s.value(), *modulus_) : s;
    }
    return out;
  }

  const AlgebraConfig& config_;
  bool integer_ = true;
  std::optional<Integer> modulus_;
  RingPtr solve_ring_;
  std::map<Monomial, std::size_t> coords_;
};

struct Found {
  std::size_t trailing;
  std::vector<std::pair<std::size_t, Element>> coeffs;  // (monomial index, c) over R
};

std::optional<Found> linear_search(const AlgebraConfig& config, std::span<const Element> values) {
  LinearEngine engine(config);
  const std::size_t n = values.size();

  // Decreasing sweep: t qualifies iff t(a) lies in the span of all larger values.
  std::optional<std::size_t> best;
  auto space = engine.empty_space();
  for (std::size_t i = n; i-- > 0;) {
    if (engine.contains(space, values[i])) best = i;
    engine.insert(space, values[i]);
  }
  if (!best) return std::nullopt;

  // Shortest increasing run above t that already reaches t(a).
  std::size_t stop = *best;
  auto prefix = engine.empty_space();
  while (!engine.contains(prefix, values[*best])) {
    ++stop;
    if (stop >= n) throw InternalInconsistency("span membership lost in the prefix pass");
    engine.insert(prefix, values[stop]);
  }

  const std::span<const Element> gens = values.subspan(*best + 1, stop - *best);
  auto sol = engine.solve(-values[*best], gens);
  if (!sol) throw InternalInconsistency("canonical solve disagrees with the incremental span");
  Found found{*best, {}};
  for (std::size_t j = 0; j < sol->size(); ++j) {
    if (!(*sol)[j].is_zero()) found.coeffs.emplace_back(*best + 1 + j, (*sol)[j]);
  }
  return found;
}

std::optional<Found> ideal_search(const AlgebraConfig& config, std::span<const Element> values) {
  const RingPtr& a = config.algebra;
  const RingPtr ambient = a->kind() == Ring::Kind::Quot ? a->base() : a;
  const MonomialOrdering gb_ord = MonomialOrdering::grevlex();
  std::vector<Polynomial> quot_gens;
  if (a->kind() == Ring::Kind::Quot) quot_gens = a->ideal().polys();

  const std::size_t n = values.size();
  auto extend = [&](const GroebnerBasis& gb, const Polynomial& p) {
    if (p.is_zero() || normal_form(p, gb).is_zero()) return gb;
    std::vector<Polynomial> gens = gb.polys();
    gens.push_back(p);
    return buchberger(ambient, gens, gb_ord);
  };

  std::optional<std::size_t> best;
  GroebnerBasis gb = buchberger(ambient, quot_gens, gb_ord);
  for (std::size_t i = n; i-- > 0;) {
    const Polynomial& p = values[i].poly();
    if (normal_form(p, gb).is_zero()) best = i;
    gb = extend(gb, p);
  }
  if (!best) return std::nullopt;

  const Polynomial& target = values[*best].poly();
  std::size_t stop = *best;
  GroebnerBasis prefix = buchberger(ambient, quot_gens, gb_ord);
  while (!normal_form(target, prefix).is_zero()) {
    ++stop;
    if (stop >= n) throw InternalInconsistency("ideal membership lost in the prefix pass");
    prefix = extend(prefix, values[stop].poly());
  }

  std::vector<Polynomial> gens;
  for (std::size_t j = *best + 1; j <= stop; ++j) gens.push_back(values[j].poly());
  gens.insert(gens.end(), quot_gens.begin(), quot_gens.end());
  const auto lift = ideal_lift(ambient, -target, gens, gb_ord);
  if (!lift) throw InternalInconsistency("ideal lift failed after a positive membership test");

  Found found{*best, {}};
  for (std::size_t j = 0; j + *best < stop; ++j) {
    Element c = a->from_polynomial((*lift)[j]);
    if (!c.is_zero()) found.coeffs.emplace_back(*best + 1 + j, std::move(c));
  }
  return found;
}

}  // namespace

DependenceVerdict search_submonic_relation(const AlgebraConfig& config,
                                           std::span<const Element> elems,
                                           const MonomialOrdering& ord, unsigned max_degree,
                                           const SearchOptions& options) {
  if (elems.empty()) throw PreconditionViolation("the element tuple is empty");
  for (const auto& e : elems) {
    if (!(e.ring() == *config.algebra)) {
      throw RingMismatch("element " + e.to_string() + " is not in " +
                         config.algebra->descriptor());
    }
  }
  const Var nvars = static_cast<Var>(elems.size());
  DependenceVerdict verdict;
  verdict.degree_bound = max_degree;
  verdict.candidates = count_monomials(nvars, max_degree);
  if (verdict.candidates > options.monomial_cap) {
    verdict.kind = VerdictKind::ResourceExceeded;
    return verdict;
  }

  std::vector<Monomial> monos = monomials_up_to_degree(nvars, max_degree);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& s, const Monomial& t) { return ord.less(s, t); });
  const std::vector<Element> values = monomial_values(monos, elems, max_degree);

  const std::optional<Found> found = config.kind == AlgebraConfig::Kind::PolynomialSelf
                                         ? ideal_search(config, values)
                                         : linear_search(config, values);
  if (!found) {
    verdict.kind = VerdictKind::NoRelationUpTo;
    return verdict;
  }

  std::vector<Term> terms;
  terms.push_back({monos[found->trailing], config.coeffs->one()});
  for (const auto& [idx, c] : found->coeffs) terms.push_back({monos[idx], c});
  SubmonicCertificate cert{config,
                           {elems.begin(), elems.end()},
                           ord,
                           Polynomial::from_terms(config.coeffs, std::move(terms)),
                           monos[found->trailing],
                           max_degree,
                           false};
  const VerifyResult check = verify_certificate(cert);
  if (!check.ok) {
    throw InternalInconsistency("search produced a certificate that fails verification: " +
                                check.reason);
  }
  cert.verified = true;
  verdict.kind = VerdictKind::Dependent;
  verdict.certificate = std::move(cert);
  return verdict;
}

// ---------------------------------------------------------------------------
// PID pairs

SubmonicCertificate pid_pair_certificate(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw PreconditionViolation("pid_pair_certificate needs nonzero a and b");
  unsigned n = 0;
  Integer bn = 1;  // b^n
  Integer g;
  while (true) {
    const Integer bn1 = bn * b;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), bn1.get_mpz_t());
    if (mpz_divisible_p(bn.get_mpz_t(), g.get_mpz_t())) break;
    bn = bn1;
    ++n;
  }
  const Integer bn1 = bn * b;
  Integer s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), bn1.get_mpz_t());
  // All solutions are (c + k*bn1/g, d - k*a/g); fix d in [0, |a/g|), which
  // yields d = 0 whenever a divides b^n.
  const Integer step = abs(Integer(a / g));
  Integer d = t * (bn / g);
  mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), step.get_mpz_t());
  const Integer c = (bn - d * bn1) / a;

  const RingPtr zz = Ring::integers();
  const AlgebraConfig config = AlgebraConfig::make(zz, zz);
  std::vector<Term> terms{{n == 0 ? Monomial{} : Monomial::variable(2, n), zz->one()},
                          {Monomial::variable(1), zz->from_integer(-c)},
                          {Monomial::variable(2, n + 1), zz->from_integer(-d)}};
  Polynomial f = Polynomial::from_terms(zz, std::move(terms));
  const MonomialOrdering lex = MonomialOrdering::lex({1, 2});
  SubmonicCertificate cert{config,
                           {zz->from_integer(a), zz->from_integer(b)},
                           lex,
                           f,
                           f.trailing_term(lex).mono,
                           static_cast<unsigned>(f.total_degree()),
                           false};
  const VerifyResult check = verify_certificate(cert);
  if (!check.ok) throw InternalInconsistency("pid certificate fails verification: " + check.reason);
  cert.verified = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Sweeps over a pool

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

DependenceMatrix dependence_matrix(const AlgebraConfig& config, std::span<const Element> pool,
                                   std::size_t arity, const MonomialOrdering& ord,
                                   unsigned max_degree, const SearchOptions& options,
                                   Execution exec) {
  if (pool.empty()) throw PreconditionViolation("the element pool is empty");
  if (arity == 0) throw PreconditionViolation("arity must be at least 1");
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), pool.size(), arity);
  if (count > kTupleCap) {
    throw ResourceExceeded("dependence matrix would enumerate " + count.get_str() +
                           " tuples (cap " + std::to_string(kTupleCap) + ")");
  }
  const auto tuples = combinations(pool.size(), arity);
  std::vector<std::optional<DependenceVerdict>> verdicts(tuples.size());

  auto run = [&](std::size_t i) {
    std::vector<Element> elems;
    for (std::size_t j : tuples[i]) elems.push_back(pool[j]);
    verdicts[i] = search_submonic_relation(config, elems, ord, max_degree, options);
  };

  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < tuples.size(); ++i) run(i);
  } else {
    std::exception_ptr failure;
    const auto total = static_cast<std::ptrdiff_t>(tuples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      try {
        run(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(trdeg_dependence_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  DependenceMatrix out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    switch (verdicts[i]->kind) {
      case VerdictKind::Dependent: ++out.dependent; break;
      case VerdictKind::NoRelationUpTo:
        ++out.no_relation;
        out.candidates.push_back(i);
        break;
      case VerdictKind::ResourceExceeded: ++out.resource_exceeded; break;
    }
    out.tuples.push_back({tuples[i], std::move(*verdicts[i])});
  }
  return out;
}

}  // namespace trdeg
