#include "trdeg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <limits>
#include <random>
#include <sstream>

#include "internal/json_io.hpp"
#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/parse.hpp"

namespace trdeg {

void ExperimentSpec::validate() const {
  if (trials == 0) throw PreconditionViolation("trial count must be positive");
  if (arity == 0) throw PreconditionViolation("arity must be positive");
  if (coeff_bound == 0) throw PreconditionViolation("coefficient bound must be positive");
  if (monomial_cap == 0) throw PreconditionViolation("monomial cap must be positive");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform in [-bound, bound] by rejection, independent of the standard
// library's distribution implementations.
long uniform_symmetric(std::mt19937_64& rng, unsigned long bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<long>(x % span) - static_cast<long>(bound);
}

Element sample_element(std::mt19937_64& rng, const RingPtr& a, unsigned degree,
                       unsigned long bound) {
  while (true) {
    Element e = a->zero();
    if (a->is_scalar()) {
      e = a->from_integer(uniform_symmetric(rng, bound));
    } else {
      const RingPtr& k = a->coefficient_ring();
      std::vector<Term> terms;
      for (const Monomial& m : monomials_up_to_degree(static_cast<Var>(a->nvars()), degree)) {
        terms.push_back({m, k->from_integer(uniform_symmetric(rng, bound))});
      }
      e = a->from_polynomial(Polynomial::from_terms(k, std::move(terms)));
    }
    if (!e.is_zero()) return e;
  }
}

using detail::Json;

Json spec_json(const ExperimentSpec& s) {
  Json j{{"seed", s.seed},
         {"trials", s.trials},
         {"poly_degree", s.poly_degree},
         {"coeff_bound", s.coeff_bound},
         {"arity", s.arity},
         {"ordering", s.ordering},
         {"degree_bound", s.degree_bound},
         {"coeff_ring", s.coeff_ring},
         {"ambient_ring", s.ambient_ring},
         {"monomial_cap", s.monomial_cap},
         {"timing", s.record_timing},
         {"sampling",
          "coefficients uniform in [-coeff_bound, coeff_bound] on every monomial of degree <= "
          "poly_degree; zero elements resampled; trial i seeded by splitmix64(seed, i) into "
          "mt19937_64"}};
  if (!s.fixed_elements.empty()) j["fixed_elements"] = s.fixed_elements;
  return j;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec, Execution exec) {
  spec.validate();
  const RingPtr coeffs = parse_ring(spec.coeff_ring);
  const RingPtr algebra = parse_ring(spec.ambient_ring);
  const AlgebraConfig config = AlgebraConfig::make(coeffs, algebra);
  const MonomialOrdering ord = MonomialOrdering::parse(spec.ordering);
  std::vector<Element> fixed;
  for (const auto& text : spec.fixed_elements) fixed.push_back(parse_element(text, algebra));
  if (!fixed.empty() && fixed.size() != spec.arity) {
    throw PreconditionViolation("fixed_elements must have exactly `arity` entries");
  }
  const SearchOptions options{spec.monomial_cap};

  auto run_trial = [&](std::size_t i) {
    TrialRecord rec;
    rec.index = i;
    if (fixed.empty()) {
      std::mt19937_64 rng(trial_seed(spec.seed, i));
      for (std::size_t k = 0; k < spec.arity; ++k) {
        rec.elements.push_back(sample_element(rng, algebra, spec.poly_degree, spec.coeff_bound));
      }
    } else {
      rec.elements = fixed;
    }
    const auto start = std::chrono::steady_clock::now();
    rec.verdict = search_submonic_relation(config, rec.elements, ord, spec.degree_bound, options);
    if (rec.verdict.certificate) rec.reverified = verify_certificate(*rec.verdict.certificate).ok;
    if (spec.record_timing) {
      rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
    }
    return rec;
  };

  ExperimentReport report;
  report.spec = spec;
  report.trials.resize(spec.trials);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < spec.trials; ++i) report.trials[i] = run_trial(i);
  } else {
    std::exception_ptr failure;
    const auto total = static_cast<std::ptrdiff_t>(spec.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      try {
        report.trials[static_cast<std::size_t>(i)] = run_trial(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(trdeg_experiment_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& t : report.trials) {
    switch (t.verdict.kind) {
      case VerdictKind::Dependent:
        ++report.dependent;
        if (!t.reverified) report.all_verified = false;
        break;
      case VerdictKind::NoRelationUpTo:
        ++report.no_relation;
        report.unresolved.push_back(t.index);
        break;
      case VerdictKind::ResourceExceeded:
        ++report.resource_exceeded;
        report.unresolved.push_back(t.index);
        break;
    }
  }
  return report;
}

std::string ExperimentReport::to_json(int indent) const {
  Json trials_json = Json::array();
  for (const auto& t : trials) {
    Json elements = Json::array();
    for (const auto& e : t.elements) elements.push_back(e.to_string());
    Json rec{{"index", t.index},
             {"elements", std::move(elements)},
             {"verdict", trdeg::to_string(t.verdict.kind)},
             {"degree_bound", t.verdict.degree_bound},
             {"candidates", t.verdict.candidates}};
    if (t.verdict.certificate) {
      rec["certificate"] = detail::submonic_json(*t.verdict.certificate);
      rec["cert_degree"] = t.verdict.certificate->poly.total_degree();
    } else {
      rec["certificate"] = nullptr;
    }
    if (spec.record_timing) rec["millis"] = t.millis;
    trials_json.push_back(std::move(rec));
  }

  Json unresolved_json = Json::array();
  for (std::size_t i : unresolved) {
    const TrialRecord& t = trials[i];
    Json elements = Json::array();
    for (const auto& e : t.elements) elements.push_back(e.to_string());
    const bool capped = t.verdict.kind == VerdictKind::ResourceExceeded;
    unresolved_json.push_back(
        {{"index", i},
         {"verdict", trdeg::to_string(t.verdict.kind)},
         {"elements", std::move(elements)},
         {"hint", capped ? "raise TRDEG_MONOMIAL_CAP or lower --maxdeg"
                         : "candidate counterexample: re-run with --maxdeg " +
                               std::to_string(spec.degree_bound + 2)}});
  }

  const Json out{{"spec", spec_json(spec)},
                 {"trials", std::move(trials_json)},
                 {"summary",
                  {{"trials", trials.size()},
                   {"dependent", dependent},
                   {"no_relation", no_relation},
                   {"resource_exceeded", resource_exceeded},
                   {"all_verified", all_verified}}},
                 {"unresolved", std::move(unresolved_json)}};
  return out.dump(indent);
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "trial,arity,verdict,cert_degree,millis\n";
  for (const auto& t : trials) {
    os << t.index << ',' << t.elements.size() << ',' << trdeg::to_string(t.verdict.kind) << ',';
    if (t.verdict.certificate) os << t.verdict.certificate->poly.total_degree();
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", t.millis);
    os << ',' << millis << '\n';
  }
  return os.str();
}

int known_dim(const RingPtr& ring) {
  switch (ring->kind()) {
    case Ring::Kind::Integers:
      return 1;
    case Ring::Kind::Rationals:
    case Ring::Kind::PrimeField:
    case Ring::Kind::Zmod:
      return 0;
    case Ring::Kind::Poly:
      return known_dim(ring->base()) + static_cast<int>(ring->nvars());
    case Ring::Kind::Quot:
      return staircase_dimension(ring->base(), ring->ideal_generators(),
                                 MonomialOrdering::grevlex());
  }
  throw UnsupportedConfiguration("no known dimension for " + ring->descriptor());
}

}  // namespace trdeg
