#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trdeg/dependence.hpp"
#include "trdeg/ring.hpp"

namespace trdeg {

/// Randomized dependence experiment over an R-algebra A (default ZZ[x]).
/// Elements are sampled with every coefficient uniform in [-coeff_bound,
/// coeff_bound] on each monomial of degree <= poly_degree; zero draws are
/// resampled. Trial i draws from its own generator seeded by
/// trial_seed(seed, i), so serial and parallel runs agree.
struct ExperimentSpec {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  unsigned poly_degree = 2;
  unsigned long coeff_bound = 5;
  std::size_t arity = 3;
  std::string ordering = "grevlex";
  unsigned degree_bound = 6;
  std::string coeff_ring = "ZZ";
  std::string ambient_ring = "Poly(ZZ; x)";
  /// When nonempty, every trial uses these elements (parsed in A) instead of sampling.
  std::vector<std::string> fixed_elements;
  /// Wall time per trial is recorded only on request, since it breaks
  /// byte-identical reports.
  bool record_timing = false;
  std::uint64_t monomial_cap = default_monomial_cap();

  /// Throws PreconditionViolation for non-positive counts or bounds.
  void validate() const;
};

struct TrialRecord {
  std::size_t index = 0;
  std::vector<Element> elements;
  DependenceVerdict verdict;
  bool reverified = false;
  double millis = 0.0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<TrialRecord> trials;  // in trial-index order
  std::size_t dependent = 0;
  std::size_t no_relation = 0;
  std::size_t resource_exceeded = 0;
  /// Trials without a certificate, for re-running at a higher bound.
  std::vector<std::size_t> unresolved;
  bool all_verified = true;

  std::string to_json(int indent = 2) const;
  /// Columns: trial,arity,verdict,cert_degree,millis
  std::string to_csv() const;
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

ExperimentReport run_experiment(const ExperimentSpec& spec, Execution exec = Execution::Parallel);

/// Krull dimension from the catalog: ZZ 1, fields and Zmod 0,
/// Poly(B; k vars) dim(B) + k, Quot via the staircase (-1 for the zero ring).
int known_dim(const RingPtr& ring);

}  // namespace trdeg
