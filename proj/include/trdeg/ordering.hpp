#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trdeg/monomial.hpp"
#include "trdeg/scalar.hpp"

namespace trdeg {

/// A global monomial ordering on monomials in x1, x2, ...
///
/// Variables are ranked by a priority list (most significant first); any
/// variable not listed ranks below the listed ones, in increasing index order.
/// An empty priority list gives x1 > x2 > x3 > ...
///
/// Families:
///   Lex          compare exponents by priority
///   GrLex        total degree, then Lex
///   GrevLex      total degree, then the smaller exponent in the least
///                significant differing variable wins
///   WeightedLex  positive rational weights (1 past the declared ones), then Lex
///   Matrix       rational rows applied in turn, then Lex on x1 > x2 > ...
class MonomialOrdering {
 public:
  enum class Family { Lex, GrLex, GrevLex, WeightedLex, Matrix };

  static MonomialOrdering lex(std::vector<Var> priority = {});
  static MonomialOrdering grlex(std::vector<Var> priority = {});
  static MonomialOrdering grevlex(std::vector<Var> priority = {});
  /// Throws PreconditionViolation on non-positive weights.
  static MonomialOrdering weighted_lex(std::vector<Rational> weights,
                                       std::vector<Var> priority = {});
  /// Throws PreconditionViolation unless the first nonzero entry of every
  /// column is positive.
  static MonomialOrdering matrix(std::vector<std::vector<Rational>> rows);

  /// Parses "lex", "lex:x1>x2", "grlex", "grevlex[:x2>x1]", "wlex:2,3[:x2>x1]",
  /// "matrix:[[1,1],[1,0]]". Variables in priority lists may be written as
  /// x<i> or as an entry of `names`.
  static MonomialOrdering parse(std::string_view text,
                                std::span<const std::string> names = {});

  Family family() const noexcept { return family_; }
  const std::vector<Var>& priority() const noexcept { return priority_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

  std::strong_ordering compare(const Monomial& s, const Monomial& t) const;
  bool less(const Monomial& s, const Monomial& t) const { return compare(s, t) < 0; }

  /// Canonical text accepted by parse().
  std::string to_string() const;

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
    return a.to_string() == b.to_string();
  }

 private:
  MonomialOrdering(Family family, std::vector<Var> priority);

  std::strong_ordering compare_lex(const Monomial& s, const Monomial& t) const;
  std::strong_ordering compare_revlex(const Monomial& s, const Monomial& t) const;
  bool listed(Var v) const;

  Family family_;
  std::vector<Var> priority_;
  std::vector<Var> priority_sorted_;
  std::vector<Rational> weights_;
  std::vector<std::vector<Rational>> rows_;
  // weights_/rows_ scaled by a positive integer per row, so comparisons stay
  // in integer arithmetic.
  std::vector<std::vector<Integer>> int_rows_;
};

/// Positive integer weights w_1..w_n; w(m) = sum w_i * exponent(m, i).
struct WeightVector {
  std::vector<Integer> w;

  Integer weight(const Monomial& m) const;
  std::string to_string() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Positive integer weights with w(trailing) < w(m) for every m in `above`,
/// minimizing max w_i and then lexicographically smallest.
///
/// Throws PreconditionViolation unless trailing < m under `ord` for all m.
/// The number of weights is the largest variable index mentioned.
WeightVector separating_weights(const Monomial& trailing, std::span<const Monomial> above,
                                const MonomialOrdering& ord);

/// Weights w with s <= t  =>  w(s) <= w(t), when the ordering is graded by
/// one of its own weight vectors; nullopt for Lex and for matrix orderings
/// whose first row is not strictly positive.
std::optional<WeightVector> is_weight_graded(const MonomialOrdering& ord, Var nvars);

}  // namespace trdeg
