#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trdeg {

using Var = std::uint32_t;  // 1-based variable index
using Exp = std::uint32_t;

/// A power product x_{i1}^{e1} ... x_{ik}^{ek} stored sparsely.
///
/// Entries are sorted by variable index and never hold a zero exponent, so
/// the empty monomial is the constant 1 and structural equality is equality
/// of monomials. The three-way comparison is lex with x1 > x2 > ...; it is
/// the canonical storage order for polynomial terms. Use MonomialOrdering
/// for everything else.
class Monomial {
 public:
  using Entry = std::pair<Var, Exp>;

  Monomial() = default;
  /// Sorts, merges duplicate variables and drops zero exponents.
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(Var v, Exp e = 1);
  /// dense[i] is the exponent of variable i + 1.
  static Monomial from_dense(std::span<const Exp> dense);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Exp exponent(Var v) const;
  std::uint64_t degree() const;
  bool is_one() const noexcept { return entries_.empty(); }
  /// Largest variable index with a nonzero exponent, 0 for the constant.
  Var max_var() const noexcept { return entries_.empty() ? 0 : entries_.back().first; }
  std::vector<Exp> dense(Var nvars) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Renders as "x1^2*x3" using `names[i - 1]` for variable i, falling back
  /// to "x<i>" past the end of `names`. The constant renders as "1".
  std::string to_string(std::span<const std::string> names = {}) const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

std::string variable_name(Var v, std::span<const std::string> names);

/// All monomials in variables 1..nvars of total degree <= max_degree,
/// in canonical storage order.
std::vector<Monomial> monomials_up_to_degree(Var nvars, Exp max_degree);

/// Number of monomials in nvars variables of degree <= max_degree, or
/// UINT64_MAX when that count does not fit.
std::uint64_t count_monomials(Var nvars, Exp max_degree);

}  // namespace trdeg
