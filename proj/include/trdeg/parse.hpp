#pragma once

#include <string_view>
#include <vector>

#include "trdeg/error.hpp"
#include "trdeg/ring.hpp"

namespace trdeg {

// Polynomial grammar (whitespace is ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := (INT ['/' UINT] | VAR | '(' expr ')') ('^' UINT)*
// A rational literal is only accepted where its denominator is invertible.
//
// Ring grammar:
//   "ZZ" | "QQ" | "Zmod(n)" | "GF(p)" | "Poly(base; v1,v2,...)"
//   | "Quot(Poly(...); [g1, g2, ...])"

RingPtr parse_ring(std::string_view text);

/// Parses an element of `ring`. Names resolve against the ring's variables
/// and then those of nested coefficient rings.
Element parse_element(std::string_view text, const RingPtr& ring);

/// Parses a polynomial of the Poly/Quot ring `ring` and returns its
/// representative over ring->coefficient_ring().
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Splits on commas (or `separator`) that are not nested in () or [].
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');

std::vector<Element> parse_element_list(std::string_view text, const RingPtr& ring,
                                        char separator = ',');

/// A monomial written as a product of powers of x1, x2, ... or of `names`.
Monomial parse_monomial(std::string_view text, std::span<const std::string> names = {});

}  // namespace trdeg
