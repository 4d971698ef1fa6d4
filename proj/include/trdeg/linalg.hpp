#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trdeg/ring.hpp"
#include "trdeg/scalar.hpp"

namespace trdeg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws PreconditionViolation on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Integer> row(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// H = U * A with U unimodular and H in row Hermite form: the first `rank`
/// rows carry strictly increasing pivot columns with positive pivots, entries
/// above a pivot lie in [0, pivot), and the remaining rows are zero.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

HnfResult hnf(const IntMatrix& a);

struct SpanSolution {
  /// Coefficients c with sum c_i * gens[i] = target; absent when not in span.
  std::optional<std::vector<Scalar>> coefficients;

  bool in_span() const noexcept { return coefficients.has_value(); }
};

/// Exact span membership over ZZ, QQ, GF(p) or Zmod(n). Answers are
/// canonical: over ZZ the coefficient vector is reduced modulo the HNF of
/// the relation lattice, over fields free variables are zero, and over Zmod(n)
/// the problem is lifted to ZZ with n * e_i adjoined.
///
/// Throws UnsupportedConfiguration for other rings and PreconditionViolation
/// for vectors of unequal length.
SpanSolution solve_in_span(std::span<const Scalar> target,
                           std::span<const std::vector<Scalar>> gens, const Ring& scalars);

/// Integer-only form of the ZZ case.
std::optional<std::vector<Integer>> solve_integer(std::span<const Integer> target,
                                                  std::span<const std::vector<Integer>> gens);

/// Rank of a list of row vectors over a field.
std::size_t field_rank(std::span<const std::vector<Scalar>> rows, const Ring& field);

using SparseIntVector = std::map<std::size_t, Integer>;
using SparseVector = std::map<std::size_t, Scalar>;

/// A growing Z-submodule of Z^(N), or of (Z/n)^(N) when a modulus is set,
/// kept in reduced Hermite form keyed by pivot column so entries stay bounded.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::optional<Integer> modulus = std::nullopt);

  void insert(SparseIntVector v);
  bool contains(SparseIntVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void normalize(SparseIntVector& v) const;
  void normalize_tail(SparseIntVector& row, std::size_t pivot) const;
  void reduce_tail(SparseIntVector& row, std::size_t pivot) const;
  void set_row(std::size_t pivot, SparseIntVector row);

  std::optional<Integer> modulus_;
  std::map<std::size_t, SparseIntVector> rows_;
};

/// A growing subspace of k^(N) over a field k, kept with monic pivots.
class FieldSpan {
 public:
  void insert(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(SparseVector& v) const;

  std::map<std::size_t, SparseVector> rows_;
};

}  // namespace trdeg
