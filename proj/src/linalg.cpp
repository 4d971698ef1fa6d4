#include "trdeg/linalg.hpp"

#include <sstream>

#include "trdeg/error.hpp"

namespace trdeg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionViolation("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (s != 0) (*this)(target, j) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionViolation("matrix dimensions do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool divisible(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  HnfResult r{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = r.H;
  IntMatrix& u = r.U;
  const std::size_t m = a.rows();
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < m; ++c) {
    while (true) {
      // Pivot on the smallest nonzero entry to limit coefficient growth.
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      h.swap_rows(best, row);
      u.swap_rows(best, row);
      bool cleared = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = -trunc_div(h(i, c), h(row, c));
        h.add_row_multiple(i, row, q);
        u.add_row_multiple(i, row, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer q = -floor_div(h(i, c), h(row, c));
      h.add_row_multiple(i, row, q);
      u.add_row_multiple(i, row, q);
    }
    r.pivots.push_back(c);
    ++row;
  }
  r.rank = row;
  return r;
}

std::optional<std::vector<Integer>> solve_integer(std::span<const Integer> target,
                                                  std::span<const std::vector<Integer>> gens) {
  const std::size_t len = target.size();
  for (const auto& g : gens) {
    if (g.size() != len) throw PreconditionViolation("span vectors differ in length");
  }
  const std::size_t k = gens.size();
  if (k == 0) {
    for (const auto& t : target) {
      if (t != 0) return std::nullopt;
    }
    return std::vector<Integer>{};
  }

  const HnfResult res = hnf(IntMatrix::from_rows({gens.begin(), gens.end()}));
  std::vector<Integer> rest(target.begin(), target.end());
  std::vector<Integer> x(k, Integer(0));
  for (std::size_t p = 0; p < res.rank; ++p) {
    const std::size_t c = res.pivots[p];
    const Integer& pivot = res.H(p, c);
    if (!divisible(rest[c], pivot)) return std::nullopt;
    const Integer q = rest[c] / pivot;
    if (q == 0) continue;
    for (std::size_t j = c; j < len; ++j) rest[j] -= q * res.H(p, j);
    for (std::size_t j = 0; j < k; ++j) x[j] += q * res.U(p, j);
  }
  for (const auto& t : rest) {
    if (t != 0) return std::nullopt;
  }

  // Canonical representative modulo the relation lattice.
  if (res.rank < k) {
    IntMatrix kernel(k - res.rank, k);
    for (std::size_t i = res.rank; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) kernel(i - res.rank, j) = res.U(i, j);
    }
    const HnfResult kh = hnf(kernel);
    for (std::size_t p = 0; p < kh.rank; ++p) {
      const std::size_t c = kh.pivots[p];
      const Integer q = floor_div(x[c], kh.H(p, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < k; ++j) x[j] -= q * kh.H(p, j);
    }
  }
  return x;
}

namespace {

struct FieldSolve {
  std::vector<std::vector<Scalar>> rows;  // augmented
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of `rows` restricted to the first `ncols` columns.
void rref(FieldSolve& s, std::size_t ncols) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < s.rows.size(); ++c) {
    std::size_t pick = row;
    while (pick < s.rows.size() && s.rows[pick][c].is_zero()) ++pick;
    if (pick == s.rows.size()) continue;
    std::swap(s.rows[pick], s.rows[row]);
    const Scalar inv = s.rows[row][c].inverse();
    for (auto& e : s.rows[row]) e = e * inv;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      if (i == row || s.rows[i][c].is_zero()) continue;
      const Scalar f = s.rows[i][c];
      for (std::size_t j = c; j < s.rows[i].size(); ++j) {
        s.rows[i][j] = s.rows[i][j] - f * s.rows[row][j];
      }
    }
    s.pivot_cols.push_back(c);
    ++row;
  }
}

void require_lengths(std::span<const Scalar> target, std::span<const std::vector<Scalar>> gens) {
  for (const auto& g : gens) {
    if (g.size() != target.size()) throw PreconditionViolation("span vectors differ in length");
  }
}

}  // namespace

SpanSolution solve_in_span(std::span<const Scalar> target,
                           std::span<const std::vector<Scalar>> gens, const Ring& scalars) {
  require_lengths(target, gens);
  const std::size_t len = target.size();
  const std::size_t k = gens.size();
  switch (scalars.kind()) {
    case Ring::Kind::Integers: {
      std::vector<Integer> t;
      for (const auto& s : target) t.push_back(s.value());
      std::vector<std::vector<Integer>> g(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (const auto& s : gens[i]) g[i].push_back(s.value());
      }
      auto x = solve_integer(t, g);
      if (!x) return {};
      std::vector<Scalar> out;
      for (auto& v : *x) out.push_back(Scalar::integer(std::move(v)));
      return {std::move(out)};
    }
    case Ring::Kind::Zmod: {
      const Integer& n = scalars.modulus();
      std::vector<Integer> t;
      for (const auto& s : target) t.push_back(s.value());
      std::vector<std::vector<Integer>> g(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (const auto& s : gens[i]) g[i].push_back(s.value());
      }
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<Integer> e(len, Integer(0));
        e[i] = n;
        g.push_back(std::move(e));
      }
      auto x = solve_integer(t, g);
      if (!x) return {};
      std::vector<Scalar> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(Scalar::residue((*x)[i], n));
      return {std::move(out)};
    }
    case Ring::Kind::Rationals:
    case Ring::Kind::PrimeField: {
      FieldSolve s;
      for (std::size_t l = 0; l < len; ++l) {
        std::vector<Scalar> row;
        row.reserve(k + 1);
        for (std::size_t j = 0; j < k; ++j) row.push_back(gens[j][l]);
        row.push_back(target[l]);
        s.rows.push_back(std::move(row));
      }
      rref(s, k);
      const Scalar zero = scalars.zero().scalar();
      for (std::size_t i = s.pivot_cols.size(); i < s.rows.size(); ++i) {
        if (!s.rows[i][k].is_zero()) return {};
      }
      std::vector<Scalar> x(k, zero);
      for (std::size_t i = 0; i < s.pivot_cols.size(); ++i) x[s.pivot_cols[i]] = s.rows[i][k];
      return {std::move(x)};
    }
    default:
      throw UnsupportedConfiguration("span solving needs ZZ, QQ, GF(p) or Zmod(n), got " +
                                     scalars.descriptor());
  }
}

std::size_t field_rank(std::span<const std::vector<Scalar>> rows, const Ring& field) {
  if (!field.is_field()) throw UnsupportedConfiguration("field_rank needs a field");
  if (rows.empty()) return 0;
  FieldSolve s{{rows.begin(), rows.end()}, {}};
  rref(s, rows.front().size());
  return s.pivot_cols.size();
}

// ---------------------------------------------------------------------------

IntegerLattice::IntegerLattice(std::optional<Integer> modulus) : modulus_(std::move(modulus)) {}

void IntegerLattice::normalize(SparseIntVector& v) const {
  for (auto it = v.begin(); it != v.end();) {
    if (modulus_) it->second = floor_mod(it->second, *modulus_);
    it = it->second == 0 ? v.erase(it) : std::next(it);
  }
}

namespace {

// v += f * row
void axpy(SparseIntVector& v, const Integer& f, const SparseIntVector& row) {
  for (const auto& [c, x] : row) {
    Integer& slot = v[c];
    slot += f * x;
    if (slot == 0) v.erase(c);
  }
}

}  // namespace

void IntegerLattice::reduce_tail(SparseIntVector& row, std::size_t pivot) const {
  // Bring every entry of `row` at a later pivot column into [0, pivot).
  for (auto it = rows_.upper_bound(pivot); it != rows_.end(); ++it) {
    const std::size_t c = it->first;
    auto entry = row.find(c);
    if (entry == row.end()) continue;
    const Integer q = floor_div(entry->second, it->second.at(c));
    if (q != 0) axpy(row, -q, it->second);
  }
  normalize_tail(row, pivot);
}

void IntegerLattice::normalize_tail(SparseIntVector& row, std::size_t pivot) const {
  if (!modulus_) return;
  for (auto it = row.upper_bound(pivot); it != row.end();) {
    it->second = floor_mod(it->second, *modulus_);
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
}

void IntegerLattice::set_row(std::size_t pivot, SparseIntVector row) {
  reduce_tail(row, pivot);
  rows_[pivot] = std::move(row);
  for (auto it = rows_.begin(); it != rows_.end() && it->first < pivot; ++it) {
    reduce_tail(it->second, it->first);
  }
}

void IntegerLattice::insert(SparseIntVector v) {
  normalize(v);
  while (!v.empty()) {
    const std::size_t c = v.begin()->first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (modulus_) {
        set_row(c, SparseIntVector{{c, *modulus_}});
        continue;
      }
      if (v.begin()->second < 0) {
        for (auto& [col, x] : v) x = -x;
      }
      set_row(c, std::move(v));
      return;
    }
    const SparseIntVector& row = it->second;
    const Integer a = row.at(c);
    const Integer b = v.at(c);
    if (divisible(b, a)) {
      axpy(v, -(b / a), row);
    } else {
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      SparseIntVector combined;
      axpy(combined, s, row);
      axpy(combined, t, v);
      SparseIntVector rest;
      axpy(rest, a / g, v);
      axpy(rest, -(b / g), row);
      v = std::move(rest);
      set_row(c, std::move(combined));
    }
    normalize(v);
  }
}

bool IntegerLattice::contains(SparseIntVector v) const {
  normalize(v);
  while (!v.empty()) {
    const std::size_t c = v.begin()->first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (!modulus_ || !divisible(v.begin()->second, *modulus_)) return false;
      v.erase(v.begin());
      continue;
    }
    const Integer& pivot = it->second.at(c);
    if (!divisible(v.begin()->second, pivot)) return false;
    axpy(v, -(v.begin()->second / pivot), it->second);
    normalize(v);
  }
  return true;
}

void FieldSpan::reduce(SparseVector& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t c = it->first;
    auto r = rows_.find(c);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    const Scalar f = it->second;
    for (const auto& [col, x] : r->second) {
      auto slot = v.find(col);
      if (slot == v.end()) {
        v.emplace(col, -(f * x));
      } else {
        slot->second = slot->second - f * x;
        if (slot->second.is_zero()) v.erase(slot);
      }
    }
    it = v.upper_bound(c);
  }
}

void FieldSpan::insert(SparseVector v) {
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  reduce(v);
  if (v.empty()) return;
  const Scalar inv = v.begin()->second.inverse();
  for (auto& [c, x] : v) x = x * inv;
  const std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
}

bool FieldSpan::contains(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  reduce(v);
  return v.empty();
}

}  // namespace trdeg
