// Separating weight vectors for finitely many strict comparisons of a global
// monomial ordering, found by exact Fourier-Motzkin projection plus a
// bounded depth-first search for the optimal integer point.

#include <algorithm>
#include <map>
#include <optional>

#include "trdeg/error.hpp"
#include "trdeg/ordering.hpp"

namespace trdeg {

namespace {

// a . w >= b over integer w.
struct Ineq {
  std::vector<Integer> a;
  Integer b;
};

Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Divides by the content and rounds the bound up, which keeps every integer
// solution. Returns false if the inequality reads 0 >= b with b > 0.
bool normalize(Ineq& q) {
  Integer g = 0;
  for (const auto& x : q.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return q.b <= 0;
  if (g != 1) {
    for (auto& x : q.a) x /= g;
    q.b = ceil_div(q.b, g);
  }
  return true;
}

class System {
 public:
  explicit System(std::size_t nvars) : nvars_(nvars) {}

  // False once the system is known to be infeasible.
  bool add(Ineq q) {
    if (!normalize(q)) {
      infeasible_ = true;
      return false;
    }
    bool zero = std::all_of(q.a.begin(), q.a.end(), [](const Integer& x) { return x == 0; });
    if (zero) return true;
    auto [it, inserted] = rows_.try_emplace(q.a, q.b);
    if (!inserted && it->second < q.b) it->second = q.b;
    return true;
  }

  bool infeasible() const { return infeasible_; }

  // Projects variable k away.
  System eliminate(std::size_t k) const {
    System out(nvars_);
    out.infeasible_ = infeasible_;
    std::vector<const std::pair<const std::vector<Integer>, Integer>*> pos, neg;
    for (const auto& row : rows_) {
      int s = sgn(row.first[k]);
      if (s > 0) pos.push_back(&row);
      else if (s < 0) neg.push_back(&row);
      else out.add({row.first, row.second});
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        const Integer mp = -n->first[k];
        const Integer mn = p->first[k];
        Ineq c{std::vector<Integer>(nvars_), mp * p->second + mn * n->second};
        for (std::size_t i = 0; i < nvars_; ++i) {
          c.a[i] = mp * p->first[i] + mn * n->first[i];
        }
        if (!out.add(std::move(c))) return out;
      }
    }
    return out;
  }

  // Integer range allowed for variable k by rows that mention only k.
  std::pair<std::optional<Integer>, std::optional<Integer>> bounds(std::size_t k) const {
    std::optional<Integer> lo, hi;
    for (const auto& [a, b] : rows_) {
      if (a[k] > 0) {
        Integer l = ceil_div(b, a[k]);
        if (!lo || l > *lo) lo = l;
      } else if (a[k] < 0) {
        Integer h = floor_div(-b, -a[k]);
        if (!hi || h < *hi) hi = h;
      }
    }
    return {lo, hi};
  }

  // Fixes variable k to `value`.
  System substitute(std::size_t k, const Integer& value) const {
    System out(nvars_);
    out.infeasible_ = infeasible_;
    for (const auto& [a, b] : rows_) {
      Ineq q{a, b - a[k] * value};
      q.a[k] = 0;
      if (!out.add(std::move(q))) break;
    }
    return out;
  }

 private:
  std::size_t nvars_;
  bool infeasible_ = false;
  std::map<std::vector<Integer>, Integer> rows_;
};

// Lexicographically smallest integer point of `sys`, assigning variables
// k, k+1, ... in turn. Every variable is boxed, so each range is finite.
std::optional<std::vector<Integer>> smallest_point(const System& sys, std::size_t k,
                                                   std::size_t nvars,
                                                   std::vector<Integer>& prefix) {
  if (sys.infeasible()) return std::nullopt;
  if (k == nvars) return prefix;
  System projected = sys;
  for (std::size_t j = nvars; j-- > k + 1;) {
    projected = projected.eliminate(j);
    if (projected.infeasible()) return std::nullopt;
  }
  auto [lo, hi] = projected.bounds(k);
  if (!lo || !hi) throw InternalInconsistency("weight variable left unbounded");
  for (Integer v = *lo; v <= *hi; ++v) {
    prefix[k] = v;
    System next = sys.substitute(k, v);
    if (auto found = smallest_point(next, k + 1, nvars, prefix)) return found;
  }
  return std::nullopt;
}

std::optional<std::vector<Integer>> solve_with_bound(const std::vector<Ineq>& cone,
                                                     std::size_t nvars, const Integer& bound) {
  System sys(nvars);
  for (const auto& q : cone) sys.add(q);
  for (std::size_t i = 0; i < nvars; ++i) {
    Ineq lower{std::vector<Integer>(nvars), Integer(1)};
    lower.a[i] = 1;
    sys.add(lower);
    Ineq upper{std::vector<Integer>(nvars), Integer(-bound)};
    upper.a[i] = -1;
    sys.add(upper);
  }
  std::vector<Integer> prefix(nvars);
  return smallest_point(sys, 0, nvars, prefix);
}

}  // namespace

Integer WeightVector::weight(const Monomial& m) const {
  Integer acc = 0;
  for (const auto& [v, e] : m.entries()) {
    if (v > w.size()) throw PreconditionViolation("monomial outside weight vector");
    acc += w[v - 1] * e;
  }
  return acc;
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].get_str();
  }
  return out + ")";
}

WeightVector separating_weights(const Monomial& trailing, std::span<const Monomial> above,
                                const MonomialOrdering& ord) {
  Var nvars = std::max<Var>(trailing.max_var(), 1);
  for (const auto& m : above) {
    if (!ord.less(trailing, m)) {
      throw PreconditionViolation(trailing.to_string() + " is not below " + m.to_string() +
                                  " under " + ord.to_string());
    }
    nvars = std::max(nvars, m.max_var());
  }
  const auto d = trailing.dense(nvars);
  std::vector<Ineq> cone;
  for (const auto& m : above) {
    const auto e = m.dense(nvars);
    Ineq q{std::vector<Integer>(nvars), Integer(1)};
    for (Var i = 0; i < nvars; ++i) {
      q.a[i] = Integer(static_cast<unsigned long>(e[i])) - static_cast<unsigned long>(d[i]);
    }
    cone.push_back(std::move(q));
  }

  // Feasible sets grow with the bound: double until feasible, then bisect.
  // `best` always holds the optimum for the current `hi`.
  Integer hi = 1;
  std::optional<std::vector<Integer>> best = solve_with_bound(cone, nvars, hi);
  const Integer limit = Integer(1) << 62;
  while (!best) {
    hi *= 2;
    if (hi > limit) {
      throw InternalInconsistency("no separating weights found for a global ordering");
    }
    best = solve_with_bound(cone, nvars, hi);
  }
  Integer lo = hi / 2 + 1;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (auto s = solve_with_bound(cone, nvars, mid)) {
      hi = mid;
      best = std::move(s);
    } else {
      lo = mid + 1;
    }
  }
  WeightVector out{std::move(*best)};
  const Integer wd = out.weight(trailing);
  for (const auto& m : above) {
    if (!(wd < out.weight(m))) {
      throw InternalInconsistency("separating weights violate " + m.to_string());
    }
  }
  return out;
}

std::optional<WeightVector> is_weight_graded(const MonomialOrdering& ord, Var nvars) {
  if (nvars == 0) throw PreconditionViolation("is_weight_graded needs at least one variable");
  auto clear = [&](const std::vector<Rational>& row, const Rational& beyond) {
    Integer l = beyond.get_den();
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    WeightVector w;
    for (Var i = 0; i < nvars; ++i) {
      Rational q = i < row.size() ? row[i] : beyond;
      q *= l;
      w.w.push_back(q.get_num());
    }
    return w;
  };
  switch (ord.family()) {
    case MonomialOrdering::Family::GrLex:
    case MonomialOrdering::Family::GrevLex:
      return WeightVector{std::vector<Integer>(nvars, Integer(1))};
    case MonomialOrdering::Family::WeightedLex:
      return clear(ord.weights(), Rational(1));
    case MonomialOrdering::Family::Lex:
      return std::nullopt;
    case MonomialOrdering::Family::Matrix: {
      const auto& first = ord.rows().front();
      for (Var i = 0; i < nvars; ++i) {
        if (i >= first.size() || first[i] <= 0) return std::nullopt;
      }
      return clear(first, Rational(0));
    }
  }
  return std::nullopt;
}

}  // namespace trdeg
