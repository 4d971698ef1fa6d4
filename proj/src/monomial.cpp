#include "trdeg/monomial.hpp"

#include <algorithm>
#include <limits>

#include "trdeg/error.hpp"
#include "trdeg/scalar.hpp"

namespace trdeg {

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (v == 0) throw PreconditionViolation("variable indices are 1-based");
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::variable(Var v, Exp e) { return Monomial({{v, e}}); }

Monomial Monomial::from_dense(std::span<const Exp> dense) {
  Monomial m;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) m.entries_.emplace_back(static_cast<Var>(i + 1), dense[i]);
  }
  return m;
}

Exp Monomial::exponent(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Var var) { return e.first < var; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::vector<Exp> Monomial::dense(Var nvars) const {
  std::vector<Exp> out(nvars, 0);
  for (const auto& [v, e] : entries_) {
    if (v > nvars) throw PreconditionViolation("monomial mentions x" + std::to_string(v));
    out[v - 1] = e;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first) ++a; else ++b;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw PreconditionViolation("monomial division is not exact");
  }
  Monomial out;
  auto d = divisor.entries_.begin();
  for (const auto& [v, e] : entries_) {
    Exp sub = 0;
    if (d != divisor.entries_.end() && d->first == v) {
      sub = d->second;
      ++d;
    }
    if (e > sub) out.entries_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first != y[j].first) {
      // The monomial holding the smaller variable has the larger exponent there.
      return x[i].first < y[j].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (x[i].second != y[j].second) return x[i].second <=> y[j].second;
    ++i;
    ++j;
  }
  if (i < x.size()) return std::strong_ordering::greater;
  if (j < y.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string variable_name(Var v, std::span<const std::string> names) {
  if (v >= 1 && v <= names.size()) return names[v - 1];
  return "x" + std::to_string(v);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : entries_) {
    if (!out.empty()) out += '*';
    out += variable_name(v, names);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

void enumerate(Var nvars, Exp remaining, std::vector<Exp>& current, Var index,
               std::vector<Monomial>& out) {
  if (index == nvars) {
    out.push_back(Monomial::from_dense(current));
    return;
  }
  for (Exp e = 0; e <= remaining; ++e) {
    current[index] = e;
    enumerate(nvars, remaining - e, current, index + 1, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(Var nvars, Exp max_degree) {
  std::vector<Monomial> out;
  std::vector<Exp> current(nvars, 0);
  enumerate(nvars, max_degree, current, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_monomials(Var nvars, Exp max_degree) {
  // C(nvars + max_degree, nvars), built incrementally so every partial
  // product is itself a binomial coefficient.
  Integer c = 1;
  for (Var k = 1; k <= nvars; ++k) {
    c = c * (Integer(max_degree) + k) / k;
    if (!c.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  }
  return c.get_ui();
}

}  // namespace trdeg
