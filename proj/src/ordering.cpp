#include "trdeg/ordering.hpp"

#include <algorithm>
#include <cctype>

#include "trdeg/error.hpp"

namespace trdeg {

namespace {

std::strong_ordering cmp_int(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer lcm_of_denominators(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

std::vector<Integer> scale_row(const std::vector<Rational>& row, const Integer& factor) {
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) {
    Rational s = q * factor;
    out.push_back(s.get_num());
  }
  return out;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_rational(std::string_view text, std::size_t pos) {
  std::string t = trim(text);
  Rational q;
  if (t.empty() || q.set_str(t, 10) != 0) {
    throw ParseError("bad rational '" + t + "'", pos);
  }
  q.canonicalize();
  return q;
}

Var parse_var(std::string_view token, std::span<const std::string> names, std::size_t pos) {
  std::string t = trim(token);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == t) return static_cast<Var>(i + 1);
  }
  if (t.size() >= 2 && t[0] == 'x' &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    unsigned long v = std::stoul(t.substr(1));
    if (v >= 1) return static_cast<Var>(v);
  }
  throw ParseError("unknown variable '" + t + "' in ordering", pos);
}

std::vector<Var> parse_priority(std::string_view text, std::span<const std::string> names,
                                std::size_t offset) {
  std::vector<Var> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t gt = text.find('>', start);
    std::size_t end = gt == std::string_view::npos ? text.size() : gt;
    out.push_back(parse_var(text.substr(start, end - start), names, offset + start));
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start), offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<Rational>> parse_matrix(std::string_view text, std::size_t offset) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("matrix must be written [[...],...]", offset);
  }
  std::vector<std::vector<Rational>> rows;
  std::size_t i = 1;
  while (i + 1 < t.size()) {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
    if (i + 1 >= t.size()) break;
    if (t[i] != '[') throw ParseError("expected '[' in matrix", offset + i);
    std::size_t close = t.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated matrix row", offset + i);
    rows.push_back(parse_rational_list(std::string_view(t).substr(i + 1, close - i - 1),
                                       offset + i + 1));
    i = close + 1;
  }
  return rows;
}

std::string priority_text(const std::vector<Var>& priority) {
  std::string out;
  for (Var v : priority) {
    if (!out.empty()) out += '>';
    out += "x" + std::to_string(v);
  }
  return out;
}

}  // namespace

MonomialOrdering::MonomialOrdering(Family family, std::vector<Var> priority)
    : family_(family), priority_(std::move(priority)) {
  priority_sorted_ = priority_;
  std::sort(priority_sorted_.begin(), priority_sorted_.end());
  if (std::adjacent_find(priority_sorted_.begin(), priority_sorted_.end()) !=
      priority_sorted_.end()) {
    throw PreconditionViolation("variable listed twice in ordering priority");
  }
  if (!priority_sorted_.empty() && priority_sorted_.front() == 0) {
    throw PreconditionViolation("variable indices are 1-based");
  }
}

MonomialOrdering MonomialOrdering::lex(std::vector<Var> priority) {
  return MonomialOrdering(Family::Lex, std::move(priority));
}

MonomialOrdering MonomialOrdering::grlex(std::vector<Var> priority) {
  return MonomialOrdering(Family::GrLex, std::move(priority));
}

MonomialOrdering MonomialOrdering::grevlex(std::vector<Var> priority) {
  return MonomialOrdering(Family::GrevLex, std::move(priority));
}

MonomialOrdering MonomialOrdering::weighted_lex(std::vector<Rational> weights,
                                                std::vector<Var> priority) {
  if (weights.empty()) throw PreconditionViolation("weighted ordering needs weights");
  for (auto& w : weights) {
    w.canonicalize();
    if (w <= 0) throw PreconditionViolation("weights must be positive, got " + w.get_str());
  }
  MonomialOrdering ord(Family::WeightedLex, std::move(priority));
  Integer scale = lcm_of_denominators(weights);
  ord.int_rows_.push_back(scale_row(weights, scale));
  // Variables past the declared weights weigh 1, i.e. `scale` after scaling.
  ord.int_rows_.back().push_back(scale);
  ord.weights_ = std::move(weights);
  return ord;
}

MonomialOrdering MonomialOrdering::matrix(std::vector<std::vector<Rational>> rows) {
  if (rows.empty() || rows.front().empty()) {
    throw PreconditionViolation("matrix ordering needs at least one nonempty row");
  }
  const std::size_t width = rows.front().size();
  for (auto& row : rows) {
    if (row.size() != width) throw PreconditionViolation("matrix rows differ in length");
    for (auto& q : row) q.canonicalize();
  }
  for (std::size_t c = 0; c < width; ++c) {
    for (const auto& row : rows) {
      if (row[c] == 0) continue;
      if (row[c] < 0) {
        throw PreconditionViolation("matrix ordering is not global: column " +
                                    std::to_string(c + 1) + " starts negative");
      }
      break;
    }
  }
  MonomialOrdering ord(Family::Matrix, {});
  for (const auto& row : rows) {
    ord.int_rows_.push_back(scale_row(row, lcm_of_denominators(row)));
    ord.int_rows_.back().push_back(Integer(0));
  }
  ord.rows_ = std::move(rows);
  return ord;
}

bool MonomialOrdering::listed(Var v) const {
  return std::binary_search(priority_sorted_.begin(), priority_sorted_.end(), v);
}

std::strong_ordering MonomialOrdering::compare_lex(const Monomial& s, const Monomial& t) const {
  for (Var v : priority_) {
    Exp a = s.exponent(v), b = t.exponent(v);
    if (a != b) return a <=> b;
  }
  const auto& x = s.entries();
  const auto& y = t.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Var vx = i < x.size() ? x[i].first : ~Var{0};
    Var vy = j < y.size() ? y[j].first : ~Var{0};
    Var v = std::min(vx, vy);
    Exp a = vx == v ? x[i++].second : 0;
    Exp b = vy == v ? y[j++].second : 0;
    if (a != b && !listed(v)) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrdering::compare_revlex(const Monomial& s,
                                                      const Monomial& t) const {
  // Least significant variables first: unlisted ones by decreasing index,
  // then the priority list backwards. A smaller exponent there means greater.
  const auto& x = s.entries();
  const auto& y = t.entries();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 || j > 0) {
    Var vx = i > 0 ? x[i - 1].first : 0;
    Var vy = j > 0 ? y[j - 1].first : 0;
    Var v = std::max(vx, vy);
    Exp a = 0, b = 0;
    if (vx == v) a = x[--i].second;
    if (vy == v) b = y[--j].second;
    if (a != b && !listed(v)) return b <=> a;
  }
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    Exp a = s.exponent(*it), b = t.exponent(*it);
    if (a != b) return b <=> a;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrdering::compare(const Monomial& s, const Monomial& t) const {
  switch (family_) {
    case Family::Lex:
      return compare_lex(s, t);
    case Family::GrLex: {
      auto d = s.degree() <=> t.degree();
      return d != 0 ? d : compare_lex(s, t);
    }
    case Family::GrevLex: {
      auto d = s.degree() <=> t.degree();
      return d != 0 ? d : compare_revlex(s, t);
    }
    case Family::WeightedLex:
    case Family::Matrix: {
      for (const auto& row : int_rows_) {
        const std::size_t width = row.size() - 1;
        auto dot = [&](const Monomial& m) {
          Integer acc = 0;
          for (const auto& [v, e] : m.entries()) {
            const Integer& w = v <= width ? row[v - 1] : row.back();
            acc += w * e;
          }
          return acc;
        };
        auto c = cmp_int(dot(s), dot(t));
        if (c != 0) return c;
      }
      return compare_lex(s, t);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrdering::to_string() const {
  auto with_priority = [&](std::string head) {
    if (!priority_.empty()) head += ":" + priority_text(priority_);
    return head;
  };
  switch (family_) {
    case Family::Lex:
      return with_priority("lex");
    case Family::GrLex:
      return with_priority("grlex");
    case Family::GrevLex:
      return with_priority("grevlex");
    case Family::WeightedLex: {
      std::string out = "wlex:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ',';
        out += rational_text(weights_[i]);
      }
      if (!priority_.empty()) out += ":" + priority_text(priority_);
      return out;
    }
    case Family::Matrix: {
      std::string out = "matrix:[";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
          if (c) out += ',';
          out += rational_text(rows_[r][c]);
        }
        out += ']';
      }
      return out + "]";
    }
  }
  return {};
}

MonomialOrdering MonomialOrdering::parse(std::string_view text,
                                         std::span<const std::string> names) {
  std::string full = trim(text);
  std::string_view t = full;
  std::size_t colon = t.find(':');
  std::string head = trim(t.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : t.substr(colon + 1);
  const std::size_t rest_offset = colon == std::string_view::npos ? t.size() : colon + 1;

  auto priority_or_empty = [&](std::string_view p, std::size_t off) {
    return trim(p).empty() ? std::vector<Var>{} : parse_priority(p, names, off);
  };

  try {
    if (head == "lex") return lex(priority_or_empty(rest, rest_offset));
    if (head == "grlex") return grlex(priority_or_empty(rest, rest_offset));
    if (head == "grevlex") return grevlex(priority_or_empty(rest, rest_offset));
    if (head == "wlex") {
      std::size_t second = rest.find(':');
      auto weights = parse_rational_list(rest.substr(0, second), rest_offset);
      std::vector<Var> prio;
      if (second != std::string_view::npos) {
        prio = priority_or_empty(rest.substr(second + 1), rest_offset + second + 1);
      }
      return weighted_lex(std::move(weights), std::move(prio));
    }
    if (head == "matrix") return matrix(parse_matrix(rest, rest_offset));
  } catch (const PreconditionViolation& e) {
    throw ParseError(e.what(), 0);
  }
  throw ParseError("unknown ordering '" + head + "'", 0);
}

}  // namespace trdeg
