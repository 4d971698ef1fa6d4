// trdeg: command-line front end for the dependence, Coquand-Lombardi and
// dimension machinery. Exit codes: 0 success, 1 negative result, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trdeg/coquand_lombardi.hpp"
#include "trdeg/dependence.hpp"
#include "trdeg/error.hpp"
#include "trdeg/groebner.hpp"
#include "trdeg/harness.hpp"
#include "trdeg/parse.hpp"
#include "trdeg/serialize.hpp"

namespace {

using namespace trdeg;
using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string relation_text(const SubmonicCertificate& c) {
  return c.poly.to_string();
}

void print_submonic(std::ostream& os, const SubmonicCertificate& c) {
  os << "relation: " << relation_text(c) << "\n"
     << "trailing: " << c.trailing.to_string() << "\n"
     << "ordering: " << c.ordering.to_string() << "\n"
     << "config:   (" << c.config.letter() << ") R = " << c.config.coeffs->descriptor()
     << ", A = " << c.config.algebra->descriptor() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolation("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionViolation("cannot write " + path);
  out << text;
}

struct Common {
  bool json = false;
  std::string order = "lex";
};

// ---------------------------------------------------------------------------

struct DepArgs : Common {
  std::string coeffs;
  std::string ring = "ZZ";
  std::string elems;
  unsigned maxdeg = 4;
};

int run_dep(const DepArgs& a) {
  const RingPtr algebra = parse_ring(a.ring);
  const RingPtr coeffs = a.coeffs.empty() ? algebra : parse_ring(a.coeffs);
  const AlgebraConfig config = AlgebraConfig::make(coeffs, algebra);
  const std::vector<Element> elems = parse_element_list(a.elems, algebra);
  const MonomialOrdering ord = MonomialOrdering::parse(a.order);
  const DependenceVerdict v = search_submonic_relation(config, elems, ord, a.maxdeg);
  if (a.json) {
    if (v.certificate) {
      std::cout << to_json(*v.certificate) << "\n";
    } else {
      std::cout << Json{{"verdict", to_string(v.kind)},
                        {"degree_bound", v.degree_bound},
                        {"candidates", v.candidates}}
                       .dump(2)
                << "\n";
    }
  } else if (v.certificate) {
    std::cout << "dependent\n";
    print_submonic(std::cout, *v.certificate);
  } else if (v.kind == VerdictKind::NoRelationUpTo) {
    std::cout << "no relation up to degree " << v.degree_bound << "\n";
  } else {
    std::cout << "resource exceeded: " << v.candidates
              << " candidate monomials (see TRDEG_MONOMIAL_CAP)\n";
  }
  return v.dependent() ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

struct ClArgs : Common {
  std::string ring = "ZZ";
  std::string elems;
  unsigned maxexp = 8;
  bool submonic = false;
  unsigned exhaustive = 0;
};

int run_cl(const ClArgs& a) {
  const RingPtr ring = parse_ring(a.ring);
  if (a.exhaustive > 0) {
    const FiniteDimResult r = finite_ring_dim_lt(ring, a.exhaustive, a.maxexp);
    if (a.json) {
      Json witnesses = Json::array();
      for (const auto& w : r.witnesses) witnesses.push_back(Json::parse(to_json(w)));
      Json out{{"ring", ring->descriptor()},
               {"arity", a.exhaustive},
               {"dim_lt", r.holds},
               {"tuples", r.tuples},
               {"witnesses", std::move(witnesses)}};
      if (r.failing) {
        Json failing = Json::array();
        for (const auto& e : *r.failing) failing.push_back(e.to_string());
        out["failing"] = std::move(failing);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "dim(" << ring->descriptor() << ") < " << a.exhaustive << ": "
                << (r.holds ? "true" : "not certified") << " (" << r.witnesses.size() << " of "
                << r.tuples << " tuples certified)\n";
      if (r.failing) {
        std::cout << "first uncertified tuple:";
        for (const auto& e : *r.failing) std::cout << " " << e.to_string();
        std::cout << "\n";
      }
    }
    return r.holds ? kOk : kNegative;
  }

  const std::vector<Element> elems = parse_element_list(a.elems, ring);
  const ClResult r = cl_search(ring, elems, a.maxexp);
  if (!r.found()) {
    if (a.json) {
      std::cout << Json{{"found", false}, {"exponent_bound", a.maxexp}}.dump(2) << "\n";
    } else {
      std::cout << "no certificate with exponents <= " << a.maxexp << "\n";
    }
    return kNegative;
  }
  const ClCertificate& c = *r.certificate;
  if (a.json) {
    std::cout << to_json(c) << "\n";
    if (a.submonic) std::cout << to_json(cl_to_submonic(c)) << "\n";
    return kOk;
  }
  std::cout << "exponents:";
  for (unsigned m : c.exponents) std::cout << " " << m;
  std::cout << "\ncoefficients:";
  for (const auto& x : c.coeffs) std::cout << " " << x.to_string();
  std::cout << "\n";
  if (a.submonic) print_submonic(std::cout, cl_to_submonic(c));
  return kOk;
}

// ---------------------------------------------------------------------------

int run_dim(const std::string& ring_text, bool json) {
  const RingPtr ring = parse_ring(ring_text);
  const int d = known_dim(ring);
  if (json) {
    std::cout << Json{{"ring", ring->descriptor()}, {"dim", d}}.dump(2) << "\n";
  } else {
    std::cout << d << "\n";
  }
  return kOk;
}

struct MemberArgs : Common {
  std::string ring;
  std::string poly;
  std::string gens;
  bool cofactors = false;
};

int run_member(const MemberArgs& a) {
  const RingPtr ring = parse_ring(a.ring);
  if (ring->kind() != Ring::Kind::Poly) {
    throw UnsupportedConfiguration("member needs a polynomial ring over a field");
  }
  const MonomialOrdering ord = MonomialOrdering::parse(a.order, ring->vars());
  const Polynomial f = parse_poly(a.poly, ring);
  std::vector<Polynomial> gens;
  for (const auto& g : split_top_level(a.gens)) gens.push_back(parse_poly(g, ring));
  const auto lift = ideal_lift(ring, f, gens, ord);
  if (a.json) {
    Json out{{"member", lift.has_value()}};
    if (lift && a.cofactors) {
      Json cof = Json::array();
      for (const auto& c : *lift) cof.push_back(c.to_string(ring->vars()));
      out["cofactors"] = std::move(cof);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (lift ? "true" : "false") << "\n";
    if (lift && a.cofactors) {
      for (std::size_t j = 0; j < lift->size(); ++j) {
        std::cout << "  c" << j + 1 << " = " << (*lift)[j].to_string(ring->vars()) << "\n";
      }
    }
  }
  return lift ? kOk : kNegative;
}

struct WeightsArgs : Common {
  std::string trailing;
  std::string above;
  unsigned graded = 0;
};

int run_weights(const WeightsArgs& a) {
  const MonomialOrdering ord = MonomialOrdering::parse(a.order);
  if (a.graded > 0) {
    const auto w = is_weight_graded(ord, static_cast<Var>(a.graded));
    if (a.json) {
      std::cout << Json{{"weight_graded", w.has_value()},
                        {"weights", w ? w->to_string() : std::string()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << (w ? w->to_string() : std::string("not weight-graded")) << "\n";
    }
    return w ? kOk : kNegative;
  }
  const Monomial t = parse_monomial(a.trailing);
  std::vector<Monomial> above;
  for (const auto& m : split_top_level(a.above)) above.push_back(parse_monomial(m));
  try {
    const WeightVector w = separating_weights(t, above, ord);
    if (a.json) {
      std::cout << Json{{"weights", w.to_string()}}.dump(2) << "\n";
    } else {
      std::cout << w.to_string() << "\n";
    }
    return kOk;
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kNegative;
  }
}

struct ExperimentArgs {
  ExperimentSpec spec;
  bool json = false;
  bool serial = false;
  std::string out;
  std::string csv;
  std::string fixed;
};

int run_experiment_cmd(ExperimentArgs a) {
  if (!a.fixed.empty()) a.spec.fixed_elements = split_top_level(a.fixed);
  const ExperimentReport r =
      run_experiment(a.spec, a.serial ? Execution::Serial : Execution::Parallel);
  if (!a.out.empty()) write_file(a.out, r.to_json() + "\n");
  if (!a.csv.empty()) write_file(a.csv, r.to_csv());
  if (a.json) {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << "trials: " << r.trials.size() << "\n"
              << "dependent: " << r.dependent << "\n"
              << "no relation: " << r.no_relation << "\n"
              << "resource exceeded: " << r.resource_exceeded << "\n"
              << "all certificates verified: " << (r.all_verified ? "yes" : "NO") << "\n";
    for (std::size_t i : r.unresolved) {
      std::cout << "unresolved trial " << i << ":";
      for (const auto& e : r.trials[i].elements) std::cout << " [" << e.to_string() << "]";
      std::cout << "  (re-run with --maxdeg " << a.spec.degree_bound + 2 << ")\n";
    }
  }
  return r.all_verified ? kOk : kNegative;
}

int run_verify(const std::string& path, bool json) {
  const std::string text = read_file(path);
  VerifyResult check;
  std::string kind;
  try {
    kind = certificate_kind(text);
    check = kind == "cl" ? load_cl(text).check : load_submonic(text).check;
  } catch (const Error& e) {
    check = {false, std::string("malformed: ") + e.what()};
  }
  if (json) {
    std::cout << Json{{"kind", kind}, {"ok", check.ok}, {"reason", check.reason}}.dump(2) << "\n";
  } else {
    std::cout << (check.ok ? "ok" : "FAIL: " + check.reason) << "\n";
  }
  return check.ok ? kOk : kNegative;
}

struct MatrixArgs : Common {
  std::string coeffs;
  std::string ring = "ZZ";
  std::string pool;
  std::size_t arity = 2;
  unsigned maxdeg = 4;
  bool serial = false;
};

int run_depmatrix(const MatrixArgs& a) {
  const RingPtr algebra = parse_ring(a.ring);
  const RingPtr coeffs = a.coeffs.empty() ? algebra : parse_ring(a.coeffs);
  const AlgebraConfig config = AlgebraConfig::make(coeffs, algebra);
  const std::vector<Element> pool = parse_element_list(a.pool, algebra);
  const MonomialOrdering ord = MonomialOrdering::parse(a.order);
  const DependenceMatrix m = dependence_matrix(config, pool, a.arity, ord, a.maxdeg, {},
                                               a.serial ? Execution::Serial : Execution::Parallel);
  auto tuple_text = [&](const TupleVerdict& t) {
    std::vector<std::string> out;
    for (std::size_t i : t.indices) out.push_back(pool[i].to_string());
    return out;
  };
  if (a.json) {
    Json rows = Json::array();
    for (const auto& t : m.tuples) {
      Json row{{"elements", tuple_text(t)}, {"verdict", to_string(t.verdict.kind)}};
      if (t.verdict.certificate) row["relation"] = relation_text(*t.verdict.certificate);
      rows.push_back(std::move(row));
    }
    Json candidates = Json::array();
    for (std::size_t i : m.candidates) candidates.push_back(tuple_text(m.tuples[i]));
    std::cout << Json{{"tuples", std::move(rows)},
                      {"dependent", m.dependent},
                      {"no_relation", m.no_relation},
                      {"resource_exceeded", m.resource_exceeded},
                      {"candidates", std::move(candidates)}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& t : m.tuples) {
      std::cout << "(";
      const auto text = tuple_text(t);
      for (std::size_t i = 0; i < text.size(); ++i) std::cout << (i ? ", " : "") << text[i];
      std::cout << ")  " << to_string(t.verdict.kind);
      if (t.verdict.certificate) std::cout << "  " << relation_text(*t.verdict.certificate);
      std::cout << "\n";
    }
    std::cout << "dependent " << m.dependent << ", no relation " << m.no_relation
              << ", resource exceeded " << m.resource_exceeded << "\n";
    if (!m.candidates.empty()) {
      std::cout << m.candidates.size() << " tuple(s) with no relation up to degree " << a.maxdeg
                << ": candidate witnesses for trdeg >= " << a.arity << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trdeg: bounded transcendence-degree certificates over rings"};
  app.require_subcommand(1);

  DepArgs dep;
  auto* dep_cmd = app.add_subcommand("dep", "search for a submonic relation");
  dep_cmd->add_option("--coeffs", dep.coeffs, "coefficient ring R (default: the algebra)");
  dep_cmd->add_option("--ring", dep.ring, "algebra A")->capture_default_str();
  dep_cmd->add_option("--elems", dep.elems, "comma-separated elements of A")->required();
  dep_cmd->add_option("--order", dep.order, "monomial ordering")->capture_default_str();
  dep_cmd->add_option("--maxdeg", dep.maxdeg, "degree bound D")->capture_default_str();
  dep_cmd->add_flag("--json", dep.json, "emit the certificate as JSON");

  ClArgs cl;
  auto* cl_cmd = app.add_subcommand("cl", "Coquand-Lombardi certificate search");
  cl_cmd->add_option("--ring", cl.ring, "ring R")->capture_default_str();
  cl_cmd->add_option("--elems", cl.elems, "comma-separated elements of R");
  cl_cmd->add_option("--maxexp", cl.maxexp, "exponent bound M")->capture_default_str();
  cl_cmd->add_option("--exhaustive", cl.exhaustive,
                     "decide dim(R) < n over every n-tuple of a finite ring");
  cl_cmd->add_flag("--submonic", cl.submonic, "also print the lex-submonic conversion");
  cl_cmd->add_flag("--json", cl.json, "emit JSON");

  std::string dim_ring;
  bool dim_json = false;
  auto* dim_cmd = app.add_subcommand("dim", "Krull dimension from the catalog");
  dim_cmd->add_option("--ring", dim_ring, "ring descriptor")->required();
  dim_cmd->add_flag("--json", dim_json, "emit JSON");

  MemberArgs mem;
  mem.order = "grevlex";
  auto* mem_cmd = app.add_subcommand("member", "ideal membership over a field");
  mem_cmd->add_option("--ring", mem.ring, "Poly(field; vars)")->required();
  mem_cmd->add_option("--poly", mem.poly, "polynomial to test")->required();
  mem_cmd->add_option("--gens", mem.gens, "comma-separated ideal generators")->required();
  mem_cmd->add_option("--order", mem.order, "monomial ordering")->capture_default_str();
  mem_cmd->add_flag("--cofactors", mem.cofactors, "print cofactors when a member");
  mem_cmd->add_flag("--json", mem.json, "emit JSON");

  WeightsArgs w;
  auto* w_cmd = app.add_subcommand("weights", "separating weight vectors");
  w_cmd->add_option("--trailing", w.trailing, "trailing monomial, e.g. x2^2");
  w_cmd->add_option("--above", w.above, "comma-separated larger monomials");
  w_cmd->add_option("--order", w.order, "monomial ordering")->capture_default_str();
  w_cmd->add_option("--graded", w.graded, "instead test weight-gradedness on this many variables");
  w_cmd->add_flag("--json", w.json, "emit JSON");

  ExperimentArgs ex;
  auto* ex_cmd = app.add_subcommand("experiment", "randomized dependence experiment");
  ex_cmd->add_option("--seed", ex.spec.seed, "master seed")->capture_default_str();
  ex_cmd->add_option("--trials", ex.spec.trials, "trial count")->capture_default_str();
  ex_cmd->add_option("--polydeg", ex.spec.poly_degree, "degree of sampled elements")
      ->capture_default_str();
  ex_cmd->add_option("--coeff-bound", ex.spec.coeff_bound, "coefficient box [-B, B]")
      ->capture_default_str();
  ex_cmd->add_option("--arity", ex.spec.arity, "tuple size")->capture_default_str();
  ex_cmd->add_option("--order", ex.spec.ordering, "monomial ordering")->capture_default_str();
  ex_cmd->add_option("--maxdeg", ex.spec.degree_bound, "search degree bound D")
      ->capture_default_str();
  ex_cmd->add_option("--coeffs", ex.spec.coeff_ring, "coefficient ring R")->capture_default_str();
  ex_cmd->add_option("--ring", ex.spec.ambient_ring, "algebra A")->capture_default_str();
  ex_cmd->add_option("--fixed", ex.fixed, "use these comma-separated elements in every trial");
  ex_cmd->add_flag("--timing", ex.spec.record_timing, "record wall time per trial");
  ex_cmd->add_flag("--serial", ex.serial, "run trials on one thread");
  ex_cmd->add_option("--out", ex.out, "write the JSON report here");
  ex_cmd->add_option("--csv", ex.csv, "write the CSV summary here");
  ex_cmd->add_flag("--json", ex.json, "print the JSON report");

  std::string cert_path;
  bool verify_json = false;
  auto* v_cmd = app.add_subcommand("verify", "re-verify a certificate file");
  v_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();
  v_cmd->add_flag("--json", verify_json, "emit JSON");

  MatrixArgs mx;
  auto* mx_cmd = app.add_subcommand("depmatrix", "dependence verdicts over a pool");
  mx_cmd->add_option("--coeffs", mx.coeffs, "coefficient ring R (default: the algebra)");
  mx_cmd->add_option("--ring", mx.ring, "algebra A")->capture_default_str();
  mx_cmd->add_option("--pool", mx.pool, "comma-separated pool of elements")->required();
  mx_cmd->add_option("--arity", mx.arity, "tuple size")->capture_default_str();
  mx_cmd->add_option("--order", mx.order, "monomial ordering")->capture_default_str();
  mx_cmd->add_option("--maxdeg", mx.maxdeg, "degree bound D")->capture_default_str();
  mx_cmd->add_flag("--serial", mx.serial, "run tuples on one thread");
  mx_cmd->add_flag("--json", mx.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dep_cmd) return run_dep(dep);
    if (*cl_cmd) {
      if (cl.exhaustive == 0 && cl.elems.empty()) {
        std::cerr << "cl: --elems or --exhaustive is required\n";
        return kUsage;
      }
      return run_cl(cl);
    }
    if (*dim_cmd) return run_dim(dim_ring, dim_json);
    if (*mem_cmd) return run_member(mem);
    if (*w_cmd) {
      if (w.graded == 0 && w.trailing.empty()) {
        std::cerr << "weights: --trailing or --graded is required\n";
        return kUsage;
      }
      return run_weights(w);
    }
    if (*ex_cmd) return run_experiment_cmd(ex);
    if (*v_cmd) return run_verify(cert_path, verify_json);
    if (*mx_cmd) return run_depmatrix(mx);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedConfiguration& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const RingMismatch& e) {
    std::cerr << "ring mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceExceeded& e) {
    std::cerr << "resource exceeded: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
