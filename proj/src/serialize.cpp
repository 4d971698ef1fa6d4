#include "trdeg/serialize.hpp"

#include "internal/json_io.hpp"
#include "trdeg/error.hpp"
#include "trdeg/parse.hpp"

namespace trdeg {

namespace detail {

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [v, e] : m.entries()) out.push_back(Json::array({v, e}));
  return out;
}

Json submonic_json(const SubmonicCertificate& cert) {
  Json elements = Json::array();
  for (const auto& e : cert.elements) elements.push_back(e.to_string());
  Json poly = Json::array();
  for (const Term& t : cert.poly.terms()) {
    poly.push_back(Json::array({t.coeff.to_string(), monomial_json(t.mono)}));
  }
  return Json{{"ring", cert.config.algebra->descriptor()},
              {"coeff_ring", cert.config.coeffs->descriptor()},
              {"ordering", cert.ordering.to_string()},
              {"elements", std::move(elements)},
              {"poly", std::move(poly)},
              {"trailing", monomial_json(cert.trailing)},
              {"degree_bound", cert.degree_bound},
              {"verified", cert.verified}};
}

Json cl_json(const ClCertificate& cert) {
  Json elements = Json::array();
  for (const auto& e : cert.elements) elements.push_back(e.to_string());
  Json coeffs = Json::array();
  for (const auto& r : cert.coeffs) coeffs.push_back(r.to_string());
  return Json{{"ring", cert.ring->descriptor()},
              {"elements", std::move(elements)},
              {"exponents", cert.exponents},
              {"coeffs", std::move(coeffs)},
              {"verified", cert.verified}};
}

}  // namespace detail

namespace {

using detail::Json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw PreconditionViolation(std::string("certificate is missing \"") + key + "\"");
  }
  return obj.at(key);
}

std::string string_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) throw PreconditionViolation(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

Monomial monomial_from(const Json& j) {
  if (!j.is_array()) throw PreconditionViolation("a monomial must be a list of [index, exp]");
  std::vector<Monomial::Entry> entries;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw PreconditionViolation("a monomial entry must be [index, exp]");
    }
    entries.emplace_back(pair[0].get<Var>(), pair[1].get<Exp>());
  }
  return Monomial(std::move(entries));
}

std::vector<Element> elements_from(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) throw PreconditionViolation("\"elements\" must be a list");
  std::vector<Element> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw PreconditionViolation("elements must be strings");
    out.push_back(parse_element(s.get<std::string>(), ring));
  }
  return out;
}

bool verified_claim(const Json& obj) {
  const Json& v = field(obj, "verified");
  if (!v.is_boolean()) throw PreconditionViolation("\"verified\" must be a boolean");
  return v.get<bool>();
}

}  // namespace

std::string to_json(const SubmonicCertificate& cert, int indent) {
  return detail::submonic_json(cert).dump(indent);
}

std::string to_json(const ClCertificate& cert, int indent) {
  return detail::cl_json(cert).dump(indent);
}

Loaded<SubmonicCertificate> load_submonic(std::string_view text) {
  const Json j = parse_json(text);
  const RingPtr algebra = parse_ring(string_field(j, "ring"));
  const RingPtr coeffs = parse_ring(string_field(j, "coeff_ring"));
  const AlgebraConfig config = AlgebraConfig::make(coeffs, algebra);
  const MonomialOrdering ord = MonomialOrdering::parse(string_field(j, "ordering"));

  const Json& poly_json = field(j, "poly");
  if (!poly_json.is_array()) throw PreconditionViolation("\"poly\" must be a list of terms");
  std::vector<Term> terms;
  for (const auto& t : poly_json) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) {
      throw PreconditionViolation("a term must be [coefficient, monomial]");
    }
    terms.push_back({monomial_from(t[1]), parse_element(t[0].get<std::string>(), coeffs)});
  }
  const Json& bound = field(j, "degree_bound");
  if (!bound.is_number_unsigned()) {
    throw PreconditionViolation("\"degree_bound\" must be a nonnegative integer");
  }

  Loaded<SubmonicCertificate> out{
      SubmonicCertificate{config, elements_from(field(j, "elements"), algebra), ord,
                          Polynomial::from_terms(coeffs, std::move(terms)),
                          monomial_from(field(j, "trailing")), bound.get<unsigned>(), false},
      {}, verified_claim(j)};
  out.check = verify_certificate(out.cert);
  out.cert.verified = out.check.ok;
  return out;
}

Loaded<ClCertificate> load_cl(std::string_view text) {
  const Json j = parse_json(text);
  const RingPtr ring = parse_ring(string_field(j, "ring"));
  const Json& exps = field(j, "exponents");
  if (!exps.is_array()) throw PreconditionViolation("\"exponents\" must be a list");
  std::vector<unsigned> exponents;
  for (const auto& e : exps) {
    if (!e.is_number_unsigned()) throw PreconditionViolation("exponents must be nonnegative");
    exponents.push_back(e.get<unsigned>());
  }
  Loaded<ClCertificate> out{
      ClCertificate{ring, elements_from(field(j, "elements"), ring), std::move(exponents),
                    elements_from(field(j, "coeffs"), ring), false},
      {}, verified_claim(j)};
  out.check = cl_verify(out.cert);
  out.cert.verified = out.check.ok;
  return out;
}

std::string certificate_kind(std::string_view text) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("exponents")) return "cl";
  if (j.is_object() && j.contains("poly")) return "submonic";
  throw PreconditionViolation("not a certificate");
}

}  // namespace trdeg
