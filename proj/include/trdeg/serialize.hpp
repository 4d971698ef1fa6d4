#pragma once

#include <string>
#include <string_view>

#include "trdeg/coquand_lombardi.hpp"
#include "trdeg/dependence.hpp"

namespace trdeg {

// Certificates travel as JSON text. Loading re-parses every ring, element
// and coefficient and then re-verifies from scratch, so a stored "verified"
// flag is only a claim. Serializing a loaded certificate reproduces the input
// byte for byte.

std::string to_json(const SubmonicCertificate& cert, int indent = 2);
std::string to_json(const ClCertificate& cert, int indent = 2);

template <typename Cert>
struct Loaded {
  Cert cert;             // cert.verified holds the recomputed result
  VerifyResult check;
  bool claimed_verified = false;
};

/// Throws ParseError on malformed JSON or ring/element text and
/// PreconditionViolation on a schema violation.
Loaded<SubmonicCertificate> load_submonic(std::string_view json);
Loaded<ClCertificate> load_cl(std::string_view json);

/// "submonic" or "cl", judged by the keys present.
std::string certificate_kind(std::string_view json);

}  // namespace trdeg
