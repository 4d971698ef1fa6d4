#pragma once

#include "json.hpp"
#include "trdeg/coquand_lombardi.hpp"
#include "trdeg/dependence.hpp"

namespace trdeg::detail {

using Json = nlohmann::json;

Json submonic_json(const SubmonicCertificate& cert);
Json cl_json(const ClCertificate& cert);
Json monomial_json(const Monomial& m);

}  // namespace trdeg::detail
