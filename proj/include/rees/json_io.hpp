#pragma once

// JSON schemas used by the CLI.
//
// Polynomial: {"vars":{"n":N},"terms":[{"c":"<rational>","e":[e0,...,e_2n]}]}
//   with terms strictly descending in the ring order and nonzero string
//   coefficients ("−1", "3/2" style, no floats).
// Report:     {"params":{"n","a","b","case","p","r"},
//              "claims":[{"id","status","witness"?,"ms"}]}

#include "rees/polynomial.hpp"
#include "rees/verifier.hpp"

#include <nlohmann/json.hpp>

namespace rees {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json params_to_json(const UniformParams& P);
Json report_to_json(const CertReport& rep);

}  // namespace rees
