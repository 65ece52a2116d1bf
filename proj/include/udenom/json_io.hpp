#pragma once

#include <string>

#include "udenom/cyclo.hpp"
#include "udenom/molien.hpp"
#include "udenom/rational.hpp"
#include "udenom/torus.hpp"

namespace udenom {

// All emitted documents carry "schema": 1 and serialize deterministically
// (alphabetical keys, canonically sorted factor lists), so parsing an
// emitted document and re-serializing it reproduces the bytes.

GroupSpec group_spec_from_json(const std::string& text);      // throws ParseError
WeightSystem weight_system_from_json(const std::string& text);  // throws ParseError

std::string factored_to_json(const CycloFactored& f);
CycloFactored factored_from_json(const std::string& text);  // throws ParseError

std::string rational_to_json(const RationalFn& f);

}  // namespace udenom
