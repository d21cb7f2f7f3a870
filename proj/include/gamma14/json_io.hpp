#pragma once

#include <json.hpp>

#include "gamma14/forms.hpp"
#include "gamma14/reduction.hpp"

namespace gamma14 {

// Form file schema: {"n":5, "gram":[["0","1/2",...],...], "shift":["1/2",...],
// "gamma":"8"}; every numeric entry is a rational string.
ShiftedInstance instance_from_json(const nlohmann::json& j);
ShiftedInstance load_instance(const std::string& path);

nlohmann::json instance_to_json(const ShiftedInstance& inst);
nlohmann::json enclosure_to_json(const Enclosure& e);
nlohmann::json birch_to_json(const BirchForm& bf);
nlohmann::json case_params_to_json(const CaseParams& cp);
nlohmann::json witness_to_json(const IntVec& x, const Rat& value, bool equality);

}  // namespace gamma14
