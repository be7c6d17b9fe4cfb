#pragma once

#include "json.hpp"

#include "qf/form.hpp"
#include "qf/normal_form.hpp"

namespace qf {

/// {"dim": "45", "entries": [{"class": ["-1","a"], "mult": "3"}, ...]}
/// Integers are decimal strings, never floats.
nlohmann::json form_to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const nlohmann::json& j);

/// {"mode": "generic", "dim": "45", "hyp": "20", "residue": [entries...]}
nlohmann::json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j);

}  // namespace qf
