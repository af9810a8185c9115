#pragma once

#include "holocalc/form.hpp"
#include "json.hpp"

namespace holocalc {

// {"n":…, "k":…, "terms":[{"idx":[…], "poly":[{"exp":[…],"num":…,"den":…}]}]}
// num/den are emitted as strings when they do not fit in 64 bits.
nlohmann::json to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& q);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace holocalc
