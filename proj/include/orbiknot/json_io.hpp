#pragma once

#include "json.hpp"
#include "orbiknot/integer_matrix.hpp"
#include "orbiknot/pd_code.hpp"
#include "orbiknot/presentation.hpp"

namespace orbiknot {

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
nlohmann::json bigint_json(BigInt const &v);

/// {"crossings": [[a,b,c,d], ...], "arcs": n}. "arcs" defaults to the
/// largest label. Throws ValidationError on malformed input.
PDCode pd_from_json(nlohmann::json const &j);
nlohmann::json to_json(PDCode const &code);

/// {"ngens": n, "meridians": [...], "relators": [[...], ...]}.
GroupPresentation presentation_from_json(nlohmann::json const &j);
nlohmann::json to_json(GroupPresentation const &p);

}  // namespace orbiknot
