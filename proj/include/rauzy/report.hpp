#pragma once

#include <string>

#include "json.hpp"
#include "rauzy/analysis.hpp"
#include "rauzy/error.hpp"
#include "rauzy/numeration.hpp"

namespace rauzy {

using Json = nlohmann::ordered_json;

// Dual form: exact power-basis coefficients (in the root a of the working
// minimal polynomial), v-coordinates, and a float approximation.
Json number_json(const System& sys, const AlgebraicNumber& x);
Json face_json(const System& sys, const Face& f);
Json embedded_json(const System& sys, const AlgebraicNumber& x);

Json analysis_report(const System& sys, bool with_property_f);
Json expansion_json(const System& sys, const AlgebraicNumber& x, const Expansion& e);
Json graph_json(const System& sys, const ZeroGraph& g);
Json verdict_json(const System& sys, const FVerdict& v);
Json covering_json(const CoveringResult& r, const CoveringOptions& o);
Json error_json(const Error& e);

}  // namespace rauzy
