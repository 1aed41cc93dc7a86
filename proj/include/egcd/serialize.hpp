#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "egcd/bench.hpp"
#include "egcd/core.hpp"
#include "egcd/trace.hpp"

namespace egcd {

// Big integers travel as decimal strings in every format.

nlohmann::json to_json(const BezoutTriple& t);
nlohmann::json to_json(const EgcdTrace& trace);
nlohmann::json to_json(const BenchReport& report);

/// Inverse of to_json(EgcdTrace). Throws MalformedTrace on schema errors.
EgcdTrace trace_from_json(const nlohmann::json& j);

/// Header k,q,a,b,c,d,e,f then one line per row; q is empty at k = 0.
std::string trace_to_csv(const EgcdTrace& trace);

}  // namespace egcd
