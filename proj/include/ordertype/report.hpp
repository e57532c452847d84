#pragma once

// JSON documents for the engine's results. Every top-level document carries
// "schema": 1.

#include "json.hpp"
#include "ordertype/algebra.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/embed.hpp"
#include "ordertype/points.hpp"

namespace ordertype {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json toJson(const UPoint& u);
Json toJson(const PointCode& p);
UPoint uPointFromJson(const Json& j);
PointCode pointCodeFromJson(const Json& j);  // throws InvalidCode on malformed input

Json toJson(const Profile& p);
Json toJson(const ConsistencyReport& r);
Json toJson(const LawReport& r);
Json toJson(const EmbedResult& r);
Json toJson(const OracleReport& r);

/// eval/classify document: input, normalized term, result and, when the
/// expression is a bare condensation, its merge flags.
Json evalDocument(const std::string& input);
Json classifyDocument(const std::string& input);
Json tfaeDocument(const std::string& input);

}  // namespace ordertype
