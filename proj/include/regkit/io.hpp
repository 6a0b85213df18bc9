#pragma once

#include "regkit/altproj.hpp"
#include "regkit/cones.hpp"
#include "regkit/functions.hpp"
#include "regkit/geometry.hpp"
#include "regkit/regularity.hpp"

#include <json.hpp>

#include <string>

namespace regkit {

using Json = nlohmann::ordered_json;

Json toJson(const Vec& v);
Vec vecFromJson(const Json& j);

Json toJson(const DirectionSet& d);
Json toJson(const ModulusReport& r);
Json toJson(const HierarchyTable& t);
Json toJson(const APTrace& t);

// Declarative set format, e.g.
//   {"type":"sector","apex":[0,0],"angleLo":-0.4636,"angleHi":0.7854,"radius":1.0}
// Unions/intersections nest via "members". Epigraphs carry a "function"
// block in the PL format.
Json setToJson(const SetRep& s);
SetRep setFromJson(const Json& j);

Json plToJson(const PLFunction& f);
PLFunctionPtr plFromJson(const Json& j);

// Atomic write: temp file in the target directory, then rename.
void writeFileAtomic(const std::string& path, const std::string& contents);

}  // namespace regkit
