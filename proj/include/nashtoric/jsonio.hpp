#pragma once

#include <string>

#include "json.hpp"
#include "nashtoric/etak.hpp"
#include "nashtoric/oracle.hpp"

namespace nashtoric {

using Json = nlohmann::ordered_json;

Json to_json(const LatticePoint& p);
Json to_json(const MultiIndex& m);
Json to_json(const LambdaSet& lam);
Json to_json(const EtaSequence& eta);
Json to_json(const StaircaseData& sd);
Json to_json(const TranslatedStaircase& ts);
Json to_json(const EtaKTrace& trace);
Json to_json(const EtaKReport& report);
Json to_json(const PointCloud& cloud);
Json to_json(const Fan2D& fan);
Json to_json(const OracleResult& result);
Json to_json(const CrossCheckReport& report);

/// Canonical text form used for files and stdout: 2-space indent, newline.
std::string dump_canonical(const Json& j);

/// SVG drawing of a fan report produced by to_json(Fan2D): rays inside the
/// ambient cone, cones shaded, tags labelled. Pure function of the JSON.
std::string render_fan_svg(const Json& fan_json);

}  // namespace nashtoric
