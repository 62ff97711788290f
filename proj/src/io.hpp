// JSON (de)serialization for polygons, boundary data, paths, diagrams,
// profile templates and scan reports. Big integers travel as decimal strings.
#pragma once

#include <json.hpp>

#include "polyfit.hpp"

namespace tropc {

nlohmann::json load_json_file(const std::string& path);

// {"vertices": [[x,y],...]}
LatticePolygon polygon_from_json(const nlohmann::json& j);

// {"beta": {"<edge index or rectangle name>": [b1,b2,...], ...}}
std::map<std::size_t, std::vector<Int>> beta_map_from_json(const nlohmann::json& j,
                                                           const LatticePolygon& poly);

// {"points": [[x,y],...]}
PathPoints path_from_json(const nlohmann::json& j);
nlohmann::json path_to_json(const PathPoints& points);

// {"n":..., "colors":["B"|"W",...], "edges":[[i,j,w],...], "ends":[[v,"L"|"R",w],...]}
SubfloorDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const SubfloorDiagram& diagram);

// {"mu1":[...], "mu2":[...], "nu1":[...], "nu2":[...]}; entries are integers
// or expression strings like "n1+n2".
ProfileTemplate template_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ScanReport& report);
std::string report_to_text(const ScanReport& report);

}  // namespace tropc
