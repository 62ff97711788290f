#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace tropc {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
  return j;
}

namespace {

LatticePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(Errc::InvalidInput, "a point must be an [x, y] integer pair");
  return {j[0].get<Int>(), j[1].get<Int>()};
}

}  // namespace

LatticePolygon polygon_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(Errc::InvalidInput, "polygon JSON needs a \"vertices\" array");
  std::vector<LatticePoint> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(point_from_json(v));
  return LatticePolygon(std::move(vertices));
}

std::map<std::size_t, std::vector<Int>> beta_map_from_json(const json& j,
                                                           const LatticePolygon& poly) {
  if (!j.contains("beta") || !j["beta"].is_object())
    throw Error(Errc::InvalidInput, "boundary JSON needs a \"beta\" object");
  std::map<std::size_t, std::vector<Int>> raw;
  for (const auto& [key, value] : j["beta"].items()) {
    std::size_t edge;
    if (!key.empty() && std::all_of(key.begin(), key.end(),
                                    [](char c) { return std::isdigit((unsigned char)c); })) {
      edge = (std::size_t)std::stoull(key);
      if (edge >= poly.edge_count())
        throw Error(Errc::InvalidInput, "edge index " + key + " out of range");
    } else {
      edge = poly.named_edge(key);
    }
    if (!value.is_array()) throw Error(Errc::InvalidInput, "beta entries must be arrays");
    std::vector<Int> seq;
    for (const auto& b : value) {
      if (!b.is_number_integer())
        throw Error(Errc::InvalidInput, "beta entries must be integers");
      seq.push_back(b.get<Int>());
    }
    if (raw.count(edge))
      throw Error(Errc::InvalidInput, "duplicate beta entry for edge " + key);
    raw[edge] = std::move(seq);
  }
  return raw;
}

PathPoints path_from_json(const json& j) {
  if (!j.contains("points") || !j["points"].is_array())
    throw Error(Errc::InvalidInput, "path JSON needs a \"points\" array");
  PathPoints points;
  for (const auto& p : j["points"]) points.push_back(point_from_json(p));
  return points;
}

json path_to_json(const PathPoints& points) {
  json pts = json::array();
  for (const auto& p : points) pts.push_back({p.x, p.y});
  return json{{"points", pts}};
}

SubfloorDiagram diagram_from_json(const json& j) {
  SubfloorDiagram d;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw Error(Errc::InvalidInput, "diagram JSON needs an integer \"n\"");
  d.n = j["n"].get<int>();
  if (!j.contains("colors") || !j["colors"].is_array())
    throw Error(Errc::InvalidInput, "diagram JSON needs a \"colors\" array");
  for (const auto& c : j["colors"]) {
    std::string s = c.get<std::string>();
    if (s == "B")
      d.colors.push_back(Color::Black);
    else if (s == "W")
      d.colors.push_back(Color::White);
    else
      throw Error(Errc::InvalidInput, "colors must be \"B\" or \"W\"");
  }
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw Error(Errc::InvalidInput, "edges must be [i, j, w] triples");
    d.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<Int>()});
  }
  for (const auto& e : j.value("ends", json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw Error(Errc::InvalidInput, "ends must be [v, \"L\"|\"R\", w] triples");
    std::string side = e[1].get<std::string>();
    if (side != "L" && side != "R")
      throw Error(Errc::InvalidInput, "end side must be \"L\" or \"R\"");
    d.ends.push_back({e[0].get<int>(), side == "L" ? EndSide::Left : EndSide::Right,
                      e[2].get<Int>()});
  }
  return d;
}

json diagram_to_json(const SubfloorDiagram& d) {
  json colors = json::array(), edges = json::array(), ends = json::array();
  for (Color c : d.colors) colors.push_back(c == Color::Black ? "B" : "W");
  for (const auto& e : d.edges) edges.push_back({e.i, e.j, e.w});
  for (const auto& e : d.ends)
    ends.push_back({e.v, e.side == EndSide::Left ? "L" : "R", e.w});
  return json{{"n", d.n}, {"colors", colors}, {"edges", edges}, {"ends", ends}};
}

ProfileTemplate template_from_json(const json& j) {
  auto parse_entries = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      throw Error(Errc::InvalidInput, std::string("template JSON needs a \"") + key +
                                          "\" array");
    std::vector<LinExpr> out;
    for (const auto& e : j[key]) {
      if (e.is_number_integer()) {
        LinExpr expr;
        expr.constant = e.get<Int>();
        out.push_back(expr);
      } else if (e.is_string()) {
        out.push_back(LinExpr::parse(e.get<std::string>()));
      } else {
        throw Error(Errc::InvalidInput, "template entries must be integers or strings");
      }
    }
    return out;
  };
  return ProfileTemplate{parse_entries("mu1"), parse_entries("mu2"), parse_entries("nu1"),
                         parse_entries("nu2")};
}

namespace {

json sample_to_json(const GridSample& s) {
  json assignment;
  for (const auto& [name, value] : s.assignment) assignment[name] = value;
  json out{{"assignment", assignment}, {"agree", s.agree}};
  if (s.lattice) out["lattice"] = s.lattice->get_str();
  if (s.subfloor) out["subfloor"] = s.subfloor->get_str();
  return out;
}

std::string signature_to_text(const std::vector<int>& signature) {
  if (signature.empty()) return "(all)";
  std::string out;
  for (int s : signature) out += s > 0 ? '+' : '-';
  return out;
}

}  // namespace

json report_to_json(const ScanReport& report) {
  json walls = json::array();
  for (const auto& w : report.walls) walls.push_back({{"lhs", w.lhs}, {"rhs", w.rhs}});
  json samples = json::array();
  for (const auto& s : report.samples) samples.push_back(sample_to_json(s));
  json chambers = json::array();
  for (const auto& c : report.chambers) {
    json entry{{"signature", c.signature},
               {"samples", c.sample_count},
               {"status", c.status}};
    if (c.polynomial) entry["polynomial"] = c.polynomial->to_string();
    chambers.push_back(entry);
  }
  json out{{"variables", report.variables},
           {"walls", walls},
           {"samples", samples},
           {"chambers", chambers},
           {"methods_agree", report.methods_agree}};
  if (report.global) out["global_polynomial"] = report.global->to_string();
  return out;
}

std::string report_to_text(const ScanReport& report) {
  std::string out;
  out += "variables:";
  for (const auto& v : report.variables) out += " " + v;
  out += "\nsamples: " + std::to_string(report.samples.size());
  out += "\nmethods agree: " + std::string(report.methods_agree ? "yes" : "no") + "\n";
  for (const auto& c : report.chambers) {
    out += "chamber " + signature_to_text(c.signature) + " (" +
           std::to_string(c.sample_count) + " samples): ";
    out += c.polynomial ? c.polynomial->to_string() : c.status;
    out += "\n";
  }
  if (report.global)
    out += "global polynomial: " + report.global->to_string() + "\n";
  else
    out += "no single global polynomial within the degree bound\n";
  return out;
}

}  // namespace tropc
