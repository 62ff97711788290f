// Command-line front end. All computation goes through the shared-library
// C API; this file only handles argument parsing and output formatting.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "tropc/tropc.h"

namespace {

int fail_with(int code) {
  std::cerr << "error: " << tc_last_error() << "\n";
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { tc_string_free(value); }
};

struct PolygonHandle {
  tc_polygon* handle = nullptr;
  ~PolygonHandle() { tc_polygon_free(handle); }
};
struct BetaHandle {
  tc_beta* handle = nullptr;
  ~BetaHandle() { tc_beta_free(handle); }
};
struct PathHandle {
  tc_path* handle = nullptr;
  ~PathHandle() { tc_path_free(handle); }
};

int load_polygon_beta(const std::string& polygon_file, const std::string& beta_file,
                      PolygonHandle& polygon, BetaHandle& beta) {
  int rc = tc_polygon_parse(read_file(polygon_file).c_str(), &polygon.handle);
  if (rc != TC_OK) return rc;
  return tc_beta_parse(polygon.handle, read_file(beta_file).c_str(), &beta.handle);
}

std::string report_text(const nlohmann::json& report) {
  std::string out;
  out += "variables:";
  for (const auto& v : report["variables"]) out += " " + v.get<std::string>();
  out += "\nsamples: " + std::to_string(report["samples"].size());
  out += "\nmethods agree: ";
  out += report["methods_agree"].get<bool>() ? "yes" : "no";
  out += "\n";
  for (const auto& c : report["chambers"]) {
    std::string sig;
    for (int s : c["signature"]) sig += s > 0 ? '+' : '-';
    if (sig.empty()) sig = "(all)";
    out += "chamber " + sig + " (" + std::to_string(c["samples"].get<std::size_t>()) +
           " samples): ";
    out += c.contains("polynomial") ? c["polynomial"].get<std::string>()
                                    : c["status"].get<std::string>();
    out += "\n";
  }
  if (report.contains("global_polynomial"))
    out += "global polynomial: " + report["global_polynomial"].get<std::string>() + "\n";
  else
    out += "no single global polynomial within the degree bound\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical curve counting via lattice paths and subfloor diagrams"};
  app.require_subcommand(1);

  std::string polygon_file, beta_file, path_file;
  long long genus = 0;
  int parallel = 0;
  bool pruning = false;

  auto* mult_cmd = app.add_subcommand("multiplicity", "Multiplicity of one lattice path");
  mult_cmd->add_option("--polygon", polygon_file, "Polygon JSON file")->required();
  mult_cmd->add_option("--beta", beta_file, "Boundary data JSON file")->required();
  mult_cmd->add_option("--path", path_file, "Path JSON file")->required();
  mult_cmd->add_option("--genus", genus, "Genus (does not affect the multiplicity)");

  auto* count_cmd = app.add_subcommand("count", "Total count of paths with multiplicity");
  count_cmd->add_option("--polygon", polygon_file, "Polygon JSON file")->required();
  count_cmd->add_option("--beta", beta_file, "Boundary data JSON file")->required();
  count_cmd->add_option("--genus", genus, "Genus g; path length is |beta| + g - 1");
  count_cmd->add_option("--parallel", parallel, "Worker threads (default: all cores)");
  count_cmd->add_flag("--pruning", pruning, "Enable rectangle zero-multiplicity pruning");

  auto* nz_cmd = app.add_subcommand("nonzero-paths", "List paths with nonzero multiplicity");
  nz_cmd->add_option("--polygon", polygon_file, "Polygon JSON file")->required();
  nz_cmd->add_option("--beta", beta_file, "Boundary data JSON file")->required();
  nz_cmd->add_option("--genus", genus, "Genus g; path length is |beta| + g - 1");
  nz_cmd->add_option("--parallel", parallel, "Worker threads (default: all cores)");

  std::string mu1, mu2, nu1, nu2, method = "lattice";
  auto* p1p1_cmd = app.add_subcommand("p1p1", "Curve count in P1 x P1");
  p1p1_cmd->add_option("--mu1", mu1, "Partition, e.g. 2 or 2,1")->required();
  p1p1_cmd->add_option("--mu2", mu2, "Partition")->required();
  p1p1_cmd->add_option("--nu1", nu1, "Partition")->required();
  p1p1_cmd->add_option("--nu2", nu2, "Partition")->required();
  p1p1_cmd->add_option("--genus", genus, "Genus (lattice method only)");
  p1p1_cmd->add_option("--method", method, "lattice, subfloor or both")
      ->check(CLI::IsMember({"lattice", "subfloor", "both"}));
  p1p1_cmd->add_option("--parallel", parallel, "Worker threads (default: all cores)");

  std::string template_file, ranges, json_out;
  int degree_bound = -1;
  auto* scan_cmd = app.add_subcommand("polyscan", "Fit chamber polynomials over a grid");
  scan_cmd->add_option("--template", template_file, "Profile template JSON file")->required();
  scan_cmd->add_option("--ranges", ranges, "Variable ranges, e.g. n1=1..3,n2=1..3")
      ->required();
  scan_cmd->add_option("--degree-bound", degree_bound,
                       "Per-variable degree bound (default: |mu1| + 2)");
  scan_cmd->add_option("--genus", genus, "Genus (lattice method only)");
  scan_cmd->add_option("--method", method, "lattice, subfloor or both")
      ->check(CLI::IsMember({"lattice", "subfloor", "both"}));
  scan_cmd->add_option("--parallel", parallel, "Worker threads (default: all cores)");
  scan_cmd->add_option("--json", json_out, "Also write the full JSON report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mult_cmd->parsed()) {
      PolygonHandle polygon;
      BetaHandle beta;
      int rc = load_polygon_beta(polygon_file, beta_file, polygon, beta);
      if (rc != TC_OK) return fail_with(rc);
      PathHandle path;
      rc = tc_path_parse(read_file(path_file).c_str(), &path.handle);
      if (rc != TC_OK) return fail_with(rc);
      StringOut value;
      rc = tc_multiplicity(polygon.handle, beta.handle, path.handle, &value.value);
      if (rc != TC_OK) return fail_with(rc);
      std::cout << value.value << "\n";
    } else if (count_cmd->parsed()) {
      PolygonHandle polygon;
      BetaHandle beta;
      int rc = load_polygon_beta(polygon_file, beta_file, polygon, beta);
      if (rc != TC_OK) return fail_with(rc);
      StringOut value;
      rc = tc_count(polygon.handle, beta.handle, genus, parallel, pruning ? 1 : 0,
                    &value.value);
      if (rc != TC_OK) return fail_with(rc);
      std::cout << value.value << "\n";
    } else if (nz_cmd->parsed()) {
      PolygonHandle polygon;
      BetaHandle beta;
      int rc = load_polygon_beta(polygon_file, beta_file, polygon, beta);
      if (rc != TC_OK) return fail_with(rc);
      StringOut value;
      rc = tc_nonzero_paths(polygon.handle, beta.handle, genus, parallel, &value.value);
      if (rc != TC_OK) return fail_with(rc);
      auto parsed = nlohmann::json::parse(value.value);
      std::cout << value.value << "\n";
      std::cout << "paths: " << parsed["count"].get<std::size_t>() << " total: "
                << parsed["total"].get<std::string>() << "\n";
    } else if (p1p1_cmd->parsed()) {
      StringOut value;
      int rc = tc_p1p1(mu1.c_str(), mu2.c_str(), nu1.c_str(), nu2.c_str(), genus,
                       method.c_str(), parallel, &value.value);
      if (rc != TC_OK && rc != TC_DISAGREEMENT) return fail_with(rc);
      auto parsed = nlohmann::json::parse(value.value);
      if (method == "both") {
        std::cout << parsed["lattice"].get<std::string>() << " "
                  << parsed["subfloor"].get<std::string>() << " "
                  << (parsed["agree"].get<bool>() ? "OK" : "DISAGREE") << "\n";
      } else {
        const char* key = method == "subfloor" ? "subfloor" : "lattice";
        std::cout << parsed[key].get<std::string>() << "\n";
      }
      return rc;
    } else if (scan_cmd->parsed()) {
      StringOut value;
      int rc = tc_polyscan(read_file(template_file).c_str(), ranges.c_str(), degree_bound,
                           genus, method.c_str(), parallel, &value.value);
      if (rc != TC_OK && rc != TC_DISAGREEMENT) return fail_with(rc);
      auto parsed = nlohmann::json::parse(value.value);
      std::cout << report_text(parsed);
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw CLI::ValidationError("cannot write file: " + json_out);
        out << value.value << "\n";
      }
      return rc;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return TC_INVALID;
  }
  return TC_OK;
}
