#include "tropc/tropc.h"

#include <cstring>
#include <string>

#include "counting.hpp"
#include "io.hpp"
#include "polyfit.hpp"
#include "subfloor.hpp"

using namespace tropc;
using nlohmann::json;

struct tc_polygon {
  LatticePolygon value;
};
struct tc_beta {
  BoundaryData value;
};
struct tc_path {
  PathPoints value;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

int map_error(const Error& e) {
  switch (e.code()) {
    case Errc::Disagreement:
      return fail(TC_DISAGREEMENT, e.what());
    case Errc::Internal:
      return fail(TC_INTERNAL, e.what());
    default:
      return fail(TC_INVALID, e.what());
  }
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TC_OK;
  } catch (const Error& e) {
    return map_error(e);
  } catch (const json::exception& e) {
    return fail(TC_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(TC_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

CountMethod parse_method(const char* method) {
  std::string m = method ? method : "lattice";
  if (m == "lattice") return CountMethod::Lattice;
  if (m == "subfloor") return CountMethod::Subfloor;
  if (m == "both") return CountMethod::Both;
  throw Error(Errc::InvalidInput, "method must be lattice, subfloor or both");
}

// "n1=1..3,n2=2..5"
VarRanges parse_ranges(const char* text) {
  VarRanges ranges;
  std::string s = text ? text : "";
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    std::size_t dots = item.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
      throw Error(Errc::InvalidInput, "range must look like name=lo..hi: " + item);
    std::string name = item.substr(0, eq);
    Int lo = std::stoll(item.substr(eq + 1, dots - eq - 1));
    Int hi = std::stoll(item.substr(dots + 2));
    if (lo > hi) throw Error(Errc::InvalidInput, "empty range for " + name);
    ranges[name] = {lo, hi};
  }
  if (ranges.empty()) throw Error(Errc::InvalidInput, "no variable ranges given");
  return ranges;
}

json nonzero_paths_json(const LatticePolygon& poly, const BoundaryData& beta, Int genus,
                        int threads) {
  CountOptions options;
  options.threads = threads;
  auto entries = nonzero_paths(poly, beta, genus, options);
  BigInt total = 0;
  json paths = json::array();
  for (const auto& [points, value] : entries) {
    json entry = path_to_json(points);
    entry["multiplicity"] = value.get_str();
    paths.push_back(std::move(entry));
    total += value;
  }
  return json{{"count", entries.size()}, {"total", total.get_str()}, {"paths", paths}};
}

}  // namespace

extern "C" {

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { delete[] s; }

int tc_polygon_parse(const char* json_text, tc_polygon** out) {
  if (!json_text || !out) return fail(TC_INVALID, "null argument");
  return guarded([&] {
    *out = new tc_polygon{polygon_from_json(json::parse(json_text, nullptr, true))};
  });
}

void tc_polygon_free(tc_polygon* polygon) { delete polygon; }

int tc_beta_parse(const tc_polygon* polygon, const char* json_text, tc_beta** out) {
  if (!polygon || !json_text || !out) return fail(TC_INVALID, "null argument");
  return guarded([&] {
    auto raw = beta_map_from_json(json::parse(json_text), polygon->value);
    *out = new tc_beta{BoundaryData::validate(polygon->value, raw)};
  });
}

void tc_beta_free(tc_beta* beta) { delete beta; }

int tc_path_parse(const char* json_text, tc_path** out) {
  if (!json_text || !out) return fail(TC_INVALID, "null argument");
  return guarded([&] { *out = new tc_path{path_from_json(json::parse(json_text))}; });
}

void tc_path_free(tc_path* path) { delete path; }

int tc_multiplicity(const tc_polygon* polygon, const tc_beta* beta, const tc_path* path,
                    char** out_value) {
  if (!polygon || !beta || !path || !out_value) return fail(TC_INVALID, "null argument");
  return guarded([&] {
    LatticePath lp{path->value};
    lp.validate(polygon->value);
    MultiplicityEngine engine(polygon->value, beta->value);
    *out_value = dup_string(engine.mult(path->value).get_str());
  });
}

int tc_count(const tc_polygon* polygon, const tc_beta* beta, long long genus, int threads,
             int pruning, char** out_value) {
  if (!polygon || !beta || !out_value) return fail(TC_INVALID, "null argument");
  return guarded([&] {
    CountOptions options;
    options.threads = threads;
    options.pruning = pruning != 0;
    BigInt total = count_paths_with_multiplicity(polygon->value, beta->value, genus, options);
    *out_value = dup_string(total.get_str());
  });
}

int tc_nonzero_paths(const tc_polygon* polygon, const tc_beta* beta, long long genus,
                     int threads, char** out_json) {
  if (!polygon || !beta || !out_json) return fail(TC_INVALID, "null argument");
  return guarded([&] {
    *out_json = dup_string(nonzero_paths_json(polygon->value, beta->value, genus, threads)
                               .dump(2));
  });
}

int tc_p1p1(const char* mu1, const char* mu2, const char* nu1, const char* nu2,
            long long genus, const char* method, int threads, char** out_json) {
  if (!mu1 || !mu2 || !nu1 || !nu2 || !out_json) return fail(TC_INVALID, "null argument");
  bool disagreement = false;
  int rc = guarded([&] {
    TangencyProfile profile{parse_partition(mu1), parse_partition(mu2),
                            parse_partition(nu1), parse_partition(nu2)};
    profile.validate();
    CountMethod m = parse_method(method);
    CountOptions options;
    options.threads = threads;
    json out;
    std::optional<BigInt> lattice, subfloor;
    if (m != CountMethod::Subfloor) {
      lattice = n_trop_p1p1(profile, genus, options);
      out["lattice"] = lattice->get_str();
    }
    if (m != CountMethod::Lattice) {
      if (genus != 0)
        throw Error(Errc::UnsupportedProfile, "subfloor counting requires genus 0");
      subfloor = n_floor(profile);
      out["subfloor"] = subfloor->get_str();
    }
    if (lattice && subfloor) {
      out["agree"] = *lattice == *subfloor;
      disagreement = *lattice != *subfloor;
    }
    *out_json = dup_string(out.dump(2));
  });
  if (rc == TC_OK && disagreement)
    return fail(TC_DISAGREEMENT, "lattice and subfloor counts disagree");
  return rc;
}

int tc_polyscan(const char* template_json, const char* ranges, int degree_bound,
                long long genus, const char* method, int threads, char** out_json) {
  if (!template_json || !ranges || !out_json) return fail(TC_INVALID, "null argument");
  bool disagreement = false;
  int rc = guarded([&] {
    ProfileTemplate tmpl = template_from_json(json::parse(template_json));
    VarRanges var_ranges = parse_ranges(ranges);
    CountMethod m = parse_method(method);
    CountOptions options;
    options.threads = threads;
    int bound = degree_bound;
    if (bound < 0) {
      // Default: |mu1| + 2, evaluated at the low end of every range.
      std::map<std::string, Int> low;
      for (const auto& [name, range] : var_ranges) low[name] = range.first;
      bound = (int)tmpl.instantiate(low).width() + 2;
    }
    ScanReport report = verify_chambers(tmpl, default_walls(tmpl.variables()), var_ranges,
                                        bound, genus, m, options);
    disagreement = !report.methods_agree;
    *out_json = dup_string(report_to_json(report).dump(2));
  });
  if (rc == TC_OK && disagreement)
    return fail(TC_DISAGREEMENT, "lattice and subfloor counts disagree on the grid");
  return rc;
}

}  // extern "C"
