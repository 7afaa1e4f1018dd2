#pragma once
// JSON and text emission for the command-line surface. All machine output is
// versioned ("schema": "1") and key order is fixed at construction, so
// identical inputs give byte-identical documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "qzeta/bk.hpp"
#include "qzeta/verify.hpp"
#include "qzeta/vinberg.hpp"

namespace qzeta {

using Json = nlohmann::ordered_json;

inline Json json_header(const std::string& command) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

inline Json json_of(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["scope"] = r.scope;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json json_of_checks(const std::string& suite, const CheckOptions& opts,
                           const std::vector<CheckResult>& rs) {
  Json j = json_header("verify");
  j["suite"] = suite;
  j["n_max"] = opts.n_max;
  j["degree"] = opts.degree;
  if (!opts.fault_id.empty()) j["fault_id"] = opts.fault_id;
  bool all = true;
  Json checks = Json::array();
  for (const CheckResult& r : rs) {
    all = all && r.pass;
    checks.push_back(json_of(r));
  }
  j["checks"] = checks;
  j["all_pass"] = all;
  return j;
}

inline Json json_of(const DualGroupDesc& d) {
  Json j;
  j["label"] = d.label;
  j["central_torus_rank"] = d.central_torus_rank;
  j["cover"] = d.cover.name();
  j["center_factors"] = d.center_factors;
  j["kernel_factors"] = d.kernel_factors;
  j["glue_order"] = d.glue_order;
  return j;
}

inline Json json_of(const HwLine& ln) {
  Json j;
  j["label"] = root_label(ln.label);
  j["z_exponent"] = ln.zexp;
  j["half_eigenvalue"] = ln.s.str();
  return j;
}

inline Json json_of_lines(const std::vector<HwLine>& lines) {
  Json a = Json::array();
  for (const HwLine& ln : lines) a.push_back(json_of(ln));
  return a;
}

// "key,value" rows, with a tabular block for a "checks" ledger; strings that
// could break a row are double-quoted.
inline std::string csv_of(const Json& j) {
  auto quote = [](std::string s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  auto cell = [&quote](const Json& v) {
    if (v.is_string()) return quote(v.get<std::string>());
    return quote(v.dump());
  };
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "checks" && value.is_array()) {
      out += "id,suite,pass,elapsed_ms\n";
      for (const Json& row : value)
        out += cell(row.at("id")) + "," + cell(row.at("suite")) + "," +
               cell(row.at("pass")) + "," + cell(row.at("elapsed_ms")) + "\n";
      continue;
    }
    out += quote(key) + "," + cell(value) + "\n";
  }
  return out;
}

inline void pretty_lines(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out += indent + key + ":\n";
        pretty_lines(value, indent + "  ", out);
      } else {
        out += indent + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
               "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_object() || v.is_array()) {
        out += indent + "-\n";
        pretty_lines(v, indent + "  ", out);
      } else {
        out += indent + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else {
    out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

inline std::string pretty_of(const Json& j) {
  std::string out;
  pretty_lines(j, "", out);
  return out;
}

inline std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") return csv_of(j);
  if (format == "pretty") return pretty_of(j);
  throw structural_error("unknown output format: " + format);
}

}  // namespace qzeta
