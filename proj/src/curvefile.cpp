#include "gendiv/curvefile.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gendiv/error.hpp"

namespace gendiv {

namespace {

using nlohmann::json;

Rat rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what() +
                       " (branch points must be rational; complex or floating "
                       "values are not supported)");
    }
  }
  throw ParseError(where + ": expected a rational number as a string \"p/q\"");
}

Cluster cluster_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    if (!j.contains("points") || !j.at("points").is_array())
      throw ParseError(where + ": preset clusters need a \"points\" array");
    std::vector<Rat> pts;
    for (std::size_t i = 0; i < j.at("points").size(); ++i)
      pts.push_back(rational_field(j.at("points")[i],
                                   where + "/points[" + std::to_string(i) + "]"));
    if (preset == "node") {
      if (pts.size() != 2) throw ParseError(where + ": a node needs two points");
      return node_cluster(pts[0], pts[1]);
    }
    if (preset == "cusp") {
      if (pts.size() != 1) throw ParseError(where + ": a cusp needs one point");
      return cusp_cluster(pts[0]);
    }
    if (preset == "tacnode") {
      if (pts.size() != 2) throw ParseError(where + ": a tacnode needs two points");
      return tacnode_cluster(pts[0], pts[1]);
    }
    throw ParseError(where + ": unknown preset '" + preset + "'");
  }
  // Raw cluster: branches, conductor orders, condition matrix over jets.
  Cluster c;
  if (!j.contains("branches") || !j.at("branches").is_array())
    throw ParseError(where + ": expected a \"branches\" array");
  for (std::size_t i = 0; i < j.at("branches").size(); ++i)
    c.branches.push_back(rational_field(j.at("branches")[i],
                                        where + "/branches[" + std::to_string(i) + "]"));
  if (!j.contains("conductor_orders") || !j.at("conductor_orders").is_array())
    throw ParseError(where + ": expected a \"conductor_orders\" array");
  for (const auto& v : j.at("conductor_orders")) {
    if (!v.is_number_integer()) throw ParseError(where + ": conductor orders must be integers");
    c.jet_orders.push_back(v.get<long>());
  }
  if (!j.contains("conditions") || !j.at("conditions").is_array() || j.at("conditions").empty())
    throw ParseError(where + ": expected a nonempty \"conditions\" matrix");
  const auto& rows = j.at("conditions");
  c.conditions = Mat(static_cast<long>(rows.size()), c.jet_size());
  c.conditions.setConstant(Rat(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || static_cast<long>(rows[r].size()) != c.jet_size())
      throw ParseError(where + "/conditions[" + std::to_string(r) +
                       "]: row width must equal the total jet size " +
                       std::to_string(c.jet_size()));
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      c.conditions(static_cast<long>(r), static_cast<long>(k)) = rational_field(
          rows[r][k], where + "/conditions[" + std::to_string(r) + "][" + std::to_string(k) + "]");
  }
  return c;
}

}  // namespace

Curve parse_curve_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("chart1"))
    throw ParseError("curve file needs a \"chart1\" object");
  if (j.contains("field") && j.at("field") != "Q")
    throw ParseError("/field: only the rational field \"Q\" is supported");
  const json& chart = j.at("chart1");
  if (chart.contains("semigroup")) {
    std::vector<long> gens;
    for (const auto& v : chart.at("semigroup")) {
      if (!v.is_number_integer())
        throw ParseError("/chart1/semigroup: generators must be integers");
      gens.push_back(v.get<long>());
    }
    return curve_from_semigroup(gens);
  }
  if (chart.contains("clusters")) {
    std::vector<Cluster> clusters;
    const auto& arr = chart.at("clusters");
    if (!arr.is_array() || arr.empty())
      throw ParseError("/chart1/clusters: expected a nonempty array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      clusters.push_back(cluster_from_json(arr[i], "/chart1/clusters[" + std::to_string(i) + "]"));
    return curve_from_clusters(clusters);
  }
  throw ParseError("/chart1: expected either \"semigroup\" or \"clusters\"");
}

Curve load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open curve file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_json(ss.str());
}

std::string curve_to_json(const Curve& c) {
  json j;
  j["field"] = "Q";
  if (c.data().semigroup.has_value()) {
    j["chart1"]["semigroup"] = *c.data().semigroup;
  } else {
    json arr = json::array();
    for (const auto& cl : c.clusters()) {
      json jc;
      if (cl.preset == "node" || cl.preset == "cusp" || cl.preset == "tacnode") {
        jc["preset"] = cl.preset;
        json pts = json::array();
        for (const auto& b : cl.branches) pts.push_back(b.str());
        jc["points"] = pts;
      } else {
        json brs = json::array();
        for (const auto& b : cl.branches) brs.push_back(b.str());
        jc["branches"] = brs;
        jc["conductor_orders"] = cl.jet_orders;
        json rows = json::array();
        for (long r = 0; r < cl.conditions.rows(); ++r) {
          json row = json::array();
          for (long k = 0; k < cl.conditions.cols(); ++k)
            row.push_back(cl.conditions(r, k).str());
          rows.push_back(row);
        }
        jc["conditions"] = rows;
      }
      arr.push_back(jc);
    }
    j["chart1"]["clusters"] = arr;
  }
  return j.dump(2);
}

}  // namespace gendiv
