#include "strathom/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

namespace strathom {

using nlohmann::json;

ComplexPtr complex_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("maximal_simplices"))
    throw std::invalid_argument("complex json: missing vertices/maximal_simplices");
  std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, VertexId> id;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (id.count(labels[i])) throw std::invalid_argument("complex json: duplicate vertex label " + labels[i]);
    id[labels[i]] = static_cast<VertexId>(i);
  }
  std::vector<Simplex> maximal;
  for (const auto& arr : j.at("maximal_simplices")) {
    std::vector<VertexId> vs;
    for (const auto& s : arr) {
      auto it = id.find(s.get<std::string>());
      if (it == id.end()) throw std::invalid_argument("complex json: unknown vertex " + s.get<std::string>());
      vs.push_back(it->second);
    }
    maximal.emplace_back(std::move(vs));
  }
  return Complex::from_maximal(std::move(labels), std::move(maximal));
}

json complex_to_json(const Complex& k) {
  std::vector<VertexId> order(k.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VertexId>(i);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return k.label(a) < k.label(b); });

  json verts = json::array();
  for (VertexId v : order) verts.push_back(k.label(v));

  std::vector<std::vector<std::string>> maximal;
  for (SimplexId i = 0; i < static_cast<SimplexId>(k.size()); ++i) {
    if (k.coface_ids(i).size() != 1) continue;  // only itself => maximal
    std::vector<std::string> names;
    for (VertexId v : k.at(i).v) names.push_back(k.label(v));
    std::sort(names.begin(), names.end());
    maximal.push_back(std::move(names));
  }
  std::sort(maximal.begin(), maximal.end());
  json out;
  out["vertices"] = verts;
  out["maximal_simplices"] = maximal;
  return out;
}

ComplexPtr load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return complex_from_json(j);
}

void save_complex_file(const Complex& k, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << complex_to_json(k).dump(2) << "\n";
}

}  // namespace strathom
