#include "logquiver/model_io.hpp"

#include <fstream>

#include "logquiver/errors.hpp"

namespace logquiver {

using nlohmann::json;

ToricModel model_from_json(const json& j) {
  try {
    ToricModel m;
    m.name = j.value("name", std::string("custom"));
    for (const auto& r : j.at("rays")) {
      if (!r.is_array() || r.size() != 2) throw UsageError("each ray must be a pair [a,b]");
      m.rays.push_back({r[0].get<long>(), r[1].get<long>()});
    }
    for (const auto& b : j.at("blowups")) {
      BlowupRecord rec;
      const long ray = b.at("ray").get<long>();
      if (ray < 0) throw UsageError("blow-up ray index must be nonnegative");
      rec.ray = static_cast<size_t>(ray);
      rec.dim = b.at("dim").get<long>();
      rec.point_condition = b.value("point", false);
      m.blowups.push_back(rec);
    }
    const long tr = j.at("tangency_ray").get<long>();
    if (tr < 0) throw UsageError("tangency_ray must be nonnegative");
    m.tangency_ray = static_cast<size_t>(tr);
    m.tangency_order = j.at("tangency_order").get<long>();
    if (j.contains("boundary_degrees")) m.boundary_degrees = j.at("boundary_degrees").get<std::vector<long>>();
    m.validate();
    return m;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed model: ") + e.what());
  } catch (const ModelError& e) {
    throw UsageError(std::string("invalid model: ") + e.what());
  }
}

json model_to_json(const ToricModel& model) {
  json rays = json::array();
  for (const Lattice& r : model.rays) rays.push_back({r.x, r.y});
  json blowups = json::array();
  for (const BlowupRecord& b : model.blowups)
    blowups.push_back({{"ray", b.ray}, {"dim", b.dim}, {"point", b.point_condition}});
  json j = {{"name", model.name},
            {"rays", rays},
            {"blowups", blowups},
            {"tangency_ray", model.tangency_ray},
            {"tangency_order", model.tangency_order}};
  if (!model.boundary_degrees.empty()) j["boundary_degrees"] = model.boundary_degrees;
  return j;
}

ToricModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("model file '" + path + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

json quiver_to_json(const Quiver& q, const DimensionVector& d) {
  auto order = topological_order(q);
  json j = {{"vertices", q.vertex_count},
            {"arrows", q.arrows},
            {"dims", d.entries},
            {"acyclic", order.has_value()},
            {"topo_order", order ? json(*order) : json::array()}};
  return j;
}

}  // namespace logquiver
