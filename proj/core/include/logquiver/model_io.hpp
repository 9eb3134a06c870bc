#pragma once

#include <string>

#include <json.hpp>

#include "logquiver/geometry.hpp"

namespace logquiver {

/// Reads {"name", "rays", "blowups": [{"ray", "dim", "point"?}], "tangency_ray",
/// "tangency_order", "boundary_degrees"?}. Throws UsageError on schema problems.
ToricModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ToricModel& model);
ToricModel load_model_file(const std::string& path);

/// {"vertices", "arrows", "dims", "acyclic", "topo_order"}
nlohmann::json quiver_to_json(const Quiver& q, const DimensionVector& d);

}  // namespace logquiver
