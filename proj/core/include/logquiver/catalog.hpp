#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "logquiver/geometry.hpp"

namespace logquiver {

using Params = std::map<std::string, long>;

/// A catalog entry evaluated at concrete parameters.
struct CatalogInstance {
  ToricModel model;
  long beta_d1 = 0;  // tangency order with the first divisor
  long beta_d2 = 0;  // number of point conditions
  bool expected_acyclic = false;
};

struct CatalogEntry {
  std::string name;
  std::string surface;  // e.g. "P2", "F1", "FN"
  std::vector<std::string> parameter_names;
  bool acyclic = false;
  std::function<CatalogInstance(const Params&)> generate;
};

/// The ten hand-encoded examples, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws UsageError on unknown names.
const CatalogEntry& find_entry(const std::string& name);

/// Evaluates an entry. Parameters must be nonnegative integers (N >= 1), with a
/// positive tangency order and a nonnegative number of point conditions;
/// violations raise UsageError.
CatalogInstance catalog(const std::string& name, const Params& params);

/// Parses "d=2" / "d1=1,d2=2" style assignments.
Params parse_params(const std::string& text);
std::string format_params(const Params& params);

}  // namespace logquiver
