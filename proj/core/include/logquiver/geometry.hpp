#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logquiver/series.hpp"

namespace logquiver {

/// Interior blow-up of a point on the boundary divisor of one ray.
struct BlowupRecord {
  size_t ray = 0;
  /// Intersection of the lifted class with the exceptional divisor; may be negative.
  long dim = 0;
  /// Marks the blow-ups of the point conditions moved onto the second divisor.
  bool point_condition = false;
  friend bool operator==(const BlowupRecord&, const BlowupRecord&) = default;
};

/// Toric model of a log Calabi-Yau surface together with the target class data.
struct ToricModel {
  std::string name;
  std::vector<Lattice> rays;
  std::vector<BlowupRecord> blowups;
  size_t tangency_ray = 0;
  long tangency_order = 0;
  /// Class degrees against each toric boundary divisor, when known.
  std::vector<long> boundary_degrees;

  /// Throws ModelError on non-primitive rays, bad indices, or empty blow-up lists.
  void validate() const;
};

struct Quiver {
  size_t vertex_count = 0;
  /// arrows[j][k] = number of arrows j -> k.
  std::vector<std::vector<int>> arrows;

  explicit Quiver(size_t n = 0) : vertex_count(n), arrows(n, std::vector<int>(n, 0)) {}
  int arrow_count() const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

struct DimensionVector {
  std::vector<long> entries;
  /// False when some entry is negative; the invariant is then defined to be zero.
  bool valid() const;
  long total() const;
  bool is_primitive() const;
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

long skew_form(Lattice a, Lattice b);
bool is_primitive(Lattice m);
Lattice primitive_part(Lattice m, long* multiplicity = nullptr);

/// One vertex per blow-up record, max(<m_j, m_k>, 0) arrows from j to k.
std::pair<Quiver, DimensionVector> build_quiver(const ToricModel& model);

struct BalanceReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks sum_rays degree * direction = 0 and that the blow-up dimensions on
/// each ray do not exceed that ray's degree.
BalanceReport check_balancing(const ToricModel& model, const std::vector<long>& boundary_degrees);

/// Topological order (arrows j -> k only from earlier to later positions), or
/// nullopt if the quiver has an oriented cycle. Ties are broken by vertex index.
std::optional<std::vector<size_t>> topological_order(const Quiver& q);
inline bool is_acyclic(const Quiver& q) { return topological_order(q).has_value(); }

struct ExtractionRay {
  Lattice direction;  // primitive
  long ell = 0;
};

/// Primitive direction and divisibility of sum_j dim_j * m_{ray(j)}; checks it
/// against the model's tangency data. Throws ModelError on mismatch.
ExtractionRay extraction_ray(const ToricModel& model);

}  // namespace logquiver
