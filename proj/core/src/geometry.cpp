#include "logquiver/geometry.hpp"

#include <numeric>
#include <queue>
#include <sstream>

#include "logquiver/errors.hpp"

namespace logquiver {

namespace {

std::string fmt(Lattice m) {
  std::ostringstream os;
  os << "(" << m.x << "," << m.y << ")";
  return os.str();
}

}  // namespace

long skew_form(Lattice a, Lattice b) { return skew(a, b); }

bool is_primitive(Lattice m) { return !m.is_zero() && std::gcd(m.x, m.y) == 1; }

Lattice primitive_part(Lattice m, long* multiplicity) {
  const long g = std::gcd(m.x, m.y);
  if (g == 0) throw ModelError("zero vector has no primitive part");
  if (multiplicity) *multiplicity = g;
  return {m.x / g, m.y / g};
}

void ToricModel::validate() const {
  if (rays.empty()) throw ModelError("model has no rays");
  for (const Lattice& r : rays)
    if (!is_primitive(r)) throw ModelError("ray " + fmt(r) + " is not primitive");
  if (blowups.empty()) throw ModelError("model has no blow-ups");
  for (const BlowupRecord& b : blowups)
    if (b.ray >= rays.size()) throw ModelError("blow-up references missing ray");
  if (tangency_ray >= rays.size()) throw ModelError("tangency ray index out of range");
  if (tangency_order <= 0) throw ModelError("tangency order must be positive");
  if (!boundary_degrees.empty() && boundary_degrees.size() != rays.size())
    throw ModelError("boundary degrees must list one value per ray");
}

int Quiver::arrow_count() const {
  int s = 0;
  for (const auto& row : arrows) s += std::accumulate(row.begin(), row.end(), 0);
  return s;
}

bool DimensionVector::valid() const {
  for (long d : entries)
    if (d < 0) return false;
  return true;
}

long DimensionVector::total() const { return std::accumulate(entries.begin(), entries.end(), 0L); }

bool DimensionVector::is_primitive() const {
  long g = 0;
  for (long d : entries) g = std::gcd(g, d);
  return g == 1;
}

std::pair<Quiver, DimensionVector> build_quiver(const ToricModel& model) {
  model.validate();
  const size_t n = model.blowups.size();
  Quiver q(n);
  DimensionVector d;
  d.entries.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    const Lattice mj = model.rays[model.blowups[j].ray];
    for (size_t k = 0; k < n; ++k) {
      const long s = skew_form(mj, model.rays[model.blowups[k].ray]);
      q.arrows[j][k] = static_cast<int>(std::max(s, 0L));
    }
    d.entries.push_back(model.blowups[j].dim);
  }
  return {q, d};
}

BalanceReport check_balancing(const ToricModel& model, const std::vector<long>& degrees) {
  BalanceReport report;
  if (degrees.size() != model.rays.size()) {
    report.ok = false;
    report.violations.push_back("expected one boundary degree per ray");
    return report;
  }
  Lattice sum{};
  for (size_t i = 0; i < degrees.size(); ++i) sum = sum + degrees[i] * model.rays[i];
  if (!sum.is_zero()) {
    report.ok = false;
    report.violations.push_back("balancing sum " + fmt(sum) + " != (0,0)");
  }
  std::vector<long> used(model.rays.size(), 0);
  for (const BlowupRecord& b : model.blowups) used[b.ray] += b.dim;
  for (size_t i = 0; i < used.size(); ++i) {
    if (used[i] > degrees[i]) {
      report.ok = false;
      std::ostringstream os;
      os << "blow-up dimensions on ray " << fmt(model.rays[i]) << " sum to " << used[i]
         << " > degree " << degrees[i];
      report.violations.push_back(os.str());
    }
  }
  return report;
}

std::optional<std::vector<size_t>> topological_order(const Quiver& q) {
  const size_t n = q.vertex_count;
  std::vector<int> indegree(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      if (q.arrows[j][k] > 0) ++indegree[k];
  std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
  for (size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<size_t> order;
  while (!ready.empty()) {
    const size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (size_t k = 0; k < n; ++k)
      if (q.arrows[v][k] > 0 && --indegree[k] == 0) ready.push(k);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

ExtractionRay extraction_ray(const ToricModel& model) {
  model.validate();
  Lattice sum{};
  for (const BlowupRecord& b : model.blowups) sum = sum + b.dim * model.rays[b.ray];
  if (sum.is_zero()) throw ModelError("blow-up contributions sum to zero");
  ExtractionRay r;
  r.direction = primitive_part(sum, &r.ell);
  if (r.ell != model.tangency_order) {
    std::ostringstream os;
    os << "extraction multiplicity " << r.ell << " differs from tangency order " << model.tangency_order;
    throw ModelError(os.str());
  }
  if (r.direction != -model.rays[model.tangency_ray])
    throw ModelError("extraction direction " + fmt(r.direction) + " is not opposite the tangency ray");
  return r;
}

}  // namespace logquiver
