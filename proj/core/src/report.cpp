#include "logquiver/report.hpp"

#include <chrono>
#include <sstream>

#include "logquiver/errors.hpp"
#include "logquiver/hbar.hpp"
#include "logquiver/model_io.hpp"
#include "logquiver/scattering.hpp"

namespace logquiver {

using nlohmann::json;

json half_laurent_to_json(const HalfLaurent& h) {
  json out = json::array();
  for (const auto& [e, c] : h.terms()) out.push_back({e, c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

json rational_to_json(const Rational& r) { return r.get_str(); }

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const Rational& c : p.coeffs()) out.push_back(rational_to_json(c));
  return out;
}

json stability_to_json(const Stability& s) {
  json out = json::array();
  for (const Rational& t : s.theta) {
    if (is_integer(t))
      out.push_back(t.get_num().get_si());
    else
      out.push_back(rational_to_json(t));
  }
  return out;
}

json dt_result_to_json(const DtResult& r) {
  return {{"omega", half_laurent_to_json(r.omega)},
          {"dim", r.moduli_dimension},
          {"count_poly", polynomial_to_json(r.moduli_count)},
          {"theta", stability_to_json(r.theta)},
          {"generic", r.generic}};
}

Stability parse_stability(const std::string& text) {
  Stability s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Rational r(item);
      r.canonicalize();
      s.theta.push_back(r);
    } catch (const std::invalid_argument&) {
      throw UsageError("stability weight '" + item + "' is not a rational number");
    }
  }
  if (s.theta.empty()) throw UsageError("empty stability");
  return s;
}

VerifyReport verify_model(const std::string& label, const Params& params, const ToricModel& model, int gmax,
                          std::optional<int> cap, const std::optional<Stability>& theta) {
  using clock = std::chrono::steady_clock;
  VerifyReport r;
  r.entry = label;
  r.params = params;
  auto [q, d] = build_quiver(model);
  r.quiver = q;
  r.dims = d;
  r.acyclic = is_acyclic(q);
  r.ell = model.tangency_order;
  r.cap = cap ? *cap : required_order(model) + 1;
  if (theta && theta->theta.size() != q.vertex_count)
    throw UsageError("stability has " + std::to_string(theta->theta.size()) + " weights but the quiver has " +
                     std::to_string(q.vertex_count) + " vertices");

  auto t0 = clock::now();
  ClassOmega dt = omega_for_model(model, theta);
  r.dt_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  r.zero_rule = dt.zero_rule;
  r.omega_dt = dt.omega;
  if (dt.dt) {
    r.theta = dt.dt->theta;
    r.diagnostics = dt.dt->diagnostics;
  }

  t0 = clock::now();
  if (r.zero_rule) {
    r.omega_scat = HalfLaurent();
    r.genus_expansion.assign(gmax + 1, Rational(0));
  } else {
    const ScatteringDiagram diagram = scatter_model(model, r.cap);
    r.omega_scat = scat_omega(diagram, model);
    r.genus_expansion = hbar_expand(r.omega_scat, static_cast<int>(r.ell), gmax);
  }
  r.scattering_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  r.equal = r.omega_dt == r.omega_scat;
  return r;
}

VerifyReport verify_entry(const std::string& name, const Params& params, int gmax, std::optional<int> cap,
                          const std::optional<Stability>& theta) {
  const CatalogInstance inst = catalog(name, params);
  return verify_model(name, params, inst.model, gmax, cap, theta);
}

json report_to_json(const VerifyReport& r, bool with_timings) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json genus = json::array();
  for (const Rational& n : r.genus_expansion) genus.push_back(rational_to_json(n));
  json j = {{"entry", r.entry},
            {"params", params},
            {"quiver", quiver_to_json(r.quiver, r.dims)},
            {"acyclic", r.acyclic},
            {"zero_rule", r.zero_rule},
            {"theta", r.theta ? stability_to_json(*r.theta) : json(nullptr)},
            {"omega_dt", half_laurent_to_json(r.omega_dt)},
            {"omega_scat", half_laurent_to_json(r.omega_scat)},
            {"omega", r.omega_scat.to_string()},
            {"equal", r.equal},
            {"ell", r.ell},
            {"cap", r.cap},
            {"N", genus},
            {"calibration", Calibration::to_json()},
            {"diagnostics", r.diagnostics}};
  if (with_timings) j["timings"] = {{"dt_seconds", r.dt_seconds}, {"scattering_seconds", r.scattering_seconds}};
  return j;
}

}  // namespace logquiver
