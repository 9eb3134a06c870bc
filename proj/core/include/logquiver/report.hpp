#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logquiver/catalog.hpp"
#include "logquiver/dt.hpp"

namespace logquiver {

/// [[half_exponent, num, den], ...] in increasing exponent order.
nlohmann::json half_laurent_to_json(const HalfLaurent& h);
nlohmann::json rational_to_json(const Rational& r);  // "p/q" or "p"
nlohmann::json polynomial_to_json(const Polynomial& p);
nlohmann::json stability_to_json(const Stability& s);
/// {"omega", "dim", "count_poly", "theta", "generic"}
nlohmann::json dt_result_to_json(const DtResult& r);

/// Parses "3,2,0" or "1/2,-1" into a stability.
Stability parse_stability(const std::string& text);

/// Both sides of the correspondence on one class.
struct VerifyReport {
  std::string entry;
  Params params;
  Quiver quiver;
  DimensionVector dims;
  bool acyclic = false;
  bool zero_rule = false;
  std::optional<Stability> theta;
  HalfLaurent omega_dt;
  HalfLaurent omega_scat;
  bool equal = false;
  long ell = 0;
  int cap = 0;
  std::vector<Rational> genus_expansion;  // N_0..N_gmax
  std::vector<std::string> diagnostics;
  double dt_seconds = 0;
  double scattering_seconds = 0;

  bool passed() const { return equal && diagnostics.empty(); }
};

/// Runs the quiver and scattering engines on a model and compares them.
/// cap defaults to the target degree plus one. Cyclic quivers raise HypothesisError.
VerifyReport verify_model(const std::string& label, const Params& params, const ToricModel& model, int gmax,
                          std::optional<int> cap = std::nullopt,
                          const std::optional<Stability>& theta = std::nullopt);
VerifyReport verify_entry(const std::string& name, const Params& params, int gmax,
                          std::optional<int> cap = std::nullopt,
                          const std::optional<Stability>& theta = std::nullopt);

/// Timings are left out unless requested so that reports are reproducible.
nlohmann::json report_to_json(const VerifyReport& r, bool with_timings = false);

}  // namespace logquiver
