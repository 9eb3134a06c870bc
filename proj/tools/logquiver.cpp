#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "logquiver/catalog.hpp"
#include "logquiver/dt.hpp"
#include "logquiver/errors.hpp"
#include "logquiver/hbar.hpp"
#include "logquiver/model_io.hpp"
#include "logquiver/report.hpp"
#include "logquiver/scattering.hpp"

using namespace logquiver;
using nlohmann::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kHypothesis = 3;
constexpr int kFailure = 4;

struct Target {
  std::string name;
  std::string params_text;
  std::string model_file;
  std::string theta_text;
  bool json_out = false;

  std::string label() const { return model_file.empty() ? name : model_file; }
  Params params() const { return parse_params(params_text); }
  ToricModel model() const {
    if (!model_file.empty()) {
      if (!name.empty()) throw UsageError("give either a catalog name or --model, not both");
      return load_model_file(model_file);
    }
    if (name.empty()) throw UsageError("a catalog name or --model is required");
    return catalog(name, params()).model;
  }
  std::optional<Stability> theta() const {
    if (theta_text.empty()) return std::nullopt;
    return parse_stability(theta_text);
  }
};

void add_target(CLI::App* cmd, Target& t, bool with_theta) {
  cmd->add_option("name", t.name, "catalog entry, e.g. P2(1,4)");
  cmd->add_option("--params,-p", t.params_text, "parameters as key=value pairs, e.g. d1=1,d2=2");
  cmd->add_option("--model,-m", t.model_file, "toric model JSON file instead of a catalog entry");
  cmd->add_flag("--json", t.json_out, "print JSON");
  if (with_theta) cmd->add_option("--theta", t.theta_text, "stability weights, e.g. 3,2,0 (overrides calibration)");
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const Rational& x : v) s += (s.empty() ? "" : ", ") + x.get_str();
  return "[" + s + "]";
}

int cmd_catalog(bool only_acyclic, const std::string& filter, bool json_out) {
  std::string f = filter;
  if (only_acyclic) {
    if (f != "all" && f != "acyclic") throw UsageError("--acyclic conflicts with --filter " + f);
    f = "acyclic";
  }
  if (f != "all" && f != "acyclic" && f != "cyclic") throw UsageError("unknown filter '" + f + "'");
  json rows = json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    if ((f == "acyclic" && !e.acyclic) || (f == "cyclic" && e.acyclic)) continue;
    rows.push_back({{"name", e.name}, {"surface", e.surface}, {"params", e.parameter_names}, {"acyclic", e.acyclic}});
  }
  if (json_out) {
    std::cout << rows.dump(2) << "\n";
    return kOk;
  }
  for (const auto& r : rows) {
    std::string params;
    for (const auto& p : r["params"]) params += (params.empty() ? "" : ",") + p.get<std::string>();
    std::printf("%-12s %-4s %-10s %s\n", r["name"].get<std::string>().c_str(), r["surface"].get<std::string>().c_str(),
                params.c_str(), r["acyclic"].get<bool>() ? "acyclic" : "cyclic");
  }
  return kOk;
}

int cmd_quiver(const Target& t) {
  const ToricModel model = t.model();
  auto [q, d] = build_quiver(model);
  json j = quiver_to_json(q, d);
  j["model"] = model_to_json(model);
  if (!model.boundary_degrees.empty()) {
    const BalanceReport b = check_balancing(model, model.boundary_degrees);
    j["balanced"] = b.ok;
    j["balance_violations"] = b.violations;
  }
  std::cout << j.dump(t.json_out ? 2 : -1) << "\n";
  return kOk;
}

int cmd_dt(const Target& t) {
  const ToricModel model = t.model();
  const ClassOmega c = omega_for_model(model, t.theta());
  json j = {{"entry", t.label()}, {"zero_rule", c.zero_rule}, {"dims", c.dims.entries}};
  if (c.dt)
    j.update(dt_result_to_json(*c.dt));
  else
    j["omega"] = json::array();
  if (t.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "omega = " << c.omega.to_string() << "\n";
    if (c.dt) std::cout << "moduli count = " << c.dt->moduli_count.to_string() << ", dim " << c.dt->moduli_dimension << "\n";
    if (c.zero_rule) std::cout << "dimension vector has a negative entry; omega is zero by convention\n";
  }
  return kOk;
}

int cmd_scatter(const Target& t, std::optional<int> order, bool classical) {
  const ToricModel model = t.model();
  ScatteringDiagram d = scatter_model(model, order, !classical);
  json j = diagram_to_json(d);
  j["calibration"] = Calibration::to_json();
  j["omega"] = half_laurent_to_json(scat_omega(d, model));
  std::cout << j.dump(t.json_out ? 2 : -1) << "\n";
  return kOk;
}

int cmd_gw(const Target& t, std::optional<int> order, int gmax) {
  const ToricModel model = t.model();
  bool zero = false;
  for (const BlowupRecord& b : model.blowups) zero = zero || b.dim < 0;
  std::vector<Rational> n(gmax + 1, Rational(0));
  if (!zero) n = gw_block(scatter_model(model, order), model, gmax);
  if (t.json_out) {
    json arr = json::array();
    for (const Rational& x : n) arr.push_back(rational_to_json(x));
    std::cout << json{{"entry", t.label()}, {"N", arr}, {"calibration", Calibration::to_json()}}.dump(2) << "\n";
  } else {
    std::cout << "N = " << join(n) << "\n";
  }
  return kOk;
}

int cmd_verify(const Target& t, std::optional<int> order, int gmax, bool timings) {
  const ToricModel model = t.model();
  const VerifyReport r = verify_model(t.label(), t.model_file.empty() ? t.params() : Params{}, model, gmax, order, t.theta());
  if (t.json_out) {
    std::cout << report_to_json(r, timings).dump(2) << "\n";
  } else {
    std::cout << r.entry << " " << format_params(r.params) << "\n"
              << "  omega (quiver)      = " << r.omega_dt.to_string() << "\n"
              << "  omega (scattering)  = " << r.omega_scat.to_string() << "\n"
              << "  equal               = " << (r.equal ? "true" : "false") << "\n"
              << "  N_0..N_" << gmax << "           = " << join(r.genus_expansion) << "\n";
    if (r.theta) std::cout << "  theta               = " << stability_to_json(*r.theta).dump() << "\n";
    for (const auto& d : r.diagnostics) std::cout << "  diagnostic: " << d << "\n";
    if (timings) std::cout << "  time: quiver " << r.dt_seconds << " s, scattering " << r.scattering_seconds << " s\n";
  }
  return r.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quivers and scattering diagrams for log Calabi-Yau surfaces"};
  app.require_subcommand(1);

  bool only_acyclic = false, catalog_json = false;
  std::string filter = "all";
  auto* cat = app.add_subcommand("catalog", "list the built-in examples");
  cat->add_flag("--acyclic", only_acyclic, "only entries with an acyclic quiver");
  cat->add_option("--filter", filter, "all | acyclic | cyclic");
  cat->add_flag("--json", catalog_json, "print JSON");

  Target qt, dtt, sct, gwt, vt;
  std::optional<int> sc_order, gw_order, v_order;
  int gw_gmax = 2, v_gmax = 2;
  bool classical = false, timings = false;

  auto* quiver = app.add_subcommand("quiver", "quiver and dimension vector of a class");
  add_target(quiver, qt, false);
  auto* dt = app.add_subcommand("dt", "refined DT invariant of the quiver");
  add_target(dt, dtt, true);
  auto* scatter = app.add_subcommand("scatter", "completed scattering diagram");
  add_target(scatter, sct, false);
  scatter->add_option("--order,-L", sc_order, "truncation order (default: target degree)");
  scatter->add_flag("--classical", classical, "commutative diagram (q^{1/2} = 1)");
  auto* gw = app.add_subcommand("gw", "genus expansion N_0..N_gmax from scattering");
  add_target(gw, gwt, false);
  gw->add_option("--order,-L", gw_order, "truncation order");
  gw->add_option("--gmax", gw_gmax, "highest genus")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "compare the quiver and scattering sides");
  add_target(verify, vt, true);
  verify->add_option("--order,-L", v_order, "truncation order (default: target degree + 1)");
  verify->add_option("--gmax", v_gmax, "highest genus")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", timings, "include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*cat) return cmd_catalog(only_acyclic, filter, catalog_json);
    if (*quiver) return cmd_quiver(qt);
    if (*dt) return cmd_dt(dtt);
    if (*scatter) return cmd_scatter(sct, sc_order, classical);
    if (*gw) return cmd_gw(gwt, gw_order, gw_gmax);
    if (*verify) return cmd_verify(vt, v_order, v_gmax, timings);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const DtError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.diagnostics) std::cerr << "  " << d << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
