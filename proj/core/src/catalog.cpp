#include "logquiver/catalog.hpp"

#include <sstream>

#include "logquiver/errors.hpp"

namespace logquiver {

namespace {

const std::vector<Lattice> kP2Fan = {{-1, 0}, {0, -1}, {1, 1}};
const std::vector<Lattice> kF0Fan = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
const std::vector<Lattice> kF1Fan = {{-1, 0}, {0, -1}, {0, 1}, {1, 1}};

std::vector<Lattice> hirzebruch_fan(long n) { return {{-1, 0}, {0, -1}, {0, 1}, {1, n}}; }

long get(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
  if (it->second < 0) throw UsageError("parameter '" + key + "' must be nonnegative");
  return it->second;
}

struct Builder {
  CatalogInstance inst;

  Builder(const std::string& name, std::vector<Lattice> rays, std::vector<long> degrees) {
    inst.model.name = name;
    inst.model.rays = std::move(rays);
    inst.model.boundary_degrees = std::move(degrees);
  }
  Builder& points(size_t ray, long count) {
    for (long i = 0; i < count; ++i) inst.model.blowups.push_back({ray, 1, true});
    return *this;
  }
  Builder& blowup(size_t ray, long dim) {
    inst.model.blowups.push_back({ray, dim, false});
    return *this;
  }
  CatalogInstance finish(size_t tangency_ray, long beta_d1, long beta_d2, bool acyclic) {
    if (beta_d1 <= 0) throw UsageError(inst.model.name + ": tangency order must be positive");
    if (beta_d2 < 0) throw UsageError(inst.model.name + ": negative number of point conditions");
    inst.model.tangency_ray = tangency_ray;
    inst.model.tangency_order = beta_d1;
    inst.beta_d1 = beta_d1;
    inst.beta_d2 = beta_d2;
    inst.expected_acyclic = acyclic;
    return inst;
  }
};

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> e;

  e.push_back({"P2(1,4)", "P2", {"d"}, true, [](const Params& p) {
                 const long d = get(p, "d");
                 return Builder("P2(1,4)", hirzebruch_fan(2), {d, 2 * d, 0, d})
                     .points(1, 2 * d)
                     .blowup(0, d)
                     .finish(3, d, 2 * d, true);
               }});

  e.push_back({"P2(4,1)", "P2", {"d"}, true, [](const Params& p) {
                 const long d = get(p, "d");
                 return Builder("P2(4,1)", hirzebruch_fan(2), {d, 2 * d, 0, d})
                     .points(3, d)
                     .blowup(0, d)
                     .finish(1, 2 * d, d, true);
               }});

  e.push_back({"F0(2,2)", "F0", {"d1", "d2"}, true, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 const long s = d1 + d2;
                 return Builder("F0(2,2)", kP2Fan, {s, s, s})
                     .points(1, s)
                     .blowup(2, d1)
                     .blowup(2, d2)
                     .finish(0, s, s, true);
               }});

  e.push_back({"F1(0,4)", "F1", {"d1", "d2"}, false, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 return Builder("F1(0,4)", hirzebruch_fan(2), {d2, 2 * d2, 0, d2})
                     .points(1, 2 * d2)
                     .blowup(0, d2)
                     .blowup(3, d2 - d1)
                     .finish(3, d1, 2 * d2, false);
               }});

  e.push_back({"F1(4,0)", "F1", {"d1", "d2"}, true, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 return Builder("F1(4,0)", hirzebruch_fan(2), {d2, 2 * d2, 0, d2})
                     .points(3, d1)
                     .blowup(3, d2 - d1)
                     .blowup(0, d2)
                     .finish(1, 2 * d2, d1, true);
               }});

  e.push_back({"F1(1,3)", "F1", {"d1", "d2"}, false, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 return Builder("F1(1,3)", kF1Fan, {d1, d1 + d2, d2, d1})
                     .points(1, d1 + d2)
                     .blowup(0, d1)
                     .blowup(3, d1)
                     .finish(2, d2, d1 + d2, false);
               }});

  e.push_back({"F1(3,1)", "F1", {"d1", "d2"}, true, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 return Builder("F1(3,1)", kF1Fan, {d1, d1 + d2, d2, d1})
                     .points(2, d2)
                     .blowup(0, d1)
                     .blowup(3, d1)
                     .finish(1, d1 + d2, d2, true);
               }});

  e.push_back({"F2(2,2)", "F2", {"d1", "d2"}, true, [](const Params& p) {
                 const long d1 = get(p, "d1"), d2 = get(p, "d2");
                 return Builder("F2(2,2)", kF0Fan, {d1, d2, d2, d1})
                     .points(1, d2)
                     .blowup(0, d1)
                     .blowup(3, d1)
                     .finish(2, d2, d2, true);
               }});

  e.push_back({"FN(-N,N+4)", "FN", {"N", "d1", "d2"}, false, [](const Params& p) {
                 const long n = get(p, "N"), d1 = get(p, "d1"), d2 = get(p, "d2");
                 if (n < 1) throw UsageError("FN(-N,N+4): N must be at least 1");
                 return Builder("FN(-N,N+4)", hirzebruch_fan(n + 2), {d1, 2 * d1 + d2, d2 - n * d1, d1})
                     .points(1, 2 * d1 + d2)
                     .blowup(0, d1)
                     .blowup(3, d1)
                     .finish(2, d2 - n * d1, 2 * d1 + d2, false);
               }});

  e.push_back({"FN(N+4,-N)", "FN", {"N", "d1", "d2"}, true, [](const Params& p) {
                 const long n = get(p, "N"), d1 = get(p, "d1"), d2 = get(p, "d2");
                 if (n < 1) throw UsageError("FN(N+4,-N): N must be at least 1");
                 return Builder("FN(N+4,-N)", hirzebruch_fan(n + 2), {d1, 2 * d1 + d2, d2 - n * d1, d1})
                     .points(2, d2 - n * d1)
                     .blowup(0, d1)
                     .blowup(3, d1)
                     .finish(1, 2 * d1 + d2, d2 - n * d1, true);
               }});

  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return e;
  throw UsageError("unknown catalog entry '" + name + "'");
}

CatalogInstance catalog(const std::string& name, const Params& params) {
  const CatalogEntry& entry = find_entry(name);
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& n : entry.parameter_names) known = known || n == key;
    if (!known) throw UsageError(name + ": unknown parameter '" + key + "'");
  }
  CatalogInstance inst = entry.generate(params);
  inst.model.validate();
  return inst;
}

Params parse_params(const std::string& text) {
  Params p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      size_t used = 0;
      const long v = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      p[key] = v;
    } catch (const std::exception&) {
      throw UsageError("parameter '" + key + "' needs an integer value");
    }
  }
  return p;
}

std::string format_params(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ",";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace logquiver
