#include "logquiver/scattering.hpp"

#include <algorithm>
#include <tuple>

#include "logquiver/errors.hpp"
#include "logquiver/hbar.hpp"

namespace logquiver {

namespace {

std::string fmt(Lattice m) { return "(" + std::to_string(m.x) + "," + std::to_string(m.y) + ")"; }

/// Counterclockwise angle order starting at the positive x-axis.
bool angle_less(Lattice a, Lattice b) {
  auto half = [](Lattice v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return skew(a, b) > 0;
}

int sgn(long x) { return (x > 0) - (x < 0); }

Rational integral_or_throw(const Rational& v, const char* what) {
  if (!is_integer(v)) throw ScatteringError(std::string(what) + ": non-integral exponent " + to_string(v));
  return v;
}

/// 1 + q^{c/2} t^a z^m
QuantumTorusElement binomial(const ContextPtr& ctx, const Exponent& a, Lattice m, int c_halves) {
  QuantumTorusElement f = QuantumTorusElement::one(ctx);
  f.add_term(a, m, HalfLaurent::monomial(c_halves));
  return f;
}

/// Multiplier M with wall(z^{m'}) = z^{m'} M, for the wall raised to `power`.
QuantumTorusElement multiplier(const Wall& wall, long base_pairing, int power, const ContextPtr& ctx) {
  QuantumTorusElement m = QuantumTorusElement::one(ctx);
  if (base_pairing == 0) return m;
  for (const auto& [key, poly] : wall.exponents) {
    const auto& [a, k] = key;
    if (!ctx->admits(a)) continue;
    const Lattice nu = k * wall.direction;
    const long p = k * base_pairing;
    if (!ctx->quantum) {
      const long n = integral_or_throw(poly.at_one(), "classical wall").get_num().get_si();
      if (n != 0) m = m * qt_power(binomial(ctx, a, nu, 0), n * p * power);
      continue;
    }
    const int s = sgn(p);
    for (const auto& [c, coeff] : poly.terms()) {
      const long n = integral_or_throw(coeff, "wall").get_num().get_si();
      for (long i = 1; i <= std::abs(p); ++i) {
        const int shift = static_cast<int>(s * (2 * i - 1));
        m = m * qt_power(binomial(ctx, a, nu, c + shift), s * n * power);
      }
    }
  }
  return m;
}

struct HalfLine {
  Lattice direction;
  const Wall* wall;
  int power;
};

std::vector<HalfLine> half_lines(const ScatteringDiagram& d) {
  std::vector<HalfLine> out;
  for (const Wall& w : d.walls) {
    out.push_back({w.direction, &w, 1});
    if (w.kind == WallKind::Incoming) out.push_back({-w.direction, &w, -1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HalfLine& a, const HalfLine& b) { return angle_less(a.direction, b.direction); });
  if (Calibration::loop_orientation < 0) std::reverse(out.begin(), out.end());
  return out;
}

ContextPtr with_cap(const SeriesContext& ctx, int cap) { return make_context(ctx.variables, cap, ctx.bounds, ctx.quantum); }

Wall& outgoing_slot(ScatteringDiagram& d, Lattice direction) {
  for (Wall& w : d.walls)
    if (w.kind == WallKind::Outgoing && w.direction == direction) return w;
  d.walls.push_back(Wall{direction, WallKind::Outgoing, {}});
  return d.walls.back();
}

void sort_walls(ScatteringDiagram& d) {
  std::stable_sort(d.walls.begin(), d.walls.end(), [](const Wall& a, const Wall& b) {
    if (a.direction != b.direction) return angle_less(a.direction, b.direction);
    return a.kind < b.kind;
  });
}

}  // namespace

nlohmann::json Calibration::to_json() {
  return {{"monomial_sign", monomial_sign},
          {"incoming_half_power", incoming_half_power},
          {"loop_orientation", loop_orientation},
          {"extraction_sign", "(-1)^(ell+1)"}};
}

DilogFactorization Wall::factorization() const {
  DilogFactorization f;
  f.direction = direction;
  for (const auto& [key, poly] : exponents)
    for (const auto& [c, coeff] : poly.terms())
      f.factors.push_back({key.first, key.second, c, integral_or_throw(coeff, "wall").get_num().get_si()});
  return f;
}

QuantumTorusElement Wall::function(const ContextPtr& ctx) const { return expand_factorization(factorization(), ctx); }

const Wall* ScatteringDiagram::outgoing(Lattice direction) const {
  for (const Wall& w : walls)
    if (w.kind == WallKind::Outgoing && w.direction == direction) return &w;
  return nullptr;
}

ScatteringDiagram lines_diagram(const std::vector<std::pair<Lattice, int>>& lines, int cap, bool quantum) {
  std::vector<std::string> names;
  std::vector<int> bounds;
  for (size_t j = 0; j < lines.size(); ++j) {
    names.push_back("t" + std::to_string(j + 1));
    bounds.push_back(lines[j].second);
  }
  ScatteringDiagram d;
  d.context = make_context(names, cap, bounds, quantum);
  for (size_t j = 0; j < lines.size(); ++j) {
    if (lines[j].second <= 0) continue;
    long mult = 0;
    const Lattice dir = primitive_part(lines[j].first, &mult);
    Exponent a(lines.size(), 0);
    a[j] = 1;
    Wall w{dir, WallKind::Incoming, {}};
    w.exponents[{a, mult}] = HalfLaurent::monomial(Calibration::incoming_half_power);
    d.walls.push_back(std::move(w));
  }
  sort_walls(d);
  return d;
}

ScatteringDiagram initial_diagram(const ToricModel& model, int cap, bool quantum) {
  model.validate();
  std::vector<std::pair<Lattice, int>> lines;
  for (const BlowupRecord& b : model.blowups)
    lines.emplace_back(Calibration::monomial_sign * model.rays[b.ray], static_cast<int>(std::max(b.dim, 0L)));
  return lines_diagram(lines, cap, quantum);
}

QuantumTorusElement cross_wall(const QuantumTorusElement& x, const Wall& wall, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  const ContextPtr& ctx = x.context_ptr();
  std::map<long, QuantumTorusElement> cache;
  QuantumTorusElement out(ctx);
  for (const auto& [key, c] : x.terms()) {
    const long base = skew(wall.direction, key.m);
    auto it = cache.find(base);
    if (it == cache.end()) it = cache.emplace(base, multiplier(wall, base, sign, ctx)).first;
    out += QuantumTorusElement::monomial(ctx, key.t, key.m, c) * it->second;
  }
  return out;
}

QuantumTorusElement loop_image(const ScatteringDiagram& d, Lattice m, const ContextPtr& ctx) {
  QuantumTorusElement x = QuantumTorusElement::monomial(ctx, Exponent(ctx->arity(), 0), m);
  for (const HalfLine& h : half_lines(d)) x = cross_wall(x, *h.wall, h.power);
  return x;
}

bool is_consistent(const ScatteringDiagram& d) {
  for (Lattice m : {Lattice{1, 0}, Lattice{0, 1}}) {
    if (!(loop_image(d, m, d.context) == QuantumTorusElement::monomial(d.context, Exponent(d.context->arity(), 0), m)))
      return false;
  }
  return true;
}

ScatteringDiagram complete_diagram(ScatteringDiagram d) {
  const SeriesContext& full = *d.context;
  const Lattice generators[2] = {{1, 0}, {0, 1}};
  for (int ell = 1; ell <= full.cap; ++ell) {
    const ContextPtr ctx = with_cap(full, ell);
    // (a, lattice part of the new factor) -> required exponent polynomial
    std::map<std::pair<Exponent, Lattice>, HalfLaurent> required;
    std::map<std::pair<Exponent, Lattice>, HalfLaurent> seen_defect;
    for (Lattice g : generators) {
      const QuantumTorusElement defect = loop_image(d, g, ctx).degree_part(ell);
      for (const auto& [key, coeff] : defect.terms()) {
        const Lattice n = key.m - g;
        if (n.is_zero()) throw ScatteringError("defect along the base monomial at order " + std::to_string(ell));
        const long p = skew(n, g);
        const auto slot = std::make_pair(key.t, n);
        if (p == 0) {
          seen_defect[slot];  // must be explained by the other generator
          continue;
        }
        std::optional<HalfLaurent> value;
        if (full.quantum) {
          value = (-coeff).divide_exact(HalfLaurent::quantum_integer(static_cast<int>(p)));
        } else {
          value = HalfLaurent(-coeff.at_one() / Rational(p));
        }
        if (!value) throw ScatteringError("defect " + coeff.to_string() + " not divisible at " + fmt(n));
        auto [it, inserted] = required.emplace(slot, *value);
        if (!inserted && !(it->second == *value))
          throw ScatteringError("inconsistent defects for the monomial in direction " + fmt(n));
      }
    }
    for (const auto& [slot, unused] : seen_defect)
      if (!required.count(slot)) throw ScatteringError("defect in direction " + fmt(slot.second) + " cannot be attributed");
    for (const auto& [slot, value] : required) {
      if (value.is_zero()) continue;
      long k = 0;
      const Lattice dir = primitive_part(slot.second, &k);
      Wall& w = outgoing_slot(d, dir);
      HalfLaurent& entry = w.exponents[{slot.first, k}];
      entry += value;
      for (const auto& [c, coeff] : entry.terms()) integral_or_throw(coeff, "new ray");
    }
  }
  sort_walls(d);
  if (!is_consistent(d)) throw ScatteringError("completed diagram is not consistent");
  return d;
}

DilogFactorization dilog_factorize(const QuantumTorusElement& f, Lattice direction) {
  if (!is_primitive(direction)) throw std::invalid_argument("wall direction must be primitive");
  if (!(f.constant_term() == HalfLaurent(1))) throw ScatteringError("wall function must have constant term 1");
  const ContextPtr& ctx = f.context_ptr();
  const Exponent zero(ctx->arity(), 0);
  DilogFactorization out;
  out.direction = direction;
  QuantumTorusElement rest = f;
  while (true) {
    std::optional<std::tuple<int, long, int, Exponent>> best;
    for (const auto& [key, coeff] : rest.terms()) {
      if (key.t == zero && key.m.is_zero()) continue;
      long k = 0;
      if (key.m.is_zero() || primitive_part(key.m, &k) != direction || total_degree(key.t) == 0)
        throw ScatteringError("term " + fmt(key.m) + " is not a positive multiple of the wall direction");
      auto cand = std::make_tuple(total_degree(key.t), k, coeff.min_exponent(), key.t);
      if (!best || cand < *best) best = cand;
    }
    if (!best) break;
    const auto& [deg, k, c, a] = *best;
    const Rational n = rest.coefficient(a, k * direction).coefficient(c);
    const long ni = integral_or_throw(n, "factorization").get_num().get_si();
    out.factors.push_back({a, k, c, ni});
    rest = rest * qt_power(binomial(ctx, a, k * direction, c), -ni);
  }
  return out;
}

QuantumTorusElement expand_factorization(const DilogFactorization& f, const ContextPtr& ctx) {
  QuantumTorusElement r = QuantumTorusElement::one(ctx);
  for (const DilogFactor& x : f.factors) r = r * qt_power(binomial(ctx, x.a, x.k * f.direction, x.c_halves), x.n);
  return r;
}

ScatteringDiagram classical_limit(const ScatteringDiagram& d) {
  ScatteringDiagram out;
  out.context = classical_context(*d.context);
  for (const Wall& w : d.walls) {
    Wall c{w.direction, w.kind, {}};
    for (const auto& [key, poly] : w.exponents) {
      const Rational v = poly.at_one();
      if (v != 0) c.exponents[key] = HalfLaurent(v);
    }
    if (w.kind == WallKind::Incoming || !c.exponents.empty()) out.walls.push_back(std::move(c));
  }
  return out;
}

int required_order(const ToricModel& model) {
  long total = 0;
  for (const BlowupRecord& b : model.blowups) total += std::max(b.dim, 0L);
  return static_cast<int>(total);
}

ScatteringDiagram scatter_model(const ToricModel& model, std::optional<int> cap, bool quantum) {
  const int need = required_order(model);
  const int L = cap ? *cap : need;
  return complete_diagram(initial_diagram(model, L, quantum));
}

HalfLaurent scat_omega(const ScatteringDiagram& completed, const ToricModel& model) {
  for (const BlowupRecord& b : model.blowups)
    if (b.dim < 0) return HalfLaurent();
  const int need = required_order(model);
  if (completed.context->cap < need)
    throw ScatteringError("insufficient order: cap " + std::to_string(completed.context->cap) +
                          " is below the target degree " + std::to_string(need));
  const ExtractionRay ray = extraction_ray(model);
  Exponent target;
  for (const BlowupRecord& b : model.blowups) target.push_back(static_cast<int>(b.dim));
  if (target.size() != completed.context->arity()) throw ScatteringError("diagram does not belong to this model");
  const Lattice dir = Calibration::monomial_sign * ray.direction;
  HalfLaurent p;
  int hits = 0;
  for (const Wall& w : completed.walls) {
    auto it = w.exponents.find({target, ray.ell});
    if (it == w.exponents.end()) continue;
    if (w.direction != dir) throw ScatteringError("target class found on the wall in direction " + fmt(w.direction));
    p += it->second;
    ++hits;
  }
  if (hits > 1) throw ScatteringError("target class appears on more than one wall");
  return p * Rational(Calibration::extraction_sign(ray.ell));
}

std::vector<Rational> gw_block(const ScatteringDiagram& completed, const ToricModel& model, int gmax) {
  for (const BlowupRecord& b : model.blowups)
    if (b.dim < 0) return std::vector<Rational>(gmax + 1, Rational(0));
  const HalfLaurent omega = scat_omega(completed, model);
  return hbar_expand(omega, static_cast<int>(model.tangency_order), gmax);
}

nlohmann::json diagram_to_json(const ScatteringDiagram& d) {
  ScatteringDiagram sorted = d;
  sort_walls(sorted);
  nlohmann::json walls = nlohmann::json::array();
  for (const Wall& w : sorted.walls) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [key, poly] : w.exponents)
      for (const auto& [c, coeff] : poly.terms())
        factors.push_back({key.first, key.second, c, integral_or_throw(coeff, "wall").get_num().get_si()});
    walls.push_back({{"dir", {w.direction.x, w.direction.y}},
                     {"kind", w.kind == WallKind::Incoming ? "in" : "out"},
                     {"factors", factors}});
  }
  return {{"walls", walls}, {"cap", d.context->cap}};
}

}  // namespace logquiver
