#include "logquiver/dt.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "logquiver/errors.hpp"

namespace logquiver {

namespace {

std::string fmt(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

/// Calls fn(e) for every e with 0 <= e <= d componentwise, including 0 and d.
void for_each_subvector(const std::vector<long>& d, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> e(d.size(), 0);
  while (true) {
    fn(e);
    size_t i = 0;
    while (i < e.size() && e[i] == d[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

bool is_zero_vector(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

std::vector<long> minus(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace

Stability Stability::from_integers(const std::vector<long>& values) {
  Stability s;
  for (long v : values) s.theta.emplace_back(v);
  return s;
}

Rational Stability::slope(const std::vector<long>& e) const {
  if (e.size() != theta.size()) throw std::invalid_argument("stability length mismatch");
  Rational num = 0;
  long total = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    num += theta[i] * e[i];
    total += e[i];
  }
  if (total == 0) throw std::domain_error("slope of the zero vector");
  Rational r = num / total;
  r.canonicalize();
  return r;
}

std::vector<long> Stability::as_integers() const {
  std::vector<long> r;
  for (const Rational& t : theta) {
    if (!is_integer(t)) throw std::domain_error("stability weight is not an integer");
    r.push_back(t.get_num().get_si());
  }
  return r;
}

long euler_form(const Quiver& q, const std::vector<long>& d, const std::vector<long>& e) {
  if (d.size() != q.vertex_count || e.size() != q.vertex_count)
    throw std::invalid_argument("dimension vector length does not match the quiver");
  long r = 0;
  for (size_t i = 0; i < d.size(); ++i) r += d[i] * e[i];
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j < d.size(); ++j) r -= q.arrows[i][j] * d[i] * e[j];
  return r;
}

RationalFunctionQ stack_count(const Quiver& q, const DimensionVector& d) {
  if (!d.valid()) throw std::domain_error("negative dimension");
  if (d.entries.size() != q.vertex_count) throw std::invalid_argument("dimension vector length mismatch");
  long reps = 0;
  for (size_t i = 0; i < q.vertex_count; ++i)
    for (size_t j = 0; j < q.vertex_count; ++j) reps += q.arrows[i][j] * d.entries[i] * d.entries[j];
  Polynomial group(1);
  for (long di : d.entries) group = group * gl_order(static_cast<int>(di));
  return RationalFunctionQ(Polynomial::monomial(static_cast<int>(reps)), group);
}

// --- HN recursion ---

HnRecursion::HnRecursion(Quiver q, Stability theta, bool use_cache)
    : q_(std::move(q)), theta_(std::move(theta)), use_cache_(use_cache) {
  if (theta_.theta.size() != q_.vertex_count) throw std::invalid_argument("stability length mismatch");
}

void HnRecursion::seed(const std::vector<long>& d, RationalFunctionQ value) { ss_cache_[d] = std::move(value); }

RationalFunctionQ HnRecursion::all_count(const std::vector<long>& d) { return stack_count(q_, DimensionVector{d}); }

RationalFunctionQ HnRecursion::tail(const std::vector<long>& d, const Rational& bound) {
  if (use_cache_) {
    auto it = tail_cache_.find({d, bound});
    if (it != tail_cache_.end()) return it->second;
  }
  RationalFunctionQ sum;
  for_each_subvector(d, [&](const std::vector<long>& e) {
    if (is_zero_vector(e)) return;
    const Rational mu = theta_.slope(e);
    if (mu >= bound) return;
    const std::vector<long> rest = minus(d, e);
    RationalFunctionQ term = semistable_count(e) * q_power(static_cast<int>(-euler_form(q_, rest, e)));
    if (!is_zero_vector(rest)) term = term * tail(rest, mu);
    sum += term;
  });
  if (use_cache_) tail_cache_.emplace(std::make_pair(d, bound), sum);
  return sum;
}

RationalFunctionQ HnRecursion::semistable_count(const std::vector<long>& d) {
  if (d.size() != q_.vertex_count) throw std::invalid_argument("dimension vector length mismatch");
  for (long x : d)
    if (x < 0) throw std::domain_error("negative dimension");
  if (use_cache_) {
    auto it = ss_cache_.find(d);
    if (it != ss_cache_.end()) return it->second;
  }
  RationalFunctionQ result = all_count(d);
  for_each_subvector(d, [&](const std::vector<long>& e) {
    if (is_zero_vector(e) || e == d) return;
    const std::vector<long> rest = minus(d, e);
    const Rational mu = theta_.slope(e);
    RationalFunctionQ term =
        semistable_count(e) * q_power(static_cast<int>(-euler_form(q_, rest, e))) * tail(rest, mu);
    result -= term;
  });
  if (use_cache_) ss_cache_.emplace(d, result);
  return result;
}

RationalFunctionQ hn_semistable_count(const Quiver& q, const DimensionVector& d, const Stability& theta,
                                      bool use_cache) {
  if (!d.valid()) throw std::domain_error("negative dimension");
  HnRecursion hn(q, theta, use_cache);
  return hn.semistable_count(d.entries);
}

std::vector<std::vector<long>> genericity_check(const Quiver& q, const DimensionVector& d,
                                                const Stability& theta) {
  std::vector<std::vector<long>> offenders;
  if (d.entries.size() != q.vertex_count) throw std::invalid_argument("dimension vector length mismatch");
  if (d.total() == 0) return offenders;
  const Rational mu = theta.slope(d.entries);
  for_each_subvector(d.entries, [&](const std::vector<long>& e) {
    if (is_zero_vector(e) || e == d.entries) return;
    if (theta.slope(e) == mu) offenders.push_back(e);
  });
  return offenders;
}

Stability default_stability(const Quiver& q) {
  auto order = topological_order(q);
  if (!order) throw HypothesisError("quiver contains an oriented cycle");
  Stability s;
  s.theta.assign(q.vertex_count, Rational(0));
  for (size_t k = 0; k < order->size(); ++k) {
    const long pos = static_cast<long>(k) + 1;
    s.theta[(*order)[k]] = Rational(-pos * pos);
  }
  return s;
}

namespace {

/// Empty vector on success, otherwise the reasons the stability is unusable.
std::vector<std::string> stability_problems(const Quiver& q, const DimensionVector& d, const Stability& theta,
                                            Polynomial* count_out = nullptr) {
  std::vector<std::string> problems;
  for (const auto& e : genericity_check(q, d, theta)) problems.push_back("wall: subdimension " + fmt(e) + " has equal slope");
  if (!problems.empty()) return problems;
  const RationalFunctionQ ss = hn_semistable_count(q, d, theta);
  if (ss.is_zero()) {
    problems.push_back("empty semistable locus");
    return problems;
  }
  const RationalFunctionQ moduli = ss * RationalFunctionQ(Polynomial::q_power_minus_one(1));
  auto poly = moduli.as_polynomial();
  if (!poly) {
    problems.push_back("moduli count " + moduli.to_string() + " is not a polynomial");
    return problems;
  }
  if (!poly->has_integer_coefficients() || !poly->has_nonnegative_coefficients())
    problems.push_back("moduli count " + poly->to_string() + " is not a Poincare polynomial");
  const long expected_dim = 1 - euler_form(q, d.entries, d.entries);
  if (poly->degree() != expected_dim) {
    std::ostringstream os;
    os << "moduli count degree " << poly->degree() << " differs from expected dimension " << expected_dim;
    problems.push_back(os.str());
  }
  if (count_out) *count_out = *poly;
  return problems;
}

}  // namespace

bool has_connected_support(const Quiver& q, const DimensionVector& d) {
  const size_t n = q.vertex_count;
  std::vector<bool> seen(n, false);
  std::vector<size_t> stack;
  size_t support = 0;
  for (size_t i = 0; i < n; ++i) {
    if (d.entries[i] <= 0) continue;
    ++support;
    if (stack.empty() && support == 1) {
      stack.push_back(i);
      seen[i] = true;
    }
  }
  size_t reached = 0;
  while (!stack.empty()) {
    const size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (size_t w = 0; w < n; ++w) {
      if (seen[w] || d.entries[w] <= 0 || (q.arrows[v][w] == 0 && q.arrows[w][v] == 0)) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return reached == support;
}

Stability calibrated_stability(const Quiver& q, const DimensionVector& d) {
  Stability def = default_stability(q);
  if (stability_problems(q, d, def).empty()) return def;
  // Stable representations are indivisible and indecomposable, so these fail for every stability.
  if (!d.is_primitive()) throw DtError("no generic stability", {"dimension vector is not primitive"});
  if (!has_connected_support(q, d))
    throw DtError("no stable representations", {"support of the dimension vector is disconnected"});

  const auto order = *topological_order(q);
  const size_t n = q.vertex_count;
  // Only the weights of supported vertices enter any slope; unsupported ones just
  // keep theta strictly decreasing with unit steps.
  size_t free_steps = 0;
  for (size_t k = 0; k + 1 < n; ++k) free_steps += d.entries[order[k]] > 0;
  if (free_steps == 0) throw DtError("no usable stability", {"no free weights to adjust"});
  const long max_gap = 4 * static_cast<long>(n);
  const size_t max_attempts = 20000;
  size_t attempts = 0;
  std::vector<long> gaps(free_steps, 1);
  for (long g = 1; g <= max_gap; ++g) {
    // all gap vectors in [1, g]^{free_steps} whose maximum is exactly g
    std::fill(gaps.begin(), gaps.end(), 1);
    while (true) {
      if (*std::max_element(gaps.begin(), gaps.end()) == g) {
        Stability s;
        s.theta.assign(n, Rational(0));
        long value = 0;
        size_t used = 0;
        for (size_t k = n; k-- > 0;) {
          s.theta[order[k]] = Rational(value);
          if (k > 0) value += d.entries[order[k - 1]] > 0 ? gaps[used++] : 1;
        }
        if (stability_problems(q, d, s).empty()) return s;
        if (++attempts >= max_attempts) break;
      }
      size_t i = 0;
      while (i < gaps.size() && gaps[i] == g) gaps[i++] = 1;
      if (i == gaps.size()) break;
      ++gaps[i];
    }
    if (attempts >= max_attempts) break;
  }
  throw DtError("no generic stability with nonempty semistable locus found", {"bounded search exhausted"});
}

DtResult refined_dt(const Quiver& q, const DimensionVector& d, const Stability& theta) {
  if (!is_acyclic(q)) throw HypothesisError("quiver contains an oriented cycle");
  if (!d.valid()) throw std::domain_error("negative dimension");
  if (!d.is_primitive()) throw DtError("dimension vector is not primitive", {"non-primitive " + fmt(d.entries)});
  DtResult r;
  r.theta = theta;
  Polynomial count;
  r.diagnostics = stability_problems(q, d, theta, &count);
  r.generic = genericity_check(q, d, theta).empty();
  if (!r.diagnostics.empty()) throw DtError("refined DT invariant unavailable for this stability", r.diagnostics);
  r.moduli_count = count;
  r.moduli_dimension = count.degree();
  HalfLaurent omega = count.to_half_laurent().shifted(static_cast<int>(-r.moduli_dimension));
  if (r.moduli_dimension % 2 != 0) omega = -omega;
  r.omega = omega;
  return r;
}

ClassOmega omega_for_model(const ToricModel& model, const std::optional<Stability>& theta) {
  ClassOmega out;
  auto [q, d] = build_quiver(model);
  out.quiver = q;
  out.dims = d;
  if (!d.valid()) {
    out.zero_rule = true;
    return out;
  }
  if (!is_acyclic(q)) throw HypothesisError("theorem hypothesis violated: cyclic quiver for " + model.name);
  const Stability s = theta ? *theta : calibrated_stability(q, d);
  out.dt = refined_dt(q, d, s);
  out.omega = out.dt->omega;
  return out;
}

ClassOmega omega_for_class(const CatalogInstance& instance, const std::optional<Stability>& theta) {
  return omega_for_model(instance.model, theta);
}

}  // namespace logquiver
