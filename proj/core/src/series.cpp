#include "logquiver/series.hpp"

#include <sstream>
#include <stdexcept>

namespace logquiver {

int total_degree(const Exponent& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool SeriesContext::admits(const Exponent& a) const {
  if (total_degree(a) > cap) return false;
  if (!bounds.empty()) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > bounds[i]) return false;
  }
  return true;
}

ContextPtr make_context(std::vector<std::string> variables, int cap, std::vector<int> bounds,
                        bool quantum) {
  if (!bounds.empty() && bounds.size() != variables.size())
    throw std::invalid_argument("exponent bounds must match the variable list");
  return std::make_shared<const SeriesContext>(
      SeriesContext{std::move(variables), cap, std::move(bounds), quantum});
}

ContextPtr classical_context(const SeriesContext& ctx) {
  return make_context(ctx.variables, ctx.cap, ctx.bounds, false);
}

// --- TruncatedSeries ---

TruncatedSeries TruncatedSeries::constant(ContextPtr ctx, const HalfLaurent& c) {
  TruncatedSeries s(ctx);
  s.add_term(Exponent(ctx->arity(), 0), c);
  return s;
}

void TruncatedSeries::add_term(const Exponent& a, const HalfLaurent& c) {
  if (c.is_zero() || !ctx_->admits(a)) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HalfLaurent TruncatedSeries::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? HalfLaurent() : it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (!(*ctx_ == *o.ctx_)) throw std::invalid_argument("series contexts differ");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(*a.ctx_ == *b.ctx_)) throw std::invalid_argument("series contexts differ");
  TruncatedSeries r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea + eb;
      if (a.ctx_->admits(e)) r.add_term(e, ca * cb);
    }
  return r;
}

// --- QuantumTorusElement ---

QuantumTorusElement QuantumTorusElement::one(ContextPtr ctx) {
  return monomial(ctx, Exponent(ctx->arity(), 0), Lattice{});
}

QuantumTorusElement QuantumTorusElement::monomial(ContextPtr ctx, const Exponent& a, Lattice m,
                                                  const HalfLaurent& c) {
  if (a.size() != ctx->arity()) throw std::invalid_argument("exponent length mismatch");
  QuantumTorusElement r(std::move(ctx));
  r.add_term(a, m, c);
  return r;
}

void QuantumTorusElement::add_term(const Exponent& a, Lattice m, const HalfLaurent& c) {
  if (c.is_zero() || !ctx_->admits(a)) return;
  auto [it, inserted] = terms_.emplace(Key{a, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HalfLaurent QuantumTorusElement::coefficient(const Exponent& a, Lattice m) const {
  auto it = terms_.find(Key{a, m});
  return it == terms_.end() ? HalfLaurent() : it->second;
}

HalfLaurent QuantumTorusElement::constant_term() const {
  return coefficient(Exponent(ctx_->arity(), 0), Lattice{});
}

bool QuantumTorusElement::is_unit_form() const {
  for (const auto& [k, c] : terms_)
    if (total_degree(k.t) == 0 && !k.m.is_zero()) return false;
  return true;
}

QuantumTorusElement QuantumTorusElement::operator-() const {
  QuantumTorusElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

static void check_same(const SeriesContext& a, const SeriesContext& b) {
  if (!(a == b)) throw std::invalid_argument("quantum torus elements have different variables or caps");
}

QuantumTorusElement& QuantumTorusElement::operator+=(const QuantumTorusElement& o) {
  check_same(*ctx_, *o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.t, k.m, c);
  return *this;
}

QuantumTorusElement& QuantumTorusElement::operator-=(const QuantumTorusElement& o) {
  check_same(*ctx_, *o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.t, k.m, -c);
  return *this;
}

QuantumTorusElement& QuantumTorusElement::operator*=(const HalfLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

QuantumTorusElement QuantumTorusElement::degree_part(int degree) const {
  QuantumTorusElement r(ctx_);
  for (const auto& [k, c] : terms_)
    if (total_degree(k.t) == degree) r.terms_.emplace(k, c);
  return r;
}

QuantumTorusElement QuantumTorusElement::classical_limit() const {
  QuantumTorusElement r(classical_context(*ctx_));
  for (const auto& [k, c] : terms_) r.add_term(k.t, k.m, HalfLaurent(c.at_one()));
  return r;
}

std::string QuantumTorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < k.t.size(); ++i) {
      if (k.t[i] == 0) continue;
      os << "*" << ctx_->variables[i];
      if (k.t[i] != 1) os << "^" << k.t[i];
    }
    if (!k.m.is_zero()) os << "*z^(" << k.m.x << "," << k.m.y << ")";
  }
  return os.str();
}

QuantumTorusElement qt_multiply(const QuantumTorusElement& a, const QuantumTorusElement& b) {
  check_same(a.context(), b.context());
  const SeriesContext& ctx = a.context();
  QuantumTorusElement r(a.context_ptr());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Exponent e = ka.t + kb.t;
      if (!ctx.admits(e)) continue;
      HalfLaurent c = ca * cb;
      if (ctx.quantum) {
        const long twist = skew(ka.m, kb.m);
        if (twist != 0) c = c.shifted(static_cast<int>(twist));
      }
      r.add_term(e, ka.m + kb.m, c);
    }
  }
  return r;
}

static QuantumTorusElement without_constant(const QuantumTorusElement& f, const HalfLaurent& c0) {
  QuantumTorusElement g = f;
  g.add_term(Exponent(f.context().arity(), 0), Lattice{}, -c0);
  return g;
}

QuantumTorusElement qt_inverse(const QuantumTorusElement& f) {
  if (!f.is_unit_form() || f.constant_term() != HalfLaurent(1))
    throw std::domain_error("inverse requires constant term 1");
  // 1/(1+g) = sum (-g)^k
  QuantumTorusElement neg = -without_constant(f, HalfLaurent(1));
  QuantumTorusElement result = QuantumTorusElement::one(f.context_ptr());
  QuantumTorusElement power = result;
  while (true) {
    power = power * neg;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

QuantumTorusElement qt_power(const QuantumTorusElement& f, long n) {
  if (n < 0) return qt_power(qt_inverse(f), -n);
  QuantumTorusElement result = QuantumTorusElement::one(f.context_ptr());
  QuantumTorusElement base = f;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QuantumTorusElement series_log(const QuantumTorusElement& f) {
  if (!f.is_unit_form() || f.constant_term() != HalfLaurent(1))
    throw std::domain_error("series_log requires constant term 1");
  QuantumTorusElement g = without_constant(f, HalfLaurent(1));
  QuantumTorusElement result(f.context_ptr());
  QuantumTorusElement power = g;
  for (long k = 1; !power.is_zero(); ++k) {
    QuantumTorusElement term = power;
    term *= HalfLaurent(make_rational((k % 2 == 1) ? 1 : -1, k));
    result += term;
    power = power * g;
  }
  return result;
}

QuantumTorusElement series_exp(const QuantumTorusElement& g) {
  for (const auto& [k, c] : g.terms())
    if (total_degree(k.t) == 0) throw std::domain_error("series_exp requires no t-degree-0 term");
  QuantumTorusElement result = QuantumTorusElement::one(g.context_ptr());
  QuantumTorusElement power = result;
  Rational factorial = 1;
  for (long k = 1;; ++k) {
    power = power * g;
    if (power.is_zero()) break;
    factorial *= k;
    QuantumTorusElement term = power;
    term *= HalfLaurent(Rational(1 / factorial));
    result += term;
  }
  return result;
}

}  // namespace logquiver
