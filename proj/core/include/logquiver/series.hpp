#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "logquiver/half_laurent.hpp"

namespace logquiver {

/// Exponent vector of the deformation parameters t_1..t_n.
using Exponent = std::vector<int>;

int total_degree(const Exponent& a);
Exponent operator+(const Exponent& a, const Exponent& b);

/// Point of the rank-two lattice hosting the monomials z^m.
struct Lattice {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;
  friend Lattice operator+(Lattice a, Lattice b) { return {a.x + b.x, a.y + b.y}; }
  friend Lattice operator-(Lattice a, Lattice b) { return {a.x - b.x, a.y - b.y}; }
  friend Lattice operator*(long k, Lattice a) { return {k * a.x, k * a.y}; }
  Lattice operator-() const { return {-x, -y}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

/// Skew form <m, m'> = m_x m'_y - m'_x m_y.
inline long skew(Lattice a, Lattice b) { return a.x * b.y - b.x * a.y; }

/// Shared truncation data: variable names, the total-degree cap, and optional
/// per-variable exponent bounds. Terms outside the truncation are dropped by
/// every arithmetic operation. The quantum flag selects the q-twisted product.
struct SeriesContext {
  std::vector<std::string> variables;
  int cap = 0;
  std::vector<int> bounds;  // empty, or one bound per variable
  bool quantum = true;

  bool admits(const Exponent& a) const;
  size_t arity() const { return variables.size(); }
  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

using ContextPtr = std::shared_ptr<const SeriesContext>;

ContextPtr make_context(std::vector<std::string> variables, int cap, std::vector<int> bounds = {},
                        bool quantum = true);
/// Same variables and truncation with the quantum flag cleared.
ContextPtr classical_context(const SeriesContext& ctx);

/// Commutative truncated power series in t with HalfLaurent coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static TruncatedSeries constant(ContextPtr ctx, const HalfLaurent& c);

  const SeriesContext& context() const { return *ctx_; }
  const std::map<Exponent, HalfLaurent>& terms() const { return terms_; }
  void add_term(const Exponent& a, const HalfLaurent& c);
  HalfLaurent coefficient(const Exponent& a) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.terms_ == b.terms_; }

 private:
  ContextPtr ctx_;
  std::map<Exponent, HalfLaurent> terms_;
};

/// Element of the quantum torus over the truncated t-series ring:
/// a finite sum of c * t^a * z^m with z^m z^m' = q^{<m,m'>/2} z^{m+m'}.
class QuantumTorusElement {
 public:
  struct Key {
    Exponent t;
    Lattice m;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, HalfLaurent>;

  explicit QuantumTorusElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static QuantumTorusElement one(ContextPtr ctx);
  static QuantumTorusElement monomial(ContextPtr ctx, const Exponent& a, Lattice m,
                                      const HalfLaurent& c = HalfLaurent(1));

  const SeriesContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  void add_term(const Exponent& a, Lattice m, const HalfLaurent& c);
  HalfLaurent coefficient(const Exponent& a, Lattice m) const;
  /// Coefficient of t^0 z^0.
  HalfLaurent constant_term() const;
  /// True when no term has t-degree zero except the z^0 constant.
  bool is_unit_form() const;

  QuantumTorusElement operator-() const;
  QuantumTorusElement& operator+=(const QuantumTorusElement& o);
  QuantumTorusElement& operator-=(const QuantumTorusElement& o);
  QuantumTorusElement& operator*=(const HalfLaurent& c);
  friend QuantumTorusElement operator+(QuantumTorusElement a, const QuantumTorusElement& b) { return a += b; }
  friend QuantumTorusElement operator-(QuantumTorusElement a, const QuantumTorusElement& b) { return a -= b; }
  friend bool operator==(const QuantumTorusElement& a, const QuantumTorusElement& b) { return a.terms_ == b.terms_; }

  /// Terms of exactly the given total t-degree.
  QuantumTorusElement degree_part(int degree) const;
  /// Substitutes q^{1/2} = 1 and moves to the commutative context.
  QuantumTorusElement classical_limit() const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

/// Twisted product; t-degrees beyond the truncation are discarded.
/// Throws std::invalid_argument when the operands carry different contexts.
QuantumTorusElement qt_multiply(const QuantumTorusElement& a, const QuantumTorusElement& b);
inline QuantumTorusElement operator*(const QuantumTorusElement& a, const QuantumTorusElement& b) {
  return qt_multiply(a, b);
}

/// Inverse of an element with constant term 1 modulo the truncation.
QuantumTorusElement qt_inverse(const QuantumTorusElement& f);
/// f^n for any integer n (negative powers need constant term 1).
QuantumTorusElement qt_power(const QuantumTorusElement& f, long n);

/// log(f) for f = 1 + (t-degree >= 1); throws std::domain_error otherwise.
QuantumTorusElement series_log(const QuantumTorusElement& f);
/// exp(g) for g without t-degree-0 terms; throws std::domain_error otherwise.
QuantumTorusElement series_exp(const QuantumTorusElement& g);

}  // namespace logquiver
