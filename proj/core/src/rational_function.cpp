#include "logquiver/rational_function.hpp"

#include <stdexcept>

namespace logquiver {

RationalFunctionQ::RationalFunctionQ(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunctionQ::RationalFunctionQ(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunctionQ::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * Rational(1 / lead);
    den_ = den_ * Rational(1 / lead);
  }
}

std::optional<Polynomial> RationalFunctionQ::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RationalFunctionQ::evaluate(const Rational& q0) const {
  const Rational d = den_.evaluate(q0);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  Rational r = num_.evaluate(q0) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunctionQ::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunctionQ q_power(int n) {
  if (n >= 0) return RationalFunctionQ(Polynomial::monomial(n));
  return RationalFunctionQ(Polynomial(1), Polynomial::monomial(-n));
}

}  // namespace logquiver
