#include "logquiver/hbar.hpp"

#include <stdexcept>

namespace logquiver {

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational rational_pow(const Rational& x, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

std::vector<Rational> sine_series(int order) {
  // 2 sin(h/2) / h = sum_n (-1)^n h^{2n} / (4^n (2n+1)!)
  std::vector<Rational> s(order + 1);
  for (int n = 0; n <= order; ++n) {
    Rational v = 1 / (rational_pow(Rational(4), n) * factorial(2 * n + 1));
    s[n] = (n % 2 == 0) ? v : Rational(-v);
  }
  return s;
}

std::vector<Rational> cosine_expansion(const HalfLaurent& p, int order) {
  if (!p.is_bar_invariant()) throw std::domain_error("hbar expansion needs a bar-invariant polynomial");
  // q^{k/2} + q^{-k/2} = 2 cos(k h / 2); the k = 0 term is the constant.
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = p.coefficient(0);
  for (const auto& [k, coef] : p.terms()) {
    if (k <= 0) continue;
    const Rational half_k = Rational(k) / 2;
    for (int n = 0; n <= order; ++n) {
      Rational v = 2 * coef * rational_pow(half_k, 2 * n) / factorial(2 * n);
      c[n] += (n % 2 == 0) ? v : Rational(-v);
    }
  }
  return c;
}

std::vector<Rational> hbar_expand(const HalfLaurent& p, int ell, int gmax) {
  if (ell <= 0) throw std::domain_error("tangency order must be positive");
  if (gmax < 0) throw std::domain_error("gmax must be nonnegative");
  const std::vector<Rational> c = cosine_expansion(p, gmax);
  const std::vector<Rational> s = sine_series(gmax);
  // Power series division c / s in the variable h^2.
  std::vector<Rational> n(gmax + 1);
  for (int g = 0; g <= gmax; ++g) {
    Rational acc = c[g];
    for (int j = 1; j <= g; ++j) acc -= s[j] * n[g - j];
    n[g] = acc / s[0];
  }
  if (ell % 2 == 0)
    for (auto& x : n) x = -x;
  return n;
}

}  // namespace logquiver
