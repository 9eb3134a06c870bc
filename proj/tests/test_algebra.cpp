#include <doctest.h>

#include "logquiver/hbar.hpp"
#include "logquiver/rational_function.hpp"
#include "logquiver/series.hpp"

using namespace logquiver;

namespace {

HalfLaurent q_half(int half, long c = 1) { return HalfLaurent::monomial(half, Rational(c)); }

/// Bernoulli numbers B_0..B_n from sum_{k<=m} C(m+1,k) B_k = 0.
std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("half-Laurent arithmetic and involutions") {
  const HalfLaurent a = q_half(1) + q_half(-1);
  CHECK(a.to_string() == "q^(1/2) + q^(-1/2)");
  CHECK(a.is_bar_invariant());
  CHECK((a * a) == q_half(2) + HalfLaurent(2) + q_half(-2));
  CHECK(HalfLaurent::quantum_integer(3) == q_half(2) + HalfLaurent(1) + q_half(-2));
  CHECK(HalfLaurent::quantum_integer(-2) == -HalfLaurent::quantum_integer(2));
  CHECK(HalfLaurent::quantum_integer(0).is_zero());
  CHECK(q_half(3).bar() == q_half(-3));
  CHECK(a.at_one() == 2);
  CHECK(a.dilate(2) == q_half(2) + q_half(-2));
  CHECK((a - a).is_zero());

  const HalfLaurent prod = a * HalfLaurent::quantum_integer(3);
  auto back = prod.divide_exact(HalfLaurent::quantum_integer(3));
  REQUIRE(back);
  CHECK(*back == a);
  CHECK_FALSE((a + HalfLaurent(1)).divide_exact(HalfLaurent::quantum_integer(2)));
}

TEST_CASE("polynomials, gl orders and rational functions") {
  CHECK(gl_order(0) == Polynomial(1));
  CHECK(gl_order(1) == Polynomial::q_power_minus_one(1));
  CHECK(gl_order(2) == Polynomial::q_power_minus_one(2) * (Polynomial::monomial(2) - Polynomial::monomial(1)));
  CHECK(gl_order(3).evaluate(2) == 168);

  const Polynomial qm1 = Polynomial::q_power_minus_one(1);
  const RationalFunctionQ f(Polynomial::monomial(2) - Polynomial(1), qm1 * qm1);
  CHECK(f == RationalFunctionQ(Polynomial::monomial(1) + Polynomial(1), qm1));
  CHECK(f.evaluate(2) == 3);
  CHECK_THROWS(f.evaluate(1));
  CHECK((f - f).is_zero());
  CHECK((q_power(3) * q_power(-3)) == RationalFunctionQ(Polynomial(1)));
  CHECK((f * RationalFunctionQ(qm1)).as_polynomial().has_value());
  auto [quot, rem] = (Polynomial::monomial(3) + Polynomial(1)).divmod(Polynomial::monomial(1) + Polynomial(1));
  CHECK(rem.is_zero());
  CHECK(quot == Polynomial::monomial(2) - Polynomial::monomial(1) + Polynomial(1));
}

TEST_CASE("quantum torus product") {
  auto ctx = make_context({"t1", "t2"}, 3);
  const Exponent z0{0, 0}, e1{1, 0}, e2{0, 1};
  const auto x = QuantumTorusElement::monomial(ctx, z0, {1, 0});
  const auto y = QuantumTorusElement::monomial(ctx, z0, {0, 1});

  SUBCASE("twisted commutation") {
    CHECK(x * y == QuantumTorusElement::monomial(ctx, z0, {1, 1}, q_half(1)));
    CHECK(y * x == QuantumTorusElement::monomial(ctx, z0, {1, 1}, q_half(-1)));
  }
  SUBCASE("associativity on random-looking elements") {
    QuantumTorusElement a = QuantumTorusElement::one(ctx), b(ctx), c(ctx);
    a.add_term(e1, {2, -1}, q_half(1, 3));
    b.add_term(e2, {-1, 1}, HalfLaurent(2));
    b.add_term(z0, {0, 3}, q_half(-3));
    c.add_term(e1, {1, 1}, HalfLaurent(-1));
    c.add_term(e2, {0, -2}, q_half(2));
    CHECK((a * b) * c == a * (b * c));
  }
  SUBCASE("skew form is antisymmetric") {
    for (Lattice m : {Lattice{1, 2}, Lattice{-3, 1}, Lattice{0, 5}})
      for (Lattice n : {Lattice{2, -1}, Lattice{1, 1}}) {
        CHECK(skew(m, n) == -skew(n, m));
        CHECK(skew(m, m) == 0);
      }
  }
  SUBCASE("truncation and inverses") {
    QuantumTorusElement f = QuantumTorusElement::one(ctx);
    f.add_term(e1, {1, 0}, HalfLaurent(1));
    f.add_term(e2, {0, 1}, q_half(1));
    const auto inv = qt_inverse(f);
    CHECK(f * inv == QuantumTorusElement::one(ctx));
    CHECK(inv * f == QuantumTorusElement::one(ctx));
    CHECK(qt_power(f, -2) * qt_power(f, 2) == QuantumTorusElement::one(ctx));
    CHECK((qt_power(f, 4).degree_part(4)).is_zero());  // beyond the cap
  }
  SUBCASE("log and exp are inverse") {
    QuantumTorusElement f = QuantumTorusElement::one(ctx);
    f.add_term(e1, {1, 0}, q_half(1));
    f.add_term(e2, {0, 1}, HalfLaurent(-2));
    f.add_term(Exponent{1, 1}, {1, 1}, HalfLaurent(5));
    CHECK(series_exp(series_log(f)) == f);
    CHECK_THROWS_AS(series_log(QuantumTorusElement::monomial(ctx, z0, {1, 0})), std::domain_error);
  }
  SUBCASE("context mismatch is rejected") {
    auto other = make_context({"t1", "t2"}, 2);
    CHECK_THROWS_AS(x * QuantumTorusElement::one(other), std::invalid_argument);
  }
  SUBCASE("classical limit commutes") {
    const auto cx = x.classical_limit(), cy = y.classical_limit();
    CHECK(cx * cy == cy * cx);
  }
}

TEST_CASE("commutative truncated series") {
  auto ctx = make_context({"t"}, 2, {}, false);
  TruncatedSeries s = TruncatedSeries::constant(ctx, HalfLaurent(1));
  s.add_term({1}, HalfLaurent(1));
  const TruncatedSeries sq = s * s;
  CHECK(sq.coefficient({1}) == HalfLaurent(2));
  CHECK(sq.coefficient({2}) == HalfLaurent(1));
  CHECK((s * sq).coefficient({3}).is_zero());
}

TEST_CASE("genus expansion") {
  SUBCASE("constant invariant is 1/(2 sin(hbar/2))") {
    const auto n = hbar_expand(HalfLaurent(1), 1, 2);
    CHECK(n == std::vector<Rational>{1, Rational(1, 24), Rational(7, 5760)});
  }
  SUBCASE("q^{1/2}+q^{-1/2} gives cot(hbar/2)") {
    const auto n = hbar_expand(-(q_half(1) + q_half(-1)), 2, 2);
    CHECK(n == std::vector<Rational>{2, Rational(-1, 6), Rational(-1, 360)});
  }
  SUBCASE("Bernoulli oracle for both expansions") {
    const int g = 5;
    const auto b = bernoulli(2 * g);
    const auto one = hbar_expand(HalfLaurent(1), 1, g);
    const auto cot = hbar_expand(q_half(1) + q_half(-1), 1, g);
    for (int k = 0; k <= g; ++k) {
      // x/sin x and x cot x at x = hbar/2
      Rational two_pow = 1;
      for (int i = 0; i < 2 * k; ++i) two_pow *= 2;
      const Rational sign = (k % 2 == 0) ? 1 : -1;
      const Rational csc = -sign * 2 * (two_pow / 2 - 1) * b[2 * k] / factorial(2 * k) / two_pow;
      const Rational cotc = sign * two_pow * b[2 * k] / factorial(2 * k) / two_pow;
      CHECK(one[k] == csc);
      CHECK(cot[k] == 2 * cotc);
    }
  }
  SUBCASE("round trip through the cosine expansion") {
    for (const HalfLaurent& p : {q_half(2) + HalfLaurent(1) + q_half(-2), q_half(3, 2) + q_half(-3, 2) - HalfLaurent(4)}) {
      const int gmax = 4, ell = 3;
      const auto n = hbar_expand(p, ell, gmax);
      const auto s = sine_series(gmax);
      const auto c = cosine_expansion(p, gmax);
      for (int k = 0; k <= gmax; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) acc += n[i] * s[k - i];
        CHECK(acc == c[k]);  // (-1)^{ell+1} = 1 for ell = 3
      }
    }
  }
  SUBCASE("rejects non-palindromic input") {
    CHECK_THROWS_AS(hbar_expand(q_half(1), 1, 1), std::domain_error);
    CHECK_THROWS_AS(hbar_expand(HalfLaurent(1), 0, 1), std::domain_error);
  }
}
