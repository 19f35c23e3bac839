#include "psmono/stem.hpp"

#include <random>

#include "doctest.h"
#include "psmono/fueter.hpp"
#include "psmono/verify.hpp"

using namespace psmono;
using Kind = CliffordPolynomial::Kind;

namespace {

StemPolynomial linear_stem(const SliceContext& ctx) {
  // (x_0, r): the stem of the first Fueter variable.
  CliffordPolynomial f1 = CliffordPolynomial::variable(Kind::Slice, ctx, 0);
  CliffordPolynomial f2(Kind::Slice, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
  e[static_cast<std::size_t>(ctx.p + 1)] = 1;
  f2.add_term(e, Multivector::scalar(ctx.n(), 1.0));
  return StemPolynomial(std::move(f1), std::move(f2));
}

}  // namespace

TEST_CASE("parity of the components is enforced at construction") {
  const SliceContext ctx(0, 2);
  CliffordPolynomial odd(Kind::Slice, ctx);
  odd.add_term({0, 1}, Multivector::scalar(ctx.n(), 1.0));
  CliffordPolynomial even(Kind::Slice, ctx);
  even.add_term({1, 0}, Multivector::scalar(ctx.n(), 1.0));
  CHECK_NOTHROW(StemPolynomial(even, odd));
  CHECK_THROWS_AS(StemPolynomial(odd, odd), DomainError);
  CHECK_THROWS_AS(StemPolynomial(even, even), DomainError);
}

TEST_CASE("induce worked examples") {
  {
    const SliceContext ctx(0, 2);
    const auto stem = linear_stem(ctx);
    const Multivector v = stem.induce(Point(std::vector<double>{1.0, 2.0, 0.0}));
    Multivector expected(ctx.n());
    expected.at(0) = 1.0;
    expected.at(Blade{1}) = 2.0;
    CHECK(approx_equal(v, expected, 1e-15));
  }
  {
    // (x0^2 - r^2, 2 x0 r) at 1 + e3 evaluates to 2 e3.
    const SliceContext ctx(0, 3);
    const auto stem = monomial_ck(ctx, MultiIndex({2}));
    const Multivector v = stem.induce(Point(std::vector<double>{1.0, 0.0, 0.0, 1.0}));
    Multivector expected(ctx.n());
    expected.at(Blade{1} << 2) = 2.0;
    CHECK(approx_equal(v, expected, 1e-15));
  }
  {
    const SliceContext ctx(1, 2);
    const auto one = StemPolynomial(
        CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0),
        CliffordPolynomial(Kind::Slice, ctx));
    const Multivector v = one.induce(Point(std::vector<double>{0.3, -0.4, 0.8, 0.1}));
    CHECK(v == Multivector::scalar(ctx.n(), 1.0));
  }
}

TEST_CASE("spherical value and derivative") {
  const SliceContext ctx(0, 2);
  {
    const auto stem = linear_stem(ctx);
    const Point x(std::vector<double>{0.7, 0.3, 0.4});
    CHECK(stem.spherical_value(x) == Multivector::scalar(ctx.n(), 0.7));
    CHECK(stem.spherical_derivative(x) == Multivector::scalar(ctx.n(), 1.0));
  }
  {
    const auto stem = monomial_ck(ctx, MultiIndex({2}));
    // f'_s = 2 x0 as a polynomial.
    CliffordPolynomial expected(Kind::Slice, ctx);
    expected.add_term({1, 0}, Multivector::scalar(ctx.n(), 2.0));
    CHECK(stem.spherical_derivative_polynomial() == expected);
  }
  {
    const StemPolynomial one(CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0),
                             CliffordPolynomial(Kind::Slice, ctx));
    CHECK(one.spherical_derivative(Point(std::vector<double>{1.0, 1.0, 0.0})) ==
          Multivector(ctx.n()));
  }
  // Both are constant on orbits.
  std::mt19937_64 rng(5);
  const auto stem = monomial_ck(ctx, MultiIndex({3}));
  const Point base = random_point_in_ball(rng, ctx, {0.0}, 1.5, 0.2);
  const auto d = decompose(ctx, base);
  const Multivector v0 = stem.spherical_value(base);
  const Multivector d0 = stem.spherical_derivative(base);
  for (int rep = 0; rep < 6; ++rep) {
    const Point y = compose(ctx, d.xp, d.r, random_omega(rng, ctx));
    CHECK(approx_equal(stem.spherical_value(y), v0, 1e-13));
    CHECK(approx_equal(stem.spherical_derivative(y), d0, 1e-13));
  }
}

TEST_CASE("generalized Cauchy-Riemann residuals") {
  const SliceContext ctx(0, 2);
  {
    const auto [r1, r2] = linear_stem(ctx).gsr_residual();
    CHECK(r1.is_zero(0.0));
    CHECK(r2.is_zero(0.0));
  }
  {
    CliffordPolynomial f1(Kind::Slice, ctx);
    f1.add_term({2, 0}, Multivector::scalar(ctx.n(), 1.0));
    const StemPolynomial bad(f1, CliffordPolynomial(Kind::Slice, ctx));
    const auto [r1, r2] = bad.gsr_residual();
    CliffordPolynomial expected(Kind::Slice, ctx);
    expected.add_term({1, 0}, Multivector::scalar(ctx.n(), 2.0));
    CHECK(r1 == expected);
    CHECK(r2.is_zero(0.0));
    CHECK(!bad.is_gsr());
  }
  {
    const SliceContext c12(1, 2);
    const auto stem = monomial_ck(c12, MultiIndex({1, 1}));
    CHECK(stem.is_gsr(0.0));
  }
}

TEST_CASE("two-point representation formula") {
  const SliceContext ctx(0, 3);
  const auto stem = linear_stem(ctx);
  const Omega w1 = Omega::axis(ctx, 0);  // e1... first trailing axis
  const Omega w2 = Omega::axis(ctx, 1);
  const std::vector<double> xp{1.0};
  const double r = 2.0;
  const Multivector f1 = stem.induce(compose(ctx, xp, r, w1));
  const Multivector f2 = stem.induce(compose(ctx, xp, r, w2));

  // Reproduce the first sample.
  const Multivector back = representation_formula(ctx, f1, f2, w1, w2, w1);
  CHECK(approx_equal(back, f1, 1e-14));

  // Target between the slices.
  const double s = 1.0 / std::sqrt(2.0);
  const Omega target(ctx, {s, s, 0.0});
  const Multivector mixed = representation_formula(ctx, f1, f2, w1, w2, target);
  CHECK(approx_equal(mixed, stem.induce(compose(ctx, xp, r, target)), 1e-14));

  // Constants come back unchanged.
  const Multivector c = Multivector::generator(ctx.n(), 2) * 3.0;
  CHECK(approx_equal(representation_formula(ctx, c, c, w1, w2, target), c, 1e-14));

  CHECK_THROWS_AS(representation_formula(ctx, f1, f2, w1, w1, target), SingularityError);
}

TEST_CASE("extension from one slice") {
  const SliceContext ctx(1, 2);
  const Omega eta = Omega::axis(ctx, 0);
  {
    const auto f_eta = fueter_variable(ctx, 0, eta, Side::Left);
    const auto stem = extend_from_slice(f_eta, eta);
    CHECK(stem.even_part() == CliffordPolynomial::variable(Kind::Slice, ctx, 0));
    CliffordPolynomial r(Kind::Slice, ctx);
    r.add_term({0, 0, 1}, Multivector::scalar(ctx.n(), 1.0));
    CHECK(stem.odd_part() == r);
  }
  {
    const auto f_eta = fueter_polynomial(ctx, MultiIndex({1, 1}), eta, Side::Left).poly;
    const auto stem = extend_from_slice(f_eta, eta);
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
      const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.5);
      CHECK(approx_equal(stem.induce(x), full_fueter_evaluate(ctx, MultiIndex({1, 1}), x),
                         1e-13));
    }
  }
  {
    const auto one = CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0);
    const auto stem = extend_from_slice(one, eta);
    CHECK(stem.even_part() == one);
    CHECK(stem.odd_part().empty());
  }
  // Non-monogenic slice data is rejected with the residual reported.
  CliffordPolynomial bad(Kind::Slice, ctx);
  bad.add_term({2, 0, 0}, Multivector::scalar(ctx.n(), 1.0));
  CHECK_THROWS_AS(extend_from_slice(bad, eta), DomainError);
}

TEST_CASE("two-branch global derivative") {
  const SliceContext ctx(1, 2);
  {
    // GSR stems sit in the kernel.
    const auto stem = monomial_ck(ctx, MultiIndex({2, 1}));
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
      const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.5, 0.1);
      CHECK(stem.global_derivative(x).norm() <= 1e-12);
    }
    // On-axis branch agrees in the limit.
    const Point on_axis(std::vector<double>{0.4, -0.2, 0.0, 0.0});
    CHECK(stem.global_derivative(on_axis).norm() <= 1e-12);
  }
  {
    // (x0^2, 0): only the split Dirac term survives off the axis.
    CliffordPolynomial f1(Kind::Slice, ctx);
    f1.add_term({2, 0, 0}, Multivector::scalar(ctx.n(), 1.0));
    const StemPolynomial stem(f1, CliffordPolynomial(Kind::Slice, ctx));
    const Point x(std::vector<double>{0.7, 0.1, 0.5, 0.0});
    CHECK(approx_equal(stem.global_derivative(x), Multivector::scalar(ctx.n(), 1.4), 1e-13));
  }
  {
    // (0, r) induces the trailing vector x_q; the global derivative is -1.
    CliffordPolynomial f2(Kind::Slice, ctx);
    f2.add_term({0, 0, 1}, Multivector::scalar(ctx.n(), 1.0));
    const StemPolynomial stem(CliffordPolynomial(Kind::Slice, ctx), f2);
    const Point x(std::vector<double>{0.2, 0.3, 0.4, -0.3});
    CHECK(approx_equal(stem.global_derivative(x), Multivector::scalar(ctx.n(), -1.0), 1e-13));
    const Point axis(std::vector<double>{0.2, 0.3, 0.0, 0.0});
    CHECK(approx_equal(stem.global_derivative(axis), Multivector::scalar(ctx.n(), -1.0),
                       1e-13));
  }
}

TEST_CASE("full Dirac minus the slice operator is (1-q) times the spherical derivative") {
  std::mt19937_64 rng(59);
  for (const auto& pq : {std::pair{0, 2}, std::pair{1, 2}, std::pair{1, 3}}) {
    const SliceContext ctx(pq.first, pq.second);
    // Random stems, including non-monogenic ones.
    std::vector<StemPolynomial> stems;
    stems.push_back(random_fueter_combination(rng, ctx, 3));
    {
      CliffordPolynomial f1(Kind::Slice, ctx);
      CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
      e[0] = 2;
      f1.add_term(e, Multivector::scalar(ctx.n(), 1.0));
      stems.push_back(StemPolynomial(f1, CliffordPolynomial(Kind::Slice, ctx)));
    }
    {
      CliffordPolynomial f2(Kind::Slice, ctx);
      CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
      e[static_cast<std::size_t>(ctx.p + 1)] = 1;
      f2.add_term(e, random_integer_multivector(rng, ctx.n(), -2, 2));
      stems.push_back(StemPolynomial(CliffordPolynomial(Kind::Slice, ctx), f2));
    }
    for (const auto& stem : stems) {
      const auto full = stem.to_full_polynomial();
      const auto df = dirac_full(full);
      for (int pt = 0; pt < 34; ++pt) {
        const Point x =
            random_point_in_ball(rng, ctx, std::vector<double>(ctx.p + 1, 0.0), 1.5, 0.1);
        const Multivector lhs = df.evaluate(x.x) - stem.global_derivative(x);
        const Multivector rhs =
            stem.spherical_derivative(x) * static_cast<double>(1 - ctx.q);
        CHECK((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));
      }
    }
  }
}

TEST_CASE("induced full polynomial matches pointwise evaluation") {
  std::mt19937_64 rng(41);
  const SliceContext ctx(1, 2);
  for (int rep = 0; rep < 4; ++rep) {
    const auto stem = random_fueter_combination(rng, ctx, 3);
    const auto full = stem.to_full_polynomial();
    for (int pt = 0; pt < 10; ++pt) {
      const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.5);
      CHECK(approx_equal(full.evaluate(x.x), stem.induce(x), 1e-12));
    }
  }
}

TEST_CASE("orbit consistency of induce") {
  std::mt19937_64 rng(43);
  const SliceContext ctx(1, 3);
  const auto stem = random_fueter_combination(rng, ctx, 3);
  const Point base = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.4, 0.2);
  const auto d = decompose(ctx, base);
  const Multivector f1 = stem.spherical_value(base);
  const auto fs = stem.spherical_derivative(base);
  for (int rep = 0; rep < 10; ++rep) {
    const Omega omega = random_omega(rng, ctx);
    const Multivector expected =
        f1 + omega.to_multivector(ctx) * fs * d.r;
    CHECK(approx_equal(stem.induce(compose(ctx, d.xp, d.r, omega)), expected, 1e-12));
  }
}
