#include "psmono/kernel.hpp"

#include <random>

#include "doctest.h"
#include "psmono/verify.hpp"

using namespace psmono;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("unit sphere areas") {
  CHECK(sigma(0) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(sigma(1) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(sigma(2) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(sigma(-1), DomainError);
}

TEST_CASE("Cauchy kernel point values") {
  const SliceContext ctx(0, 2);
  {
    const Multivector v = cauchy_kernel(ctx, Point(std::vector<double>{1.0, 0.0, 0.0}));
    CHECK(v.scalar_part() == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
    CHECK(v.grade_part(0) == v);
  }
  {
    const Multivector v = cauchy_kernel(ctx, Point(std::vector<double>{0.0, 1.0, 0.0}));
    CHECK(v[Blade{1}] == doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(cauchy_kernel(ctx, Point(std::vector<double>{0.0, 0.0, 0.0})),
                  SingularityError);

  // Homogeneity E(2x) = 2^{-(p+1)} E(x).
  std::mt19937_64 rng(2);
  for (const auto& pq : {std::pair{0, 2}, std::pair{1, 2}}) {
    const SliceContext c(pq.first, pq.second);
    for (int rep = 0; rep < 10; ++rep) {
      Point x = random_point_in_ball(rng, c, std::vector<double>(c.p + 1, 0.0), 2.0, 0.1);
      Point x2 = x;
      for (auto& v : x2.x) v *= 2.0;
      const Multivector lhs = cauchy_kernel(c, x2);
      const Multivector rhs = cauchy_kernel(c, x) * std::pow(2.0, -(c.p + 1));
      CHECK(approx_equal(lhs, rhs, 1e-14));
    }
  }
}

TEST_CASE("kernel expression evaluates the slice restriction of E") {
  const SliceContext ctx(1, 2);
  const Omega eta = Omega::axis(ctx, 0);
  const auto expr = cauchy_kernel_expr(ctx, eta);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int rep = 0; rep < 20; ++rep) {
    const std::vector<double> sc{u(rng), u(rng), u(rng)};
    if (sc[0] * sc[0] + sc[1] * sc[1] + sc[2] * sc[2] < 0.1) continue;
    // Embed (x0, x1, s) through eta and compare with the direct kernel.
    const Point full(std::vector<double>{sc[0], sc[1], sc[2], 0.0});
    CHECK(approx_equal(expr.evaluate(sc), cauchy_kernel(ctx, full), 1e-13));
  }
}

TEST_CASE("derivative kernel worked value") {
  // p = 0, k = (1), eta = e1: Q at (x0, r) = (0, 1) equals -1/(2 pi).
  const SliceContext ctx(0, 1);
  const auto q = q_kernel(ctx, MultiIndex({1}), Omega::axis(ctx, 0));
  const std::vector<double> at{0.0, 1.0};
  const Multivector v = q.evaluate(at);
  CHECK(v.scalar_part() == doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-14));
  // Q_0 is E itself.
  const auto q0 = q_kernel(ctx, MultiIndex({0}), Omega::axis(ctx, 0));
  const auto e = cauchy_kernel_expr(ctx, Omega::axis(ctx, 0));
  CHECK(approx_equal(q0.evaluate(at), e.evaluate(at), 0.0));
}

TEST_CASE("kernel expressions are closed under the slice operator and vanish") {
  std::mt19937_64 rng(5);
  for (const auto& pq : {std::pair{0, 2}, std::pair{1, 2}}) {
    const SliceContext ctx(pq.first, pq.second);
    const Omega eta = random_omega(rng, ctx);
    const auto e_expr = cauchy_kernel_expr(ctx, eta);
    CHECK(e_expr.slice_dirac_applied(eta).symbolically_zero(1e-13));
    CHECK(e_expr.slice_dirac_right_applied(eta).symbolically_zero(1e-13));
    for (const auto& k : multi_indices(ctx.p + 1, 2, /*cumulative=*/true)) {
      CHECK(q_kernel(ctx, k, eta).slice_dirac_applied(eta).symbolically_zero(1e-10));
    }
  }
}

TEST_CASE("rho exponent parity stays fixed") {
  const SliceContext ctx(0, 1);
  KernelExpr expr(ctx);
  CliffordPolynomial num(CliffordPolynomial::Kind::Slice, ctx);
  num.add_term({0, 0}, Multivector::scalar(ctx.n(), 1.0));
  expr.add_term(num, 2);
  CHECK_THROWS_AS(expr.add_term(num, 3), DomainError);
  CHECK_NOTHROW(expr.add_term(num, 4));
  CHECK_THROWS_AS(expr.evaluate(std::vector<double>{0.0, 0.0}), SingularityError);
}

TEST_CASE("pole orbit detection") {
  const SliceContext ctx(1, 2);
  const Point y(std::vector<double>{1.0, 0.5, 0.6, 0.8});
  const Point same_orbit(std::vector<double>{1.0, 0.5, 1.0, 0.0});
  const Point off_orbit(std::vector<double>{1.0, 0.5, 1.5, 0.0});
  CHECK(near_pole_orbit(ctx, y, same_orbit));
  CHECK(!near_pole_orbit(ctx, y, off_orbit));
  CHECK_THROWS_AS(slice_cauchy_kernel(ctx, y, same_orbit), SingularityError);
}

TEST_CASE("slice Cauchy kernel reduces to E on the pole's slice") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(7);
  const Omega eta = random_omega(rng, ctx);
  const Point y = compose(ctx, {0.9, -0.2}, 1.3, eta);
  // Same slice, smaller radius.
  const Point x = compose(ctx, {0.2, 0.1}, 0.4, eta);
  const Point diff(std::vector<double>{y[0] - x[0], y[1] - x[1], y[2] - x[2], y[3] - x[3]});
  CHECK(approx_equal(slice_cauchy_kernel(ctx, y, x), cauchy_kernel(ctx, diff), 1e-13));

  // Opposite slice: the reflected projection is the point itself, so the
  // kernel is again a plain difference.
  const Point x_opp = compose(ctx, {0.2, 0.1}, 0.4, eta.negated());
  Point diff_opp = y;
  for (int i = 0; i < 4; ++i) diff_opp[i] -= x_opp[i];
  CHECK(approx_equal(slice_cauchy_kernel(ctx, y, x_opp), cauchy_kernel(ctx, diff_opp), 1e-13));

  // Real evaluation point: plain difference.
  const Point x_real(std::vector<double>{0.3, 0.4, 0.0, 0.0});
  const Point diff_real(std::vector<double>{y[0] - 0.3, y[1] - 0.4, y[2], y[3]});
  CHECK(approx_equal(slice_cauchy_kernel(ctx, y, x_real), cauchy_kernel(ctx, diff_real),
                     1e-13));

  // Real pole: plain difference from the evaluation point.
  const Point y_real(std::vector<double>{2.0, 0.5, 0.0, 0.0});
  const Point xg = compose(ctx, {0.2, 0.1}, 0.4, random_omega(rng, ctx));
  Point diff_g = y_real;
  for (int i = 0; i < 4; ++i) diff_g[i] -= xg[i];
  CHECK(approx_equal(slice_cauchy_kernel(ctx, y_real, xg), cauchy_kernel(ctx, diff_g), 1e-13));
}

TEST_CASE("slice Cauchy kernel is monogenic off the pole orbit") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(9);
  const Point y(std::vector<double>{0.8, -0.5, 1.1, 0.4});
  auto f = [&](const Point& x) { return slice_cauchy_kernel(ctx, y, x); };
  int checked = 0;
  while (checked < 50) {
    const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.0, 0.15);
    if (near_pole_orbit(ctx, y, x, 0.15)) continue;
    ++checked;
    CHECK(finite_difference_slice_dirac(ctx, f, x).norm() <= 1e-6);
  }
}

TEST_CASE("right slice Cauchy kernel is right-monogenic off the pole orbit") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(13);
  const Point y(std::vector<double>{0.7, -0.4, 1.2, 0.3});
  auto f = [&](const Point& x) { return slice_cauchy_kernel(ctx, y, x, Side::Right); };

  // Central differences of the right-acting slice operator with one
  // Richardson level.
  auto right_residual = [&](const Point& x) {
    const auto d = decompose(ctx, x);
    REQUIRE(d.omega.has_value());
    auto central = [&](auto&& move) {
      auto at = [&](double step) {
        Point z = x;
        move(z, step);
        return f(z);
      };
      const double h = 1e-5;
      const Multivector d_h = (at(h) - at(-h)) * (0.5 / h);
      const Multivector d_h2 = (at(0.5 * h) - at(-0.5 * h)) * (1.0 / h);
      return (d_h2 * 4.0 - d_h) * (1.0 / 3.0);
    };
    Multivector out(ctx.n());
    for (int i = 0; i <= ctx.p; ++i) {
      const Multivector partial = central([&](Point& z, double step) { z[i] += step; });
      out += i == 0 ? partial : partial * Multivector::generator(ctx.n(), i);
    }
    const Multivector radial = central([&](Point& z, double step) {
      for (int j = 0; j < ctx.q; ++j) z[ctx.p + 1 + j] += step * d.omega->component(j);
    });
    out += radial * d.omega->to_multivector(ctx);
    return out;
  };

  int checked = 0;
  while (checked < 20) {
    const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.0, 0.15);
    if (near_pole_orbit(ctx, y, x, 0.15)) continue;
    ++checked;
    CHECK(right_residual(x).norm() <= 1e-6);
  }
}

TEST_CASE("right-sided slice-independent evaluation is eta independent") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(19);
  const MultiIndex k({1, 1});
  for (int rep = 0; rep < 10; ++rep) {
    const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.5);
    const Multivector a = full_fueter_evaluate(ctx, k, x, Side::Right, Omega::axis(ctx, 0));
    const Multivector b = full_fueter_evaluate(ctx, k, x, Side::Right, Omega::axis(ctx, 1));
    const Multivector c =
        full_fueter_evaluate(ctx, k, x, Side::Right, random_omega(rng, ctx));
    CHECK(approx_equal(a, b, 1e-12));
    CHECK(approx_equal(a, c, 1e-12));
  }
}

TEST_CASE("q_full is eta independent and matches homogeneity") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(11);
  const MultiIndex k({1, 1});
  for (int rep = 0; rep < 20; ++rep) {
    const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.5, 0.05);
    const Multivector a = q_full(ctx, k, x, Omega::axis(ctx, 0));
    const Multivector b = q_full(ctx, k, x, Omega::axis(ctx, 1));
    const Multivector c = q_full(ctx, k, x, random_omega(rng, ctx));
    CHECK(approx_equal(a, b, 1e-12 * (1.0 + a.norm())));
    CHECK(approx_equal(a, c, 1e-12 * (1.0 + a.norm())));

    Point x2 = x;
    for (auto& v : x2.x) v *= 2.0;
    const Multivector scaled = q_full(ctx, k, x2);
    CHECK(approx_equal(scaled, a * std::pow(2.0, -(k.total() + ctx.p + 1)),
                       1e-12 * (1.0 + a.norm())));
  }
}

TEST_CASE("q_full with k = 0 collapses to E on the default slice") {
  const SliceContext ctx(0, 2);
  const Point x = compose(ctx, {0.4}, 0.9, Omega::axis(ctx, 0));
  CHECK(approx_equal(q_full(ctx, MultiIndex({0}), x), cauchy_kernel(ctx, x), 1e-13));
}
