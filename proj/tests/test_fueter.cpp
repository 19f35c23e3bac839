#include "psmono/fueter.hpp"

#include <random>

#include "doctest.h"
#include "psmono/verify.hpp"

using namespace psmono;
using Kind = CliffordPolynomial::Kind;

TEST_CASE("Fueter variables") {
  const SliceContext ctx(1, 2);
  const int n = ctx.n();
  const Omega eta = Omega::axis(ctx, 0);  // e2
  const auto e1 = Multivector::generator(n, 1);
  const auto e2 = Multivector::generator(n, 2);

  // z_0 = x_0 + r eta regardless of side.
  const auto z0 = fueter_variable(ctx, 0, eta, Side::Left);
  CliffordPolynomial expected0(Kind::Slice, ctx);
  expected0.add_term({1, 0, 0}, Multivector::scalar(n, 1.0));
  expected0.add_term({0, 0, 1}, e2);
  CHECK(z0 == expected0);
  CHECK(fueter_variable(ctx, 0, eta, Side::Right) == expected0);

  const auto z1l = fueter_variable(ctx, 1, eta, Side::Left);
  CliffordPolynomial expected_l(Kind::Slice, ctx);
  expected_l.add_term({0, 1, 0}, Multivector::scalar(n, 1.0));
  expected_l.add_term({0, 0, 1}, e2 * e1);
  CHECK(z1l == expected_l);

  const auto z1r = fueter_variable(ctx, 1, eta, Side::Right);
  CliffordPolynomial expected_r(Kind::Slice, ctx);
  expected_r.add_term({0, 1, 0}, Multivector::scalar(n, 1.0));
  expected_r.add_term({0, 0, 1}, e1 * e2);
  CHECK(z1r == expected_r);

  CHECK_THROWS_AS(fueter_variable(ctx, 2, eta, Side::Left), DomainError);
}

TEST_CASE("degree-zero polynomial is 1 and the cap is enforced") {
  const SliceContext ctx(1, 2);
  const auto p0 = fueter_polynomial(ctx, MultiIndex({0, 0}), Omega::axis(ctx, 0), Side::Left);
  CHECK(p0.poly == CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0));
  CHECK_THROWS_AS(fueter_polynomial(ctx, MultiIndex({9, 0}), Omega::axis(ctx, 0), Side::Left),
                  DomainError);
}

TEST_CASE("degree (1,1) at the worked point") {
  const SliceContext ctx(1, 2);
  const auto pk = fueter_polynomial(ctx, MultiIndex({1, 1}), Omega::axis(ctx, 0), Side::Left);
  const double coords[] = {1.0, 2.0, 3.0};
  const Multivector value = pk.poly.evaluate(coords);
  // 2 + 6 e2 - 3 e12
  Multivector expected(ctx.n());
  expected.at(0) = 2.0;
  expected.at(Blade{1} << 1) = 6.0;
  expected.at(0b11) = -3.0;
  CHECK(value == expected);

  // Same number through the oracle.
  const auto oracle =
      fueter_polynomial_permutation_sum(ctx, MultiIndex({1, 1}), Omega::axis(ctx, 0), Side::Left);
  CHECK(oracle.evaluate(coords) == expected);
}

TEST_CASE("squared variable for p = 0") {
  const SliceContext ctx(0, 1);
  const Omega eta = Omega::axis(ctx, 0);
  const auto p2 = fueter_polynomial(ctx, MultiIndex({2}), eta, Side::Left).poly;
  const auto z0 = fueter_variable(ctx, 0, eta, Side::Left);
  CHECK(p2 == z0 * z0);
  // x0^2 - r^2 + 2 x0 r e1 explicitly.
  CliffordPolynomial expected(Kind::Slice, ctx);
  expected.add_term({2, 0}, Multivector::scalar(1, 1.0));
  expected.add_term({0, 2}, Multivector::scalar(1, -1.0));
  expected.add_term({1, 1}, Multivector::generator(1, 1) * 2.0);
  CHECK(p2 == expected);
}

TEST_CASE("recursion equals the permutation oracle term-exactly across degrees") {
  const SliceContext ctx(1, 2);
  for (const auto& k : multi_indices(2, 4, /*cumulative=*/true)) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto rec = fueter_polynomial(ctx, k, Omega::axis(ctx, 1), side).poly;
      const auto oracle = fueter_polynomial_permutation_sum(ctx, k, Omega::axis(ctx, 1), side);
      CHECK(rec == oracle);
    }
  }
}

TEST_CASE("derivative identities vanish") {
  const SliceContext ctx(1, 2);
  const Omega eta = Omega::axis(ctx, 0);
  CHECK(fueter_derivative_residual(ctx, MultiIndex({2, 0}), 0, eta, Side::Left).is_zero(0.0));
  CHECK(fueter_derivative_residual(ctx, MultiIndex({1, 1}), 1, eta, Side::Left).is_zero(0.0));
  CHECK(fueter_derivative_residual(ctx, MultiIndex({0, 0}), 0, eta, Side::Left).is_zero(0.0));
  CHECK(fueter_radial_residual(ctx, MultiIndex({2, 1}), eta).is_zero(0.0));
}

TEST_CASE("slice-independent evaluation") {
  const SliceContext ctx(1, 2);
  const MultiIndex k({1, 1});
  {
    // On the slice of e2 the combination collapses to the slice value.
    const Point x(std::vector<double>{1.0, 2.0, 3.0, 0.0});
    const Multivector value = full_fueter_evaluate(ctx, k, x);
    Multivector expected(ctx.n());
    expected.at(0) = 2.0;
    expected.at(Blade{1} << 1) = 6.0;
    expected.at(0b11) = -3.0;
    CHECK(approx_equal(value, expected, 1e-15));
  }
  {
    // Real point: the monomial value x0 x1.
    const Point x(std::vector<double>{1.0, 2.0, 0.0, 0.0});
    CHECK(approx_equal(full_fueter_evaluate(ctx, k, x), Multivector::scalar(ctx.n(), 2.0),
                       1e-15));
  }
  {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
      const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 2.0);
      const Multivector a = full_fueter_evaluate(ctx, k, x, Side::Left, Omega::axis(ctx, 0));
      const Multivector b = full_fueter_evaluate(ctx, k, x, Side::Left, Omega::axis(ctx, 1));
      const Multivector c =
          full_fueter_evaluate(ctx, k, x, Side::Left, random_omega(rng, ctx));
      CHECK(approx_equal(a, b, 1e-12));
      CHECK(approx_equal(a, c, 1e-12));
    }
  }
}

TEST_CASE("Taylor coefficients and reconstruction") {
  const SliceContext ctx(0, 1);
  const Omega eta = Omega::axis(ctx, 0);
  {
    const auto z0sq = fueter_polynomial(ctx, MultiIndex({2}), eta, Side::Left).poly;
    const auto coeffs = taylor_coefficients(z0sq, 4);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.begin()->first == MultiIndex({2}));
    CHECK(coeffs.begin()->second == Multivector::scalar(1, 1.0));
    CHECK(taylor_reconstruction(ctx, coeffs, eta) == z0sq);
  }
  {
    const auto one = CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0);
    const auto coeffs = taylor_coefficients(one, 3);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.begin()->first == MultiIndex({0}));
  }
}

TEST_CASE("Fueter polynomials are homogeneous of their total degree") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(61);
  for (const auto& k : multi_indices(2, 4, /*cumulative=*/true)) {
    const auto pk = fueter_polynomial(ctx, k, random_omega(rng, ctx), Side::Left).poly;
    for (const auto& [e, c] : pk.terms()) {
      int total = 0;
      for (int v : e) total += v;
      CHECK(total == k.total());
    }
  }
}

TEST_CASE("Taylor coefficients reconstruct full polynomials too") {
  std::mt19937_64 rng(67);
  const SliceContext ctx(1, 2);
  CliffordPolynomial f(CliffordPolynomial::Kind::Full, ctx);
  for (const auto& k : multi_indices(2, 3, /*cumulative=*/true))
    f += fueter_full_polynomial(ctx, k).right_multiplied(
        random_integer_multivector(rng, ctx.n(), -2, 2));
  const auto coeffs = taylor_coefficients(f, 3);
  CHECK(taylor_reconstruction_full(ctx, coeffs) == f);
}

TEST_CASE("Taylor round-trip on random combinations") {
  std::mt19937_64 rng(17);
  const SliceContext ctx(1, 2);
  const Omega eta = Omega::axis(ctx, 0);
  for (int rep = 0; rep < 5; ++rep) {
    CliffordPolynomial f(Kind::Slice, ctx);
    for (const auto& k : multi_indices(2, 3, /*cumulative=*/true)) {
      const auto c = random_integer_multivector(rng, ctx.n(), -2, 2);
      f += fueter_polynomial(ctx, k, eta, Side::Left).poly.right_multiplied(c);
    }
    const auto coeffs = taylor_coefficients(f, 3);
    CHECK(taylor_reconstruction(ctx, coeffs, eta) == f);
  }
}

TEST_CASE("CK extension worked examples") {
  const SliceContext ctx(1, 2);
  {
    // CK[x0] induces x0 + r omega.
    const auto stem = monomial_ck(ctx, MultiIndex({1, 0}));
    CHECK(stem.even_part() == CliffordPolynomial::variable(Kind::Slice, ctx, 0));
    CliffordPolynomial r(Kind::Slice, ctx);
    r.add_term({0, 0, 1}, Multivector::scalar(ctx.n(), 1.0));
    CHECK(stem.odd_part() == r);
  }
  {
    const SliceContext c01(0, 1);
    const auto stem = monomial_ck(c01, MultiIndex({2}));
    const auto direct = fueter_polynomial(c01, MultiIndex({2}), Omega::axis(c01, 0), Side::Left);
    CHECK(stem.slice_function(Omega::axis(c01, 0)) == direct.poly);
  }
  {
    const auto stem = monomial_ck(ctx, MultiIndex({0, 0}));
    CHECK(stem.even_part() == CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0));
    CHECK(stem.odd_part().empty());
  }
  // Radial input is rejected.
  CliffordPolynomial bad(Kind::Slice, ctx);
  bad.add_term({0, 0, 1}, Multivector::scalar(ctx.n(), 1.0));
  CHECK_THROWS_AS(ck_extension(bad), DomainError);
}

TEST_CASE("CK of monomials matches the Fueter polynomials bitwise") {
  for (const auto& pq : {std::pair{0, 2}, std::pair{1, 2}, std::pair{2, 1}}) {
    const SliceContext ctx(pq.first, pq.second);
    for (const auto& k : multi_indices(ctx.p + 1, 4, /*cumulative=*/true)) {
      const auto stem = monomial_ck(ctx, k);
      for (int i = 0; i < ctx.q; ++i) {
        const Omega eta = Omega::axis(ctx, i);
        CHECK(stem.slice_function(eta) ==
              fueter_polynomial(ctx, k, eta, Side::Left).poly);
      }
    }
  }
}

TEST_CASE("paravector translations preserve monogenicity") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& k : multi_indices(2, 3, /*cumulative=*/true)) {
    const Omega eta = random_omega(rng, ctx);
    const auto pk = fueter_polynomial(ctx, k, eta, Side::Left).poly;
    const std::vector<double> shift{u(rng), u(rng)};
    const auto moved = pk.shifted_paravector(shift);
    CHECK(slice_dirac(moved, eta).is_zero(1e-12));
    // Spot-check the substitution itself.
    const std::vector<double> at{0.3, -0.2, 0.7};
    const std::vector<double> displaced{0.3 + shift[0], -0.2 + shift[1], 0.7};
    CHECK(approx_equal(moved.evaluate(at), pk.evaluate(displaced), 1e-13));
  }
}

TEST_CASE("full polynomial form is monogenic for the full operator family") {
  const SliceContext ctx(1, 2);
  std::mt19937_64 rng(11);
  for (const auto& k : multi_indices(2, 3, /*cumulative=*/true)) {
    const auto full = fueter_full_polynomial(ctx, k);
    for (int rep = 0; rep < 4; ++rep) {
      const Omega omega = random_omega(rng, ctx);
      CHECK(slice_dirac(restrict_to_slice(full, omega), omega).is_zero(1e-12));
    }
  }
}
