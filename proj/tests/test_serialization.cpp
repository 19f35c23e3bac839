#include "psmono/serialization.hpp"

#include <random>

#include "doctest.h"
#include "psmono/fueter.hpp"
#include "psmono/verify.hpp"

using namespace psmono;
using Kind = CliffordPolynomial::Kind;

TEST_CASE("multivector text format") {
  const int n = 3;
  Multivector m(n);
  m.at(0) = 2.0;
  m.at(0b010) = 6.0;
  m.at(0b011) = -3.0;
  CHECK(to_text(m) == "2 + 6*e2 - 3*e12");
  CHECK(to_text(Multivector(n)) == "0");
  CHECK(to_text(Multivector::generator(n, 1) * -1.0) == "-1*e1");
}

TEST_CASE("parser normalizes index order and duplicates") {
  const int n = 3;
  // e21 = -e12.
  const auto a = multivector_from_text("1*e21", n);
  CHECK(a[0b011] == -1.0);
  // e11 = -1.
  const auto b = multivector_from_text("2*e11", n);
  CHECK(b.scalar_part() == -2.0);
  // Bare blades and scalars, any term order.
  const auto c = multivector_from_text("-e3 + 4 - 2.5*e12", n);
  CHECK(c.scalar_part() == 4.0);
  CHECK(c[0b100] == -1.0);
  CHECK(c[0b011] == -2.5);
  // Scientific notation coefficients survive the sign splitting.
  const auto d = multivector_from_text("1e-3 + 1.5e+2*e1", n);
  CHECK(d.scalar_part() == 1e-3);
  CHECK(d[0b001] == 150.0);
  CHECK_THROWS_AS(multivector_from_text("1*e9", n), DomainError);
  CHECK_THROWS_AS(multivector_from_text("", n), DomainError);
}

TEST_CASE("text and JSON round-trips are exact") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n : {2, 4}) {
    for (int rep = 0; rep < 25; ++rep) {
      Multivector m(n);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (rep % 3 != 0 || i % 2 == 0) m.at(static_cast<Blade>(i)) = u(rng);
      CHECK(multivector_from_text(to_text(m), n) == m);
      CHECK(multivector_from_json(to_json(m), n) == m);
    }
  }
}

TEST_CASE("wide indices use the comma form") {
  const int n = 11;
  Multivector m(n);
  m.at((Blade{1} << 9) | 1) = 2.5;  // e1 e10
  const std::string text = to_text(m);
  CHECK(text == "2.5*e1,10");
  CHECK(multivector_from_text(text, n) == m);
  CHECK(multivector_from_json(to_json(m), n) == m);
}

TEST_CASE("point JSON") {
  const Point p(std::vector<double>{1.0, -2.5, 0.125});
  CHECK(point_from_json(to_json(p)).x == p.x);
}

TEST_CASE("polynomial and stem JSON round-trips") {
  const SliceContext ctx(1, 2);
  const auto poly = fueter_polynomial(ctx, MultiIndex({1, 1}), Omega::axis(ctx, 0),
                                      Side::Left).poly;
  CHECK(polynomial_from_json(to_json(poly)) == poly);

  const auto stem = monomial_ck(ctx, MultiIndex({2, 0}));
  const auto back = stem_from_json(to_json(stem));
  CHECK(back.even_part() == stem.even_part());
  CHECK(back.odd_part() == stem.odd_part());

  const auto full = stem.to_full_polynomial();
  CHECK(polynomial_from_json(to_json(full)) == full);
}

TEST_CASE("domain descriptors from CLI config JSON") {
  const SliceContext ctx(0, 2);
  const auto ball = domain_from_json(
      ctx, nlohmann::json{{"type", "ball"}, {"center", {0.0}}, {"radius", 1.0}});
  CHECK(ball.is_p_symmetric());
  CHECK(ball.contains(Point(std::vector<double>{0.2, 0.3, 0.0})));

  const auto ann = domain_from_json(
      ctx, nlohmann::json{{"type", "annulus"}, {"rho1", 0.5}, {"rho2", 2.0}});
  CHECK(!ann.contains(Point(std::vector<double>{0.1, 0.0, 0.0})));

  CHECK_THROWS_AS(domain_from_json(ctx, nlohmann::json{{"type", "cube"}}), DomainError);
}

TEST_CASE("Vahlen matrix JSON keeps provenance") {
  const SliceContext ctx(1, 2);
  const auto m = VahlenMatrix::from_generator(ctx, GravGenerator::translation({1.0, 0.5})) *
                 VahlenMatrix::from_generator(ctx, GravGenerator::inversion());
  const auto j = to_json(ctx, m);
  const auto back = vahlen_from_json(ctx, j);
  CHECK(back.has_grav_provenance());
  CHECK(approx_equal(back.a(), m.a(), 0.0));
  CHECK(approx_equal(back.b(), m.b(), 0.0));
  CHECK(approx_equal(back.c(), m.c(), 0.0));
  CHECK(approx_equal(back.d(), m.d(), 0.0));

  // Entry-only JSON loses provenance but keeps the matrix.
  auto j2 = j;
  j2.erase("provenance");
  const auto raw = vahlen_from_json(ctx, j2);
  CHECK(!raw.has_grav_provenance());
  CHECK(approx_equal(raw.a(), m.a(), 0.0));
}

TEST_CASE("omega parsing") {
  const SliceContext ctx(1, 2);
  const Omega e2 = omega_from_text(ctx, "e2");
  CHECK(e2.component(0) == 1.0);
  CHECK(e2.component(1) == 0.0);
  const Omega mix = omega_from_text(ctx, "0.6*e2 + 0.8*e3");
  CHECK(mix.component(0) == doctest::Approx(0.6));
  CHECK(mix.component(1) == doctest::Approx(0.8));
  CHECK_THROWS_AS(omega_from_text(ctx, "e1"), DomainError);   // paravector axis
  CHECK_THROWS_AS(omega_from_text(ctx, "0.5*e2"), DomainError);  // not unit
}
