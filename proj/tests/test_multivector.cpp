#include "psmono/multivector.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"

using namespace psmono;

namespace {

Blade blade_of(std::initializer_list<int> gens) {
  Blade b = 0;
  for (int g : gens) b |= Blade{1} << (g - 1);
  return b;
}

Multivector random_integer_mv(std::mt19937_64& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Multivector m(n);
  for (std::size_t i = 0; i < m.size(); ++i) m.at(static_cast<Blade>(i)) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("blade product base cases") {
  auto r = blade_product(blade_of({1}), blade_of({1}));
  CHECK(r.sign == -1);
  CHECK(r.blade == 0);

  r = blade_product(blade_of({1, 2}), blade_of({2}));
  CHECK(r.sign == -1);
  CHECK(r.blade == blade_of({1}));

  r = blade_product(blade_of({2}), blade_of({1}));
  CHECK(r.sign == -1);
  CHECK(r.blade == blade_of({1, 2}));
}

TEST_CASE("sign masks reproduce the merge-counting blade product") {
  for (int n = 1; n <= 8; ++n) {
    const Blade len = Blade{1} << n;
    for (Blade a = 0; a < len; ++a) {
      const Blade lmask = left_sign_mask(a);
      for (Blade b = 0; b < len; ++b) {
        const auto ref = blade_product(a, b);
        const int via_right = (std::popcount(a & right_sign_mask(b)) & 1) ? -1 : 1;
        const int via_left = (std::popcount(b & lmask) & 1) ? -1 : 1;
        REQUIRE(ref.sign == via_right);
        REQUIRE(ref.sign == via_left);
      }
    }
  }
}

TEST_CASE("generator relations e_i e_j + e_j e_i = -2 delta_ij") {
  const int n = 6;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto ei = Multivector::generator(n, i);
      const auto ej = Multivector::generator(n, j);
      const Multivector anti = ei * ej + ej * ei;
      const Multivector expected = Multivector::scalar(n, i == j ? -2.0 : 0.0);
      CHECK(anti == expected);
    }
  }
}

TEST_CASE("geometric product worked examples") {
  const int n = 2;
  const auto one = Multivector::scalar(n, 1.0);
  const auto e1 = Multivector::generator(n, 1);
  const auto e2 = Multivector::generator(n, 2);

  CHECK((one + e1) * (one - e1) == Multivector::scalar(n, 2.0));
  CHECK((e1 * e2) * e1 == e2);

  // (1 + 3 e2)(2 + 3 e2 e1) expanded blade by blade with the blade_product
  // oracle.
  const Multivector lhs = one + 3.0 * e2;
  const Multivector rhs = Multivector::scalar(n, 2.0) + 3.0 * (e2 * e1);
  Multivector expected(n);
  const std::pair<Blade, double> lterms[] = {{0, 1.0}, {blade_of({2}), 3.0}};
  const std::pair<Blade, double> rterms[] = {{0, 2.0}, {blade_of({1, 2}), -3.0}};
  for (auto [ba, ca] : lterms)
    for (auto [bb, cb] : rterms) {
      const auto pr = blade_product(ba, bb);
      expected.at(pr.blade) += pr.sign * ca * cb;
    }
  CHECK(lhs * rhs == expected);
  // Spot values: 2 + 6 e2 - 9 e1 - 3 e1e2.
  CHECK(expected.scalar_part() == 2.0);
  CHECK(expected[blade_of({2})] == 6.0);
  CHECK(expected[blade_of({1})] == -9.0);
  CHECK(expected[blade_of({1, 2})] == -3.0);
}

TEST_CASE("conjugation and reversion on blades") {
  const int n = 3;
  const auto e1 = Multivector::generator(n, 1);
  const auto e12 = Multivector::blade(n, blade_of({1, 2}));
  const auto e123 = Multivector::blade(n, blade_of({1, 2, 3}));

  CHECK(e1.conjugate() == -e1);
  CHECK(e12.conjugate() == -e12);
  CHECK(Multivector::scalar(n, 5.0).conjugate() == Multivector::scalar(n, 5.0));

  CHECK(e12.reverse() == -e12);
  CHECK(e123.reverse() == -e123);
  CHECK(e1.reverse() == e1);
}

TEST_CASE("norm and scalar part") {
  const int n = 3;
  Multivector m(n);
  m.at(0) = 1.0;
  m.at(blade_of({1})) = 1.0;
  m.at(blade_of({2, 3})) = 1.0;
  CHECK(m.norm() == doctest::Approx(std::sqrt(3.0)));
  CHECK(Multivector(n).norm() == 0.0);

  Multivector v(n);
  v.at(blade_of({1})) = 3.0;
  v.at(blade_of({2})) = -4.0;
  CHECK(v.norm() == doctest::Approx(5.0));

  CHECK((Multivector::scalar(n, 3.0) + Multivector::generator(n, 1)).scalar_part() == 3.0);
  CHECK(Multivector::blade(n, blade_of({1, 2})).scalar_part() == 0.0);
  const auto e2 = Multivector::generator(n, 2);
  CHECK((e2 * e2).scalar_part() == -1.0);
}

TEST_CASE("paravector inverse") {
  const int n = 2;
  const double coords[] = {1.0, 1.0, 0.0};
  const auto x = Multivector::paravector(n, coords);
  const auto xi = x.paravector_inverse();
  CHECK(xi.scalar_part() == doctest::Approx(0.5));
  CHECK(xi[blade_of({1})] == doctest::Approx(-0.5));
  CHECK(approx_equal(x * xi, Multivector::scalar(n, 1.0), 1e-15));

  const auto e1 = Multivector::generator(n, 1);
  CHECK(e1.paravector_inverse() == -e1);
  CHECK(Multivector::scalar(n, 2.0).paravector_inverse() == Multivector::scalar(n, 0.5));

  CHECK_THROWS_AS(Multivector(n).paravector_inverse(), SingularityError);
}

TEST_CASE("associativity and anti-homomorphisms on random integer multivectors") {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3, 4, 6}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_integer_mv(rng, n);
      const auto b = random_integer_mv(rng, n);
      const auto c = random_integer_mv(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * b).reverse() == b.reverse() * a.reverse());
      CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
    }
  }
}

TEST_CASE("norm squared of a paravector is the scalar part of x conj(x)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const int n = 4;
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<double> coords(n + 1);
    for (auto& v : coords) v = d(rng);
    const auto x = Multivector::paravector(n, coords);
    const double nsq = x.norm() * x.norm();
    CHECK((x * x.conjugate()).scalar_part() == doctest::Approx(nsq).epsilon(1e-13));
    if (x.norm() > 1e-6) {
      CHECK(approx_equal(x * x.paravector_inverse(), Multivector::scalar(n, 1.0), 1e-13));
    }
  }
}

TEST_CASE("mixed algebras are rejected") {
  CHECK_THROWS_AS(Multivector(2) + Multivector(3), DimensionError);
  CHECK_THROWS_AS(Multivector(2) * Multivector(3), DimensionError);
}

TEST_CASE("signature validation and construction") {
  CHECK_THROWS_AS(AlgebraSignature(0), DomainError);
  CHECK_THROWS_AS(AlgebraSignature(13), DomainError);
  const AlgebraSignature sig(4);
  CHECK(sig.dimension() == 16);
  CHECK(Multivector(sig).size() == 16);
}

TEST_CASE("shared values are safe to read from several threads") {
  const int n = 5;
  std::mt19937_64 rng(77);
  const auto a = random_integer_mv(rng, n);
  const auto b = random_integer_mv(rng, n);
  const auto expected = a * b;

  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&] {
      for (int rep = 0; rep < 200; ++rep) {
        if (!(a * b == expected)) ++mismatches;
        if (!((a + b).conjugate() == a.conjugate() + b.conjugate())) ++mismatches;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(mismatches.load() == 0);
}

TEST_CASE("dense and sparse product paths agree") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int n : {3, 5}) {
    // Dense a, sparse b, and vice versa, against the pairwise oracle.
    for (int rep = 0; rep < 10; ++rep) {
      Multivector a(n), b(n);
      for (std::size_t i = 0; i < a.size(); ++i) a.at(static_cast<Blade>(i)) = d(rng);
      b.at(static_cast<Blade>(rep % a.size())) = 1.5;
      b.at(0) = -0.5;

      Multivector expected(n);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          const double v = a[static_cast<Blade>(i)] * b[static_cast<Blade>(j)];
          if (v == 0.0) continue;
          const auto pr = blade_product(static_cast<Blade>(i), static_cast<Blade>(j));
          expected.at(pr.blade) += pr.sign * v;
        }
      CHECK(approx_equal(a * b, expected, 1e-14));
      CHECK(approx_equal(b * a, (b * a), 0.0));
    }
  }
}
