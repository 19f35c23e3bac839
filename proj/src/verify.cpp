#include "psmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace psmono {

namespace {

using Kind = CliffordPolynomial::Kind;

struct Tracker {
  double max_err = 0.0;
  void feed(double err) { max_err = std::max(max_err, err); }
  CheckResult result(std::string name, double tol, std::string detail = {}) const {
    return {std::move(name), max_err <= tol, max_err, tol, std::move(detail)};
  }
};

double rel_err(const Multivector& got, const Multivector& want) {
  return (got - want).norm() / (1.0 + want.norm());
}

std::vector<Omega> basis_omegas(const SliceContext& ctx) {
  std::vector<Omega> out;
  for (int i = 0; i < ctx.q; ++i) out.push_back(Omega::axis(ctx, i));
  return out;
}

}  // namespace

Omega random_omega(std::mt19937_64& rng, const SliceContext& ctx) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(ctx.q));
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (auto& v : c) {
      v = gauss(rng);
      nrm += v * v;
    }
  } while (nrm < 1e-12);
  nrm = std::sqrt(nrm);
  for (auto& v : c) v /= nrm;
  // Renormalize once more so the unit check passes to machine precision.
  double check = 0.0;
  for (double v : c) check += v * v;
  const double fix = std::sqrt(check);
  for (auto& v : c) v /= fix;
  return Omega(ctx, std::move(c), 1e-9);
}

Multivector random_integer_multivector(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Multivector m(n);
  for (std::size_t i = 0; i < m.size(); ++i) m.at(static_cast<Blade>(i)) = d(rng);
  return m;
}

Point random_point_in_ball(std::mt19937_64& rng, const SliceContext& ctx,
                           const std::vector<double>& center, double radius,
                           double min_trailing) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int dim = ctx.ambient_dim();
  while (true) {
    Point pt(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    double d2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double c = i <= ctx.p ? center[static_cast<std::size_t>(i)] : 0.0;
      pt[i] = c + radius * u(rng);
      d2 += (pt[i] - c) * (pt[i] - c);
    }
    if (d2 >= radius * radius) continue;
    double trailing = 0.0;
    for (int i = ctx.p + 1; i < dim; ++i) trailing += pt[i] * pt[i];
    if (std::sqrt(trailing) < min_trailing) continue;
    return pt;
  }
}

StemPolynomial random_fueter_combination(std::mt19937_64& rng, const SliceContext& ctx,
                                         int max_degree, int terms) {
  const auto indices = multi_indices(ctx.p + 1, max_degree, /*cumulative=*/true);
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  CliffordPolynomial f1(Kind::Slice, ctx);
  CliffordPolynomial f2(Kind::Slice, ctx);
  StemPolynomial acc(f1, f2);
  for (int t = 0; t < terms; ++t) {
    const auto& k = indices[pick(rng)];
    const Multivector c = random_integer_multivector(rng, ctx.n(), -2, 2);
    acc = acc + monomial_ck(ctx, k).right_multiplied(c);
  }
  return acc;
}

// ===================================================================
// Suite 1: Clifford algebra core.
// ===================================================================

namespace {

SuiteReport suite_clifford(const SuiteOptions& opt) {
  SuiteReport report{"clifford", false, {}};
  std::mt19937_64 rng(opt.seed);

  {
    Tracker t;
    for (int n = 1; n <= 6; ++n) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto ei = Multivector::generator(n, i);
          const auto ej = Multivector::generator(n, j);
          const auto anti = ei * ej + ej * ei;
          const auto expected = Multivector::scalar(n, i == j ? -2.0 : 0.0);
          t.feed((anti - expected).max_abs_coefficient());
        }
    }
    report.checks.push_back(t.result("generator-relations", 0.0));
  }

  {
    Tracker t;
    for (int rep = 0; rep < 1000; ++rep) {
      const int n = 2 + static_cast<int>(rep % 5);  // algebras R_2 .. R_6
      const auto a = random_integer_multivector(rng, n);
      const auto b = random_integer_multivector(rng, n);
      const auto c = random_integer_multivector(rng, n);
      t.feed(((a * b) * c - a * (b * c)).max_abs_coefficient());
    }
    report.checks.push_back(t.result("associativity", 0.0, "1000 integer triples"));
  }

  {
    Tracker t;
    for (int rep = 0; rep < 200; ++rep) {
      const int n = 2 + static_cast<int>(rep % 5);
      const auto a = random_integer_multivector(rng, n);
      const auto b = random_integer_multivector(rng, n);
      t.feed(((a * b).reverse() - b.reverse() * a.reverse()).max_abs_coefficient());
      t.feed(((a * b).conjugate() - b.conjugate() * a.conjugate()).max_abs_coefficient());
    }
    report.checks.push_back(t.result("anti-homomorphisms", 0.0));
  }

  {
    Tracker t;
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 100) {
      const int n = 2 + done % 5;
      std::vector<double> coords(static_cast<std::size_t>(n) + 1);
      for (auto& v : coords) v = u(rng);
      const auto x = Multivector::paravector(n, coords);
      if (x.norm() < 1e-3) continue;
      ++done;
      t.feed((x * x.paravector_inverse() - Multivector::scalar(n, 1.0)).max_abs_coefficient());
    }
    report.checks.push_back(t.result("paravector-inverse", opt.tolerance.value_or(1e-12)));
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 2: Fueter monogenicity.
// ===================================================================

SuiteReport suite_fueter_monogenicity(const SuiteOptions& opt) {
  SuiteReport report{"fueter-monogenicity", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 5;
  const double tol = opt.tolerance.value_or(1e-12);

  Tracker left, right;
  for (int p = 0; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const SliceContext ctx(p, q);
      for (int sample = 0; sample < 10; ++sample) {
        const Omega eta = random_omega(rng, ctx);
        const auto fam_l = fueter_family(ctx, max_deg, eta, Side::Left);
        for (const auto& [k, poly] : fam_l) left.feed(slice_dirac(poly, eta).max_abs_coefficient());
        const auto fam_r = fueter_family(ctx, max_deg, eta, Side::Right);
        for (const auto& [k, poly] : fam_r)
          right.feed(slice_dirac_right(poly, eta).max_abs_coefficient());
      }
    }
  }
  report.checks.push_back(left.result("left-monogenicity", tol, "p<=3, q<=3, 10 eta"));
  report.checks.push_back(right.result("right-monogenicity", tol));
  report.pass = report.checks[0].pass && report.checks[1].pass;
  return report;
}

// ===================================================================
// Suite 3: recursion vs permutation-sum oracle.
// ===================================================================

SuiteReport suite_fueter_recursion(const SuiteOptions& opt) {
  SuiteReport report{"fueter-recursion", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 4;

  Tracker exact, sampled;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const SliceContext ctx(p, q);
      for (const auto& k : multi_indices(p + 1, max_deg, /*cumulative=*/true)) {
        for (const auto& eta : basis_omegas(ctx)) {
          for (Side side : {Side::Left, Side::Right}) {
            const auto rec = fueter_polynomial(ctx, k, eta, side).poly;
            const auto oracle = fueter_polynomial_permutation_sum(ctx, k, eta, side);
            exact.feed(rec == oracle ? 0.0 : (rec - oracle).max_abs_coefficient());
          }
        }
        const Omega eta = random_omega(rng, ctx);
        const auto rec = fueter_polynomial(ctx, k, eta, Side::Left).poly;
        const auto oracle = fueter_polynomial_permutation_sum(ctx, k, eta, Side::Left);
        sampled.feed((rec - oracle).max_abs_coefficient());
      }
    }
  }
  report.checks.push_back(exact.result("recursion-oracle-basis-eta", 0.0, "bitwise"));
  report.checks.push_back(
      sampled.result("recursion-oracle-random-eta", opt.tolerance.value_or(1e-12)));
  report.pass = report.checks[0].pass && report.checks[1].pass;
  return report;
}

// ===================================================================
// Suite 4: derivative identities.
// ===================================================================

SuiteReport suite_fueter_derivatives(const SuiteOptions& opt) {
  SuiteReport report{"fueter-derivatives", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 4;

  Tracker exact, sampled;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const SliceContext ctx(p, q);
      for (const auto& k : multi_indices(p + 1, max_deg, /*cumulative=*/true)) {
        for (const auto& eta : basis_omegas(ctx)) {
          for (int j = 0; j <= p; ++j)
            exact.feed(
                fueter_derivative_residual(ctx, k, j, eta, Side::Left).max_abs_coefficient());
          exact.feed(fueter_radial_residual(ctx, k, eta).max_abs_coefficient());
        }
        const Omega eta = random_omega(rng, ctx);
        for (int j = 0; j <= p; ++j)
          sampled.feed(
              fueter_derivative_residual(ctx, k, j, eta, Side::Left).max_abs_coefficient());
        sampled.feed(fueter_radial_residual(ctx, k, eta).max_abs_coefficient());
      }
    }
  }
  report.checks.push_back(exact.result("derivative-identities-basis-eta", 0.0, "bitwise"));
  report.checks.push_back(
      sampled.result("derivative-identities-random-eta", opt.tolerance.value_or(1e-12)));
  report.pass = report.checks[0].pass && report.checks[1].pass;
  return report;
}

// ===================================================================
// Suite 5: CK extension consistency.
// ===================================================================

SuiteReport suite_ck(const SuiteOptions& opt) {
  SuiteReport report{"ck-consistency", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 4;

  Tracker exact, values, variables;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const SliceContext ctx(p, q);
      for (const auto& k : multi_indices(p + 1, max_deg, /*cumulative=*/true)) {
        const auto stem = monomial_ck(ctx, k);
        for (const auto& eta : basis_omegas(ctx)) {
          const auto direct = fueter_polynomial(ctx, k, eta, Side::Left).poly;
          const auto via_ck = stem.slice_function(eta);
          exact.feed(via_ck == direct ? 0.0 : (via_ck - direct).max_abs_coefficient());
        }
        for (int rep = 0; rep < 5; ++rep) {
          const Point x = random_point_in_ball(rng, ctx,
                                               std::vector<double>(ctx.p + 1, 0.0), 2.0);
          values.feed(rel_err(stem.induce(x), full_fueter_evaluate(ctx, k, x)));
        }
      }
      for (int l = 0; l <= p; ++l) {
        std::vector<int> unit(static_cast<std::size_t>(p + 1), 0);
        unit[static_cast<std::size_t>(l)] = 1;
        const auto stem = monomial_ck(ctx, MultiIndex(unit));
        for (const auto& eta : basis_omegas(ctx)) {
          const auto z = fueter_variable(ctx, l, eta, Side::Left);
          const auto via_ck = stem.slice_function(eta);
          variables.feed(via_ck == z ? 0.0 : (via_ck - z).max_abs_coefficient());
        }
      }
    }
  }
  report.checks.push_back(exact.result("ck-monomial-equals-fueter", 0.0, "bitwise"));
  report.checks.push_back(values.result("ck-pointwise", opt.tolerance.value_or(1e-12)));
  report.checks.push_back(variables.result("ck-of-coordinates", 0.0, "CK[x_l] = z_l"));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 6: Representation formulas.
// ===================================================================

SuiteReport suite_representation(const SuiteOptions& opt) {
  SuiteReport report{"representation", false, {}};
  std::mt19937_64 rng(opt.seed);
  const double tol = opt.tolerance.value_or(1e-12);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  Tracker two_point, independence;
  for (const auto& [p, q] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{1, 3}}) {
    const SliceContext ctx(p, q);
    for (int rep = 0; rep < 4; ++rep) {
      const auto stem = random_fueter_combination(rng, ctx, max_deg);
      auto f = [&](const Point& x) { return stem.induce(x); };
      std::uniform_real_distribution<double> u(-1.5, 1.5);
      std::uniform_real_distribution<double> ur(0.1, 1.5);
      for (int pt = 0; pt < 25; ++pt) {
        std::vector<double> xp(static_cast<std::size_t>(p + 1));
        for (auto& v : xp) v = u(rng);
        const double r = ur(rng);
        const Omega w1 = random_omega(rng, ctx);
        Omega w2 = random_omega(rng, ctx);
        while ((w1.to_multivector(ctx) - w2.to_multivector(ctx)).norm() < 0.3)
          w2 = random_omega(rng, ctx);
        const Omega target = random_omega(rng, ctx);
        const Multivector direct = f(compose(ctx, xp, r, target));
        const Multivector recon = representation_formula(
            ctx, f(compose(ctx, xp, r, w1)), f(compose(ctx, xp, r, w2)), w1, w2, target);
        two_point.feed(rel_err(recon, direct));

        // F1/F2 slots across eta choices.
        Multivector f1_ref(ctx.n()), f2_ref(ctx.n());
        for (int e = 0; e < 5; ++e) {
          const Omega eta = random_omega(rng, ctx);
          const Multivector plus = f(compose(ctx, xp, r, eta));
          const Multivector minus = f(compose(ctx, xp, r, eta.negated()));
          const Multivector f1 = (plus + minus) * 0.5;
          const Multivector f2 = eta.to_multivector(ctx) * (minus - plus) * 0.5;
          if (e == 0) {
            f1_ref = f1;
            f2_ref = f2;
          } else {
            independence.feed(rel_err(f1, f1_ref));
            independence.feed(rel_err(f2, f2_ref));
          }
        }
      }
    }
  }
  report.checks.push_back(two_point.result("two-point-reconstruction", tol, "100 points"));
  report.checks.push_back(independence.result("slot-eta-independence", tol, "5 eta choices"));
  report.pass = report.checks[0].pass && report.checks[1].pass;
  return report;
}

// ===================================================================
// Suite 7: the GSR bridge.
// ===================================================================

SuiteReport suite_gsr_bridge(const SuiteOptions& opt) {
  SuiteReport report{"gsr-bridge", false, {}};
  std::mt19937_64 rng(opt.seed);
  const double tol = opt.tolerance.value_or(1e-12);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  Tracker residuals, monogenic, roundtrip;
  for (const auto& [p, q] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{2, 2}}) {
    const SliceContext ctx(p, q);
    for (int rep = 0; rep < 4; ++rep) {
      const auto stem = random_fueter_combination(rng, ctx, max_deg);
      const auto [r1, r2] = stem.gsr_residual();
      residuals.feed(r1.max_abs_coefficient());
      residuals.feed(r2.max_abs_coefficient());
      for (int s = 0; s < 10; ++s) {
        const Omega omega = random_omega(rng, ctx);
        monogenic.feed(
            slice_dirac(stem.slice_function(omega), omega).max_abs_coefficient());
      }
      // GSM implies GSR: recover the stem from one slice and compare.
      const Omega eta = random_omega(rng, ctx);
      const auto recovered = extend_from_slice(stem.slice_function(eta), eta, 1e-9);
      roundtrip.feed((recovered.even_part() - stem.even_part()).max_abs_coefficient());
      roundtrip.feed((recovered.odd_part() - stem.odd_part()).max_abs_coefficient());
      const auto [s1, s2] = recovered.gsr_residual();
      residuals.feed(s1.max_abs_coefficient());
      residuals.feed(s2.max_abs_coefficient());
    }
  }
  report.checks.push_back(residuals.result("gsr-residuals", tol));
  report.checks.push_back(monogenic.result("induced-monogenicity", tol, "10 omega each"));
  report.checks.push_back(roundtrip.result("extension-roundtrip", 1e-10));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 8: kernels.
// ===================================================================

SuiteReport suite_kernel(const SuiteOptions& opt) {
  SuiteReport report{"kernel", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  Tracker symbolic, homogeneity, q_monogenic;
  for (const auto& [p, q] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{2, 1}}) {
    const SliceContext ctx(p, q);
    std::vector<Omega> etas = basis_omegas(ctx);
    etas.push_back(random_omega(rng, ctx));
    for (const auto& eta : etas) {
      const auto e_expr = cauchy_kernel_expr(ctx, eta);
      symbolic.feed(e_expr.slice_dirac_applied(eta).symbolically_zero(1e-12) ? 0.0 : 1.0);
      symbolic.feed(e_expr.slice_dirac_right_applied(eta).symbolically_zero(1e-12) ? 0.0 : 1.0);

      for (const auto& k : multi_indices(p + 1, std::min(max_deg, 2), /*cumulative=*/true)) {
        const auto qk = q_kernel(ctx, k, eta);
        q_monogenic.feed(qk.slice_dirac_applied(eta).symbolically_zero(1e-10) ? 0.0 : 1.0);
      }

      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (const auto& k : multi_indices(p + 1, max_deg, /*cumulative=*/true)) {
        const auto qk = q_kernel(ctx, k, eta);
        const int degree = -(k.total() + p + 1);
        for (int rep = 0; rep < 5; ++rep) {
          std::vector<double> x(static_cast<std::size_t>(p + 2));
          double nrm = 0.0;
          for (auto& v : x) {
            v = u(rng);
            nrm += v * v;
          }
          if (nrm < 0.25) {
            --rep;
            continue;
          }
          const Multivector base = qk.evaluate(x);
          for (double lambda : {2.0, 3.0}) {
            auto xs = x;
            for (auto& v : xs) v *= lambda;
            const Multivector scaled = qk.evaluate(xs);
            const Multivector expected = base * std::pow(lambda, degree);
            homogeneity.feed(rel_err(scaled, expected));
          }
        }
      }
    }
  }
  report.checks.push_back(symbolic.result("cauchy-kernel-monogenic-symbolic", 0.0));
  report.checks.push_back(q_monogenic.result("q-kernel-monogenic-symbolic", 0.0));
  report.checks.push_back(
      homogeneity.result("q-kernel-homogeneity", opt.tolerance.value_or(1e-10)));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 9: Cauchy formulas over quadrature.
// ===================================================================

SuiteReport suite_cauchy(const SuiteOptions& opt) {
  SuiteReport report{"cauchy", false, {}};
  std::mt19937_64 rng(opt.seed);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  for (const int p : {0, 1}) {
    const int q = 2;
    const SliceContext ctx(p, q);
    const double tol = opt.tolerance.value_or(p == 0 ? 1e-10 : 1e-8);
    const std::vector<double> center(static_cast<std::size_t>(p + 1), 0.0);
    const Omega eta1 = Omega::axis(ctx, 0);
    const Omega eta2 = random_omega(rng, ctx);
    const auto rule1 = boundary_rule(ctx, eta1, center, 1.0);
    const auto rule2 = boundary_rule(ctx, eta2, center, 1.0);

    Tracker reproduce, slice_independent;
    for (int rep = 0; rep < 3; ++rep) {
      const auto stem = random_fueter_combination(rng, ctx, max_deg);
      auto f = [&](const Point& y) { return stem.induce(y); };
      std::vector<Multivector> f1_nodes, f2_nodes;
      for (const auto& node : rule1.nodes()) f1_nodes.push_back(f(rule1.full_point(node)));
      for (const auto& node : rule2.nodes()) f2_nodes.push_back(f(rule2.full_point(node)));

      for (int pt = 0; pt < 20; ++pt) {
        // Interior points, including off the integration slice.
        const Point x = random_point_in_ball(rng, ctx, center, p == 0 ? 0.62 : 0.5);
        const Multivector direct = f(x);
        const Multivector via1 = cauchy_integral(f1_nodes, rule1, x);
        reproduce.feed(rel_err(via1, direct));
        const Multivector via2 = cauchy_integral(f2_nodes, rule2, x);
        slice_independent.feed(rel_err(via2, via1));
      }
    }
    report.checks.push_back(reproduce.result(
        p == 0 ? "reproduction-p0" : "reproduction-p1", tol, "20 interior points"));
    report.checks.push_back(slice_independent.result(
        p == 0 ? "slice-independence-p0" : "slice-independence-p1",
        std::max(tol, 1e-8)));
  }
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 10: Cauchy-Pompeiu.
// ===================================================================

SuiteReport suite_cauchy_pompeiu(const SuiteOptions& opt) {
  SuiteReport report{"cauchy-pompeiu", false, {}};
  const SliceContext ctx(0, 2);
  const double tol = opt.tolerance.value_or(1e-6);
  const std::vector<double> center{0.0};
  const Omega eta = Omega::axis(ctx, 0);
  const auto boundary = boundary_rule(ctx, eta, center, 1.0);

  // The non-GSR stem (x_0^2, 0).
  CliffordPolynomial f1(Kind::Slice, ctx);
  f1.add_term({2, 0}, Multivector::scalar(ctx.n(), 1.0));
  CliffordPolynomial f2(Kind::Slice, ctx);
  const StemPolynomial square(f1, f2);

  Tracker nongsr, gsr_case, linear_case;
  {
    const Point x(std::vector<double>{0.3, 0.2, 0.0});
    const auto solid = solid_rule(ctx, eta, center, 1.0, {0.3, 0.2});
    const Multivector got = cauchy_pompeiu(square, boundary, solid, x);
    nongsr.feed(rel_err(got, square.induce(x)));
  }
  {
    // GSR stem: solid term vanishes and the boundary term alone reproduces.
    const auto stem = monomial_ck(ctx, MultiIndex(std::vector<int>{2}));
    const Point x(std::vector<double>{0.25, -0.3, 0.1});
    const auto d = decompose(ctx, x);
    const auto solid = solid_rule(ctx, eta, center, 1.0, {d.xp[0], d.r});
    const Multivector via_pompeiu = cauchy_pompeiu(stem, boundary, solid, x);
    const Multivector via_cauchy =
        cauchy_integral([&](const Point& y) { return stem.induce(y); }, boundary, x);
    gsr_case.feed(rel_err(via_pompeiu, stem.induce(x)));
    gsr_case.feed(rel_err(via_cauchy, stem.induce(x)));
  }
  {
    const auto stem = monomial_ck(ctx, MultiIndex(std::vector<int>{1}));
    const Point x(std::vector<double>{-0.2, 0.1, 0.25});
    const auto d = decompose(ctx, x);
    const auto solid = solid_rule(ctx, eta, center, 1.0, {d.xp[0], d.r});
    linear_case.feed(rel_err(cauchy_pompeiu(stem, boundary, solid, x), stem.induce(x)));
  }
  report.checks.push_back(nongsr.result("non-gsr-square", tol, "stem (x0^2, 0)"));
  report.checks.push_back(gsr_case.result("gsr-reduces-to-cauchy", 1e-9));
  report.checks.push_back(linear_case.result("linear-stem", 1e-9));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 11: Laurent pairings and the kernel self-expansion.
// ===================================================================

SuiteReport suite_laurent(const SuiteOptions& opt) {
  SuiteReport report{"laurent", false, {}};
  std::mt19937_64 rng(opt.seed);
  const SliceContext ctx(0, 2);
  const double tol = opt.tolerance.value_or(1e-8);
  const int max_k = opt.max_degree > 0 ? opt.max_degree : 3;
  const Omega eta = Omega::axis(ctx, 0);
  const auto rule = boundary_rule(ctx, eta, {0.0}, 1.0);

  Tracker entire_b, taylor_match;
  for (int rep = 0; rep < 3; ++rep) {
    const auto stem = random_fueter_combination(rng, ctx, max_k);
    const auto coeffs = laurent_coefficients(
        [&](const Point& y) { return stem.induce(y); }, rule, max_k);
    const auto taylor = taylor_coefficients(stem.slice_function(eta), max_k);
    for (const auto& [k, b] : coeffs.principal) entire_b.feed(b.norm());
    for (const auto& [k, a] : coeffs.regular) {
      const auto it = taylor.find(k);
      const Multivector expect = it != taylor.end() ? it->second : Multivector(ctx.n());
      taylor_match.feed((a - expect).norm());
    }
  }

  {
    // Kernel self-expansion: partial sums of P_k(x) Q_k(y) against the
    // slice Cauchy kernel, with |x| = 0.3 |y|.
    const Point y(std::vector<double>{0.8, 0.9, 0.3});
    const double ny = y.norm();
    std::vector<double> dir{0.5, -0.6, 0.4};
    double dn = 0.0;
    for (double v : dir) dn += v * v;
    dn = std::sqrt(dn);
    Point x(std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i) x[i] = 0.3 * ny * dir[static_cast<std::size_t>(i)] / dn;

    const Multivector target = slice_cauchy_kernel(ctx, y, x);
    std::vector<double> errs;
    Multivector acc(ctx.n());
    for (int K = 0; K <= 8; ++K) {
      for (const auto& k : multi_indices(ctx.p + 1, K)) {
        acc += full_fueter_evaluate(ctx, k, x) * q_full(ctx, k, y);
      }
      errs.push_back((acc - target).norm());
    }
    bool monotone = true;
    double worst = -1.0;
    for (int K = 0; K + 2 <= 8; ++K) {
      const double delta =
          errs[static_cast<std::size_t>(K + 2)] - errs[static_cast<std::size_t>(K)];
      monotone = monotone && delta < 0.0;
      worst = std::max(worst, delta);
    }
    report.checks.push_back(
        {"kernel-self-expansion", monotone, worst, 0.0, "error at K+2 below error at K"});
  }

  report.checks.push_back(entire_b.result("entire-principal-part-vanishes", tol));
  report.checks.push_back(taylor_match.result("laurent-matches-taylor", tol));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 12: global operators.
// ===================================================================

SuiteReport suite_global_operators(const SuiteOptions& opt) {
  SuiteReport report{"global-operators", false, {}};
  std::mt19937_64 rng(opt.seed);
  const double tol = opt.tolerance.value_or(1e-10);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  Tracker gamma_identity, kernel_equiv, vanish;
  for (const auto& [p, q] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{1, 3}}) {
    const SliceContext ctx(p, q);
    for (int rep = 0; rep < 3; ++rep) {
      const auto stem = random_fueter_combination(rng, ctx, max_deg);
      const auto full = stem.to_full_polynomial();

      // Spherical Dirac against the spherical derivative, term-exact.
      const auto lhs = spherical_dirac(full);
      {
        // (q-1) x_q f'_s as a full polynomial.
        const auto fs = stem.spherical_derivative_polynomial();
        StemPolynomial helper(CliffordPolynomial(Kind::Slice, ctx),
                              fs * CliffordPolynomial::variable(Kind::Slice, ctx, ctx.p + 1));
        const auto xq_fs = helper.to_full_polynomial();  // x_q f'_s
        gamma_identity.feed(
            (lhs - xq_fs.scaled(static_cast<double>(q - 1))).max_abs_coefficient());
      }

      // G f = |x_q|^2 thetabar f off the axis, and both vanish for the
      // monogenic suite.
      const auto gf = global_operator(full);
      for (int pt = 0; pt < 34; ++pt) {
        const Point x = random_point_in_ball(rng, ctx, std::vector<double>(ctx.p + 1, 0.0),
                                             1.5, /*min_trailing=*/0.15);
        const auto d = decompose(ctx, x);
        const Multivector g_val = gf.evaluate(x.x);
        const Multivector theta = stem.global_derivative(x);
        kernel_equiv.feed(rel_err(g_val, theta * (d.r * d.r)));
        vanish.feed(g_val.norm());
        vanish.feed(theta.norm());
      }
    }
  }

  // Kernel equivalence "zero iff zero" on a non-GSR stem: both sides differ
  // from zero at generic points.
  {
    const SliceContext ctx(0, 2);
    CliffordPolynomial f1(Kind::Slice, ctx);
    f1.add_term({2, 0}, Multivector::scalar(ctx.n(), 1.0));
    const StemPolynomial square(f1, CliffordPolynomial(Kind::Slice, ctx));
    const auto gf = global_operator(square.to_full_polynomial());
    const Point x(std::vector<double>{0.4, 0.3, -0.2});
    const auto d = decompose(ctx, x);
    const Multivector g_val = gf.evaluate(x.x);
    const Multivector theta = square.global_derivative(x);
    const bool both_nonzero = g_val.norm() > 1e-6 && theta.norm() > 1e-6;
    const double agree = rel_err(g_val, theta * (d.r * d.r));
    report.checks.push_back({"non-gsr-both-nonzero", both_nonzero && agree <= tol,
                             agree, tol, "G f = |x_q|^2 thetabar f, both away from zero"});
  }

  report.checks.push_back(gamma_identity.result("spherical-dirac-identity", 1e-12, "term-exact"));
  report.checks.push_back(kernel_equiv.result("global-operator-equivalence", tol, "100 points"));
  report.checks.push_back(vanish.result("monogenic-kernel-membership", tol));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

// ===================================================================
// Suite 13: GRAV invariance.
// ===================================================================

SuiteReport suite_grav(const SuiteOptions& opt) {
  SuiteReport report{"grav-invariance", false, {}};
  std::mt19937_64 rng(opt.seed);
  const SliceContext ctx(1, 2);
  const double tol_cocycle = 1e-10;
  const double tol_orbit = 1e-10;
  const double tol_fd = opt.tolerance.value_or(1e-6);
  const int max_deg = opt.max_degree > 0 ? opt.max_degree : 3;

  std::uniform_real_distribution<double> u(-1.2, 1.2);
  auto random_generator = [&](int which) {
    switch (which & 3) {
      case 0: return GravGenerator::translation({u(rng), u(rng)});
      case 1: return GravGenerator::inversion();
      case 2: return GravGenerator::modified_rotation(random_omega(rng, ctx));
      default: return GravGenerator::dilation(u(rng) > 0 ? 1.4 : -0.8);
    }
  };
  auto safe_point = [&](const VahlenMatrix& m) {
    while (true) {
      const Point x = random_point_in_ball(rng, ctx, {0.0, 0.0}, 1.6, 0.2);
      const Multivector den = m.c() * to_multivector(ctx, x) + m.d();
      if (den.norm() > 0.3 && to_multivector(ctx, x).norm() > 0.3) return x;
    }
  };

  {
    Tracker t;
    for (int rep = 0; rep < 50; ++rep) {
      const auto m = VahlenMatrix::from_generator(ctx, random_generator(rep));
      const auto n = VahlenMatrix::from_generator(ctx, random_generator(rep + 1));
      const auto mn = m * n;
      const Point x = safe_point(mn);
      const Point nx = mobius_apply(ctx, n, x);
      const Multivector lhs = jacobian_weight(ctx, n, x) * jacobian_weight(ctx, m, nx);
      const Multivector rhs = jacobian_weight(ctx, mn, x);
      t.feed(rel_err(lhs, rhs));
    }
    report.checks.push_back(t.result("cocycle", tol_cocycle, "50 points"));
  }

  {
    Tracker t;
    for (int g = 0; g < 4; ++g) {
      const auto m = VahlenMatrix::from_generator(ctx, random_generator(g));
      for (int orbit = 0; orbit < 10; ++orbit) {
        const Point x = safe_point(m);
        const auto d = decompose(ctx, x);
        std::vector<Point> images;
        for (int s = 0; s < 10; ++s)
          images.push_back(
              mobius_apply(ctx, m, compose(ctx, d.xp, d.r, random_omega(rng, ctx))));
        for (std::size_t i = 1; i < images.size(); ++i)
          t.feed(orbit_contains(ctx, images[0], images[i], tol_orbit) ? 0.0 : 1.0);
      }
    }
    report.checks.push_back(t.result("orbit-preservation", 0.0, "10 orbits x 10 samples"));
  }

  {
    Tracker t;
    for (int rep = 0; rep < 20; ++rep) {
      const Omega a = random_omega(rng, ctx);
      const Omega w = random_omega(rng, ctx);
      const Multivector am = a.to_multivector(ctx);
      const Multivector wm = w.to_multivector(ctx);
      const Multivector image = am * wm * am;
      t.feed(std::abs(image.norm() - 1.0));
      t.feed((image * image + Multivector::scalar(ctx.n(), 1.0)).max_abs_coefficient());
      t.feed(image.grade_part(1) == image ? 0.0 : 1.0);
    }
    report.checks.push_back(t.result("rotation-preserves-sphere", 1e-12));
  }

  {
    Tracker t;
    std::vector<VahlenMatrix> matrices;
    matrices.push_back(VahlenMatrix::from_generator(ctx, GravGenerator::translation({0.4, -0.3})));
    matrices.push_back(VahlenMatrix::from_generator(ctx, GravGenerator::inversion()));
    matrices.push_back(
        VahlenMatrix::from_generator(ctx, GravGenerator::modified_rotation(random_omega(rng, ctx))));
    matrices.push_back(VahlenMatrix::from_generator(ctx, GravGenerator::dilation(1.3)));
    for (int rep = 0; rep < 5; ++rep)
      matrices.push_back(VahlenMatrix::from_generator(ctx, random_generator(rep)) *
                         VahlenMatrix::from_generator(ctx, random_generator(rep + 2)));

    const auto stem = random_fueter_combination(rng, ctx, max_deg);
    auto f = [&](const Point& y) { return stem.induce(y); };
    for (const auto& m : matrices) {
      auto tf = [&](const Point& y) { return conformal_transform(ctx, m, f, y); };
      for (int pt = 0; pt < 6; ++pt) {
        const Point x = safe_point(m);
        t.feed(finite_difference_slice_dirac(ctx, tf, x).norm());
      }
    }
    report.checks.push_back(
        t.result("conformal-invariance", tol_fd, "4 generators + 5 compositions"));
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"clifford", suite_clifford},
      {"fueter-monogenicity", suite_fueter_monogenicity},
      {"fueter-recursion", suite_fueter_recursion},
      {"fueter-derivatives", suite_fueter_derivatives},
      {"ck-consistency", suite_ck},
      {"representation", suite_representation},
      {"gsr-bridge", suite_gsr_bridge},
      {"kernel", suite_kernel},
      {"cauchy", suite_cauchy},
      {"cauchy-pompeiu", suite_cauchy_pompeiu},
      {"laurent", suite_laurent},
      {"global-operators", suite_global_operators},
      {"grav-invariance", suite_grav},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw DomainError("unknown suite: " + name);
}

}  // namespace psmono
