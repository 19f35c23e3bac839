#include "psmono/quadrature.hpp"

#include <cmath>
#include <random>

namespace psmono {

namespace {

constexpr int kDefaultCircleNodes = 64;
constexpr int kDefaultPolarNodes = 32;
constexpr int kDefaultAzimuthNodes = 64;
constexpr int kDefaultRadialNodes = 32;

const double kPi = std::acos(-1.0);

}  // namespace

GaussLegendre gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre needs at least one node");
  GaussLegendre out;
  out.nodes.resize(static_cast<std::size_t>(n));
  out.weights.resize(static_cast<std::size_t>(n));
  // Newton iteration on P_n from the Chebyshev initial guess; standard
  // symmetric construction on [-1, 1].
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[static_cast<std::size_t>(i)] = x;
    out.nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
    out.weights[static_cast<std::size_t>(i)] = w;
    out.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    out.nodes[static_cast<std::size_t>(i)] = mid + half * out.nodes[static_cast<std::size_t>(i)];
    out.weights[static_cast<std::size_t>(i)] *= half;
  }
  return out;
}

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (const auto& node : nodes_) s += node.weight;
  return s;
}

Point QuadratureRule::full_point(const QuadratureNode& node) const {
  Point out(std::vector<double>(static_cast<std::size_t>(ctx_.ambient_dim()), 0.0));
  for (int i = 0; i <= ctx_.p; ++i) out[i] = node.slice_coords[static_cast<std::size_t>(i)];
  const double s = node.slice_coords[static_cast<std::size_t>(ctx_.p + 1)];
  for (int i = 0; i < ctx_.q; ++i) out[ctx_.p + 1 + i] = s * eta_.component(i);
  return out;
}

Multivector QuadratureRule::normal_multivector(const QuadratureNode& node) const {
  Multivector n(ctx_.n());
  n.at(0) = node.normal[0];
  for (int i = 1; i <= ctx_.p; ++i)
    n.at(Blade{1} << (i - 1)) = node.normal[static_cast<std::size_t>(i)];
  const double s = node.normal[static_cast<std::size_t>(ctx_.p + 1)];
  Multivector out = n;
  out.add_scaled(eta_.to_multivector(ctx_), s);
  return out;
}

namespace {

void check_center(const SliceContext& ctx, const std::vector<double>& center) {
  if (static_cast<int>(center.size()) != ctx.p + 1)
    throw DimensionError("sphere centers live on R^{p+1}");
}

// Unit directions and weights for the unit sphere S^{p+1} in the slice
// plane, deterministic product rules for p in {0, 1}.
std::vector<std::pair<std::vector<double>, double>> unit_sphere_nodes(int p, int resolution) {
  std::vector<std::pair<std::vector<double>, double>> out;
  if (p == 0) {
    const int n = resolution > 0 ? resolution : kDefaultCircleNodes;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * kPi * j / n;
      out.push_back({{std::cos(theta), std::sin(theta)}, 2.0 * kPi / n});
    }
    return out;
  }
  if (p == 1) {
    const int ntheta = resolution > 0 ? resolution : kDefaultPolarNodes;
    const int nphi = resolution > 0 ? 2 * resolution : kDefaultAzimuthNodes;
    const auto gl = gauss_legendre(ntheta, -1.0, 1.0);
    out.reserve(static_cast<std::size_t>(ntheta * nphi));
    for (int i = 0; i < ntheta; ++i) {
      const double ct = gl.nodes[static_cast<std::size_t>(i)];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int j = 0; j < nphi; ++j) {
        const double phi = 2.0 * kPi * j / nphi;
        out.push_back({{st * std::cos(phi), st * std::sin(phi), ct},
                       gl.weights[static_cast<std::size_t>(i)] * 2.0 * kPi / nphi});
      }
    }
    return out;
  }
  throw DomainError("deterministic boundary rules cover p in {0, 1}; use the Monte Carlo rule");
}

}  // namespace

QuadratureRule boundary_rule(const SliceContext& ctx, const Omega& eta,
                             std::vector<double> center, double radius, int resolution) {
  check_center(ctx, center);
  if (radius <= 0.0) throw DomainError("sphere radius must be positive");
  const auto unit = unit_sphere_nodes(ctx.p, resolution);
  const double spacing =
      ctx.p == 0 ? 2.0 * kPi * radius / static_cast<double>(unit.size())
                 : kPi * radius / (resolution > 0 ? resolution : kDefaultPolarNodes);
  QuadratureRule rule(ctx, eta, QuadratureRule::Kind::BoundarySphere, center, radius, spacing);
  const double scale = std::pow(radius, ctx.p + 1);
  const int d = ctx.p + 2;
  for (const auto& [u, w] : unit) {
    QuadratureNode node;
    node.slice_coords.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d - 1; ++i)
      node.slice_coords[static_cast<std::size_t>(i)] =
          center[static_cast<std::size_t>(i)] + radius * u[static_cast<std::size_t>(i)];
    node.slice_coords[static_cast<std::size_t>(d - 1)] =
        radius * u[static_cast<std::size_t>(d - 1)];
    node.normal = u;
    node.weight = w * scale;
    rule.nodes().push_back(std::move(node));
  }
  return rule;
}

QuadratureRule boundary_rule_monte_carlo(const SliceContext& ctx, const Omega& eta,
                                         std::vector<double> center, double radius, int count,
                                         std::uint64_t seed) {
  check_center(ctx, center);
  if (count < 1) throw DomainError("node count must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = ctx.p + 2;
  const double area = sigma(ctx.p) * std::pow(radius, ctx.p + 1);
  QuadratureRule rule(ctx, eta, QuadratureRule::Kind::BoundarySphere, center, radius,
                      radius * std::pow(area / count, 1.0 / (d - 1)), /*monte_carlo=*/true);
  for (int k = 0; k < count; ++k) {
    std::vector<double> u(static_cast<std::size_t>(d));
    double nrm = 0.0;
    do {
      nrm = 0.0;
      for (auto& v : u) {
        v = gauss(rng);
        nrm += v * v;
      }
    } while (nrm == 0.0);
    nrm = std::sqrt(nrm);
    for (auto& v : u) v /= nrm;
    QuadratureNode node;
    node.slice_coords.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d - 1; ++i)
      node.slice_coords[static_cast<std::size_t>(i)] =
          center[static_cast<std::size_t>(i)] + radius * u[static_cast<std::size_t>(i)];
    node.slice_coords[static_cast<std::size_t>(d - 1)] =
        radius * u[static_cast<std::size_t>(d - 1)];
    node.normal = u;
    node.weight = area / count;
    rule.nodes().push_back(std::move(node));
  }
  return rule;
}

QuadratureRule solid_rule(const SliceContext& ctx, const Omega& eta,
                          std::vector<double> center, double radius, std::vector<double> pole,
                          int radial, int angular) {
  check_center(ctx, center);
  const int d = ctx.p + 2;
  if (static_cast<int>(pole.size()) != d)
    throw DimensionError("pole needs slice coordinates (x_p, s)");
  if (radial <= 0) radial = kDefaultRadialNodes;

  // Distance from the pole to the center (last pole coordinate sticks out of
  // R^{p+1}).
  std::vector<double> offset(static_cast<std::size_t>(d), 0.0);
  double off2 = 0.0;
  for (int i = 0; i < d; ++i) {
    const double c = i < d - 1 ? center[static_cast<std::size_t>(i)] : 0.0;
    offset[static_cast<std::size_t>(i)] = pole[static_cast<std::size_t>(i)] - c;
    off2 += offset[static_cast<std::size_t>(i)] * offset[static_cast<std::size_t>(i)];
  }
  if (off2 >= radius * radius) throw DomainError("pole must lie inside the ball");

  const auto unit = unit_sphere_nodes(ctx.p, angular);
  const auto gl = gauss_legendre(radial, 0.0, 1.0);
  QuadratureRule rule(ctx, eta, QuadratureRule::Kind::SolidBall, center, radius,
                      radius / radial);
  for (const auto& [u, w] : unit) {
    // Ray from the pole along u hits the sphere at t = -<off,u> + sqrt(...).
    double proj = 0.0;
    for (int i = 0; i < d; ++i) proj += offset[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    const double reach = -proj + std::sqrt(proj * proj + radius * radius - off2);
    for (int j = 0; j < radial; ++j) {
      const double t = reach * gl.nodes[static_cast<std::size_t>(j)];
      QuadratureNode node;
      node.slice_coords.resize(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        node.slice_coords[static_cast<std::size_t>(i)] =
            pole[static_cast<std::size_t>(i)] + t * u[static_cast<std::size_t>(i)];
      node.weight = w * gl.weights[static_cast<std::size_t>(j)] * reach *
                    std::pow(t, d - 1);
      rule.nodes().push_back(std::move(node));
    }
  }
  return rule;
}

namespace {

void interior_guard(const QuadratureRule& rule, const Point& x) {
  if (rule.kind() != QuadratureRule::Kind::BoundarySphere)
    throw DomainError("reproduction integrals run over boundary rules");
  const auto& ctx = rule.context();
  if (x.dim() != ctx.ambient_dim()) throw DimensionError("point arity mismatch");
  double d2 = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const double c = i <= ctx.p ? rule.center()[static_cast<std::size_t>(i)] : 0.0;
    d2 += (x[i] - c) * (x[i] - c);
  }
  const double dist = std::sqrt(d2);
  if (dist >= rule.radius() - 3.0 * rule.spacing())
    throw ConditioningError("evaluation point too close to the integration sphere");
}

}  // namespace

Multivector cauchy_integral(std::span<const Multivector> f_nodes, const QuadratureRule& rule,
                            const Point& x) {
  interior_guard(rule, x);
  const auto& ctx = rule.context();
  if (f_nodes.size() != rule.nodes().size())
    throw DimensionError("one integrand value per node expected");
  Multivector acc(ctx.n());
  for (std::size_t i = 0; i < f_nodes.size(); ++i) {
    const auto& node = rule.nodes()[i];
    const Point y = rule.full_point(node);
    const Multivector kernel = slice_cauchy_kernel(ctx, y, x, Side::Left);
    acc.add_scaled(kernel * rule.normal_multivector(node) * f_nodes[i], node.weight);
  }
  return acc;
}

Multivector cauchy_integral(const Evaluator& f, const QuadratureRule& rule, const Point& x) {
  std::vector<Multivector> values;
  values.reserve(rule.nodes().size());
  for (const auto& node : rule.nodes()) values.push_back(f(rule.full_point(node)));
  return cauchy_integral(values, rule, x);
}

MonteCarloIntegral cauchy_integral_with_error(const Evaluator& f, const QuadratureRule& rule,
                                              const Point& x) {
  interior_guard(rule, x);
  const auto& ctx = rule.context();
  const std::size_t n = rule.nodes().size();
  std::vector<Multivector> contributions;
  contributions.reserve(n);
  Multivector total(ctx.n());
  for (const auto& node : rule.nodes()) {
    const Point y = rule.full_point(node);
    Multivector g = slice_cauchy_kernel(ctx, y, x, Side::Left) *
                    rule.normal_multivector(node) * f(y);
    total.add_scaled(g, node.weight);
    contributions.push_back(std::move(g));
  }
  double std_error = 0.0;
  if (rule.monte_carlo() && n > 1) {
    Multivector mean(ctx.n());
    for (const auto& g : contributions) mean.add_scaled(g, 1.0 / static_cast<double>(n));
    double var = 0.0;
    for (const auto& g : contributions) {
      const double d = (g - mean).norm();
      var += d * d;
    }
    const double area = rule.weight_sum();
    std_error = area * std::sqrt(var / (static_cast<double>(n) * (static_cast<double>(n) - 1)));
  }
  return {std::move(total), std_error};
}

Multivector cauchy_pompeiu(const StemPolynomial& stem, const QuadratureRule& boundary,
                           const QuadratureRule& solid, const Point& x) {
  const auto& ctx = boundary.context();
  Multivector out = cauchy_integral([&](const Point& y) { return stem.induce(y); }, boundary, x);

  // D_eta f on the slice plane of the rule; the slice function F1 + eta F2 is
  // valid for both signs of the slice coordinate.
  const auto d_eta_f = slice_dirac(stem.slice_function(solid.eta()), solid.eta());
  for (const auto& node : solid.nodes()) {
    const Point y = solid.full_point(node);
    if (near_pole_orbit(ctx, y, x)) continue;  // measure-zero polar node
    const Multivector kernel = slice_cauchy_kernel(ctx, y, x, Side::Left);
    out.add_scaled(kernel * d_eta_f.evaluate(node.slice_coords), -node.weight);
  }
  return out;
}

LaurentCoefficients laurent_coefficients(const Evaluator& f, const QuadratureRule& rule,
                                         int max_k) {
  const auto& ctx = rule.context();
  if (rule.kind() != QuadratureRule::Kind::BoundarySphere)
    throw DomainError("Laurent pairings run over boundary rules");

  std::vector<Multivector> nf;  // n(y) f(y), cached once per node
  nf.reserve(rule.nodes().size());
  for (const auto& node : rule.nodes())
    nf.push_back(rule.normal_multivector(node) * f(rule.full_point(node)));

  LaurentCoefficients out;
  for (const auto& k : multi_indices(ctx.p + 1, max_k, /*cumulative=*/true)) {
    const auto q = q_kernel(ctx, k, rule.eta());
    const auto pr = fueter_polynomial(ctx, k, rule.eta(), Side::Right).poly;
    Multivector a(ctx.n());
    Multivector b(ctx.n());
    for (std::size_t i = 0; i < nf.size(); ++i) {
      const auto& node = rule.nodes()[i];
      a.add_scaled(q.evaluate(node.slice_coords) * nf[i], node.weight);
      b.add_scaled(pr.evaluate(node.slice_coords) * nf[i], node.weight);
    }
    out.regular.emplace(k, std::move(a));
    out.principal.emplace(k, std::move(b));
  }
  return out;
}

MaxModulusReport max_modulus_scan(const Evaluator& f, const SliceContext& ctx,
                                  const std::vector<double>& center, double radius,
                                  int grid_per_axis, int boundary_samples,
                                  std::uint64_t seed) {
  check_center(ctx, center);
  const int dim = ctx.ambient_dim();
  MaxModulusReport report;
  report.interior_argmax = Point(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
  report.boundary_argmax = report.interior_argmax;

  std::vector<double> c(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i <= ctx.p; ++i) c[static_cast<std::size_t>(i)] = center[static_cast<std::size_t>(i)];

  // Interior lattice: grid_per_axis points per axis over the bounding cube,
  // keeping points strictly inside the ball.
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  const int g = std::max(2, grid_per_axis);
  while (true) {
    Point pt(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    double d2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double t = -1.0 + 2.0 * idx[static_cast<std::size_t>(i)] / (g - 1);
      pt[i] = c[static_cast<std::size_t>(i)] + 0.98 * radius * t;
      d2 += (pt[i] - c[static_cast<std::size_t>(i)]) * (pt[i] - c[static_cast<std::size_t>(i)]);
    }
    if (d2 < radius * radius * 0.98 * 0.98) {
      const double v = f(pt).norm();
      ++report.interior_samples;
      if (v > report.interior_max) {
        report.interior_max = v;
        report.interior_argmax = pt;
      }
    }
    int axis = 0;
    while (axis < dim && ++idx[static_cast<std::size_t>(axis)] == g) {
      idx[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == dim) break;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < boundary_samples; ++k) {
    std::vector<double> u(static_cast<std::size_t>(dim));
    double nrm = 0.0;
    do {
      nrm = 0.0;
      for (auto& v : u) {
        v = gauss(rng);
        nrm += v * v;
      }
    } while (nrm == 0.0);
    nrm = std::sqrt(nrm);
    Point pt(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    for (int i = 0; i < dim; ++i)
      pt[i] = c[static_cast<std::size_t>(i)] + radius * u[static_cast<std::size_t>(i)] / nrm;
    const double v = f(pt).norm();
    ++report.boundary_samples;
    if (v > report.boundary_max) {
      report.boundary_max = v;
      report.boundary_argmax = pt;
    }
  }
  report.boundary_dominates = report.boundary_max >= report.interior_max;
  return report;
}

}  // namespace psmono
