#pragma once

#include <functional>

#include "psmono/kernel.hpp"

namespace psmono {

/// Nodes and weights of a Gauss-Legendre rule on [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n, double a = -1.0, double b = 1.0);

struct QuadratureNode {
  std::vector<double> slice_coords;  // (x_0..x_p, s), s signed
  std::vector<double> normal;        // unit exterior normal, boundary rules only
  double weight;
};

// Quadrature over a sphere or ball inside one slice plane R^{p+2}. Nodes are
// stored in slice coordinates; the rule knows which eta embeds them back
// into R^{p+q+1}.
class QuadratureRule {
 public:
  enum class Kind { BoundarySphere, SolidBall };

  QuadratureRule(SliceContext ctx, Omega eta, Kind kind, std::vector<double> center,
                 double radius, double spacing, bool monte_carlo = false)
      : ctx_(ctx), eta_(std::move(eta)), kind_(kind), center_(std::move(center)),
        radius_(radius), spacing_(spacing), monte_carlo_(monte_carlo) {}

  const SliceContext& context() const { return ctx_; }
  const Omega& eta() const { return eta_; }
  Kind kind() const { return kind_; }
  double radius() const { return radius_; }
  const std::vector<double>& center() const { return center_; }
  /// Representative node spacing, for the interior-distance guard.
  double spacing() const { return spacing_; }
  bool monte_carlo() const { return monte_carlo_; }

  std::vector<QuadratureNode>& nodes() { return nodes_; }
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }

  double weight_sum() const;
  Point full_point(const QuadratureNode& node) const;
  Multivector normal_multivector(const QuadratureNode& node) const;

 private:
  SliceContext ctx_;
  Omega eta_;
  Kind kind_;
  std::vector<double> center_;  // p+1 coordinates on R^{p+1}
  double radius_;
  double spacing_;
  bool monte_carlo_;
  std::vector<QuadratureNode> nodes_;
};

/// Boundary sphere rule in the slice of eta: trapezoid on the circle for
/// p = 0, Gauss-Legendre x trapezoid on S^2 for p = 1. Other p need the
/// Monte Carlo builder.
QuadratureRule boundary_rule(const SliceContext& ctx, const Omega& eta,
                             std::vector<double> center, double radius,
                             int resolution = 0 /* 0 = module default */);

/// Uniform random boundary rule for any p, weights sum to the sphere area.
QuadratureRule boundary_rule_monte_carlo(const SliceContext& ctx, const Omega& eta,
                                         std::vector<double> center, double radius,
                                         int count, std::uint64_t seed);

/// Solid ball rule, polar about `pole` (slice coordinates). Radial
/// Gauss-Legendre along each ray up to the exact boundary distance; the
/// polar Jacobian absorbs the Cauchy kernel singularity at the pole. Pass
/// the ball center as the pole for a plain centered rule.
QuadratureRule solid_rule(const SliceContext& ctx, const Omega& eta,
                          std::vector<double> center, double radius,
                          std::vector<double> pole, int radial = 0, int angular = 0);

using Evaluator = std::function<Multivector(const Point&)>;

/// Reproduction integral: sum of w * E_y(x) n(y) f(y) over the boundary
/// nodes. Throws ConditioningError when x is outside or within three node
/// spacings of the surface.
Multivector cauchy_integral(const Evaluator& f, const QuadratureRule& rule, const Point& x);

/// Same, with f already evaluated at the rule's nodes.
Multivector cauchy_integral(std::span<const Multivector> f_nodes, const QuadratureRule& rule,
                            const Point& x);

struct MonteCarloIntegral {
  Multivector value;
  double std_error;  // sample-based estimate; 0 for deterministic rules
};

/// Reproduction integral with the Monte Carlo standard error of the node
/// contributions (coefficient-norm based).
MonteCarloIntegral cauchy_integral_with_error(const Evaluator& f, const QuadratureRule& rule,
                                              const Point& x);

/// Boundary term minus the solid integral of E_y(x) (D_eta f)(y) for a stem
/// function; reproduces the induced value at interior points.
Multivector cauchy_pompeiu(const StemPolynomial& stem, const QuadratureRule& boundary,
                           const QuadratureRule& solid, const Point& x);

struct LaurentCoefficients {
  std::map<MultiIndex, Multivector> regular;    // a_k, pairing against Q_{eta,k}
  std::map<MultiIndex, Multivector> principal;  // b_k, pairing against P^R_{eta,k}
};

/// Boundary pairings over the slice sphere of the rule.
LaurentCoefficients laurent_coefficients(const Evaluator& f, const QuadratureRule& rule,
                                         int max_k);

struct MaxModulusReport {
  double interior_max = 0.0;
  Point interior_argmax;
  double boundary_max = 0.0;
  Point boundary_argmax;
  bool boundary_dominates = false;
  std::size_t interior_samples = 0;
  std::size_t boundary_samples = 0;
};

/// Sample |f| on an interior grid of the ball and on boundary points and
/// report where the maximum sits. A demo-grade scan, not a proof.
MaxModulusReport max_modulus_scan(const Evaluator& f, const SliceContext& ctx,
                                  const std::vector<double>& center, double radius,
                                  int grid_per_axis, int boundary_samples,
                                  std::uint64_t seed = 0);

}  // namespace psmono
