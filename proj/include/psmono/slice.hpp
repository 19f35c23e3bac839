#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psmono/multivector.hpp"

namespace psmono {

/// The (p, q) splitting of R^{p+q+1}: coordinates x_0..x_p stay on the
/// paravector axis R^{p+1}, the trailing q coordinates carry the slices.
struct SliceContext {
  int p;
  int q;

  SliceContext(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 1) throw DomainError("slice context needs p >= 0 and q >= 1");
    if (p + q > kMaxGenerators) throw DomainError("p + q exceeds the algebra cap");
  }
  int n() const { return p + q; }
  /// Dimension of the ambient space R^{p+q+1}.
  int ambient_dim() const { return p + q + 1; }
  /// Dimension of a slice plane R^{p+2}.
  int slice_dim() const { return p + 2; }

  friend bool operator==(SliceContext a, SliceContext b) { return a.p == b.p && a.q == b.q; }
};

/// A point of R^{p+q+1}, identified with the paravector sum x_i e_i.
struct Point {
  std::vector<double> x;

  Point() = default;
  explicit Point(std::vector<double> coords) : x(std::move(coords)) {}
  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
  int dim() const { return static_cast<int>(x.size()); }
  double norm() const;
};

Multivector to_multivector(const SliceContext& ctx, const Point& pt);
Point point_from_multivector(const SliceContext& ctx, const Multivector& m, double tol = 1e-12);

/// Unit 1-vector supported on e_{p+1}..e_{p+q}; an element of the sphere S.
class Omega {
 public:
  Omega(const SliceContext& ctx, std::vector<double> components, double tol = 1e-12);

  /// The i-th trailing component, i in [0, q): the coefficient of e_{p+1+i}.
  double component(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& components() const { return c_; }
  int q() const { return static_cast<int>(c_.size()); }

  Multivector to_multivector(const SliceContext& ctx) const;
  Omega negated() const;

  /// e_{p+1+i} as an element of the sphere.
  static Omega axis(const SliceContext& ctx, int i = 0);

  friend bool operator==(const Omega& a, const Omega& b) { return a.c_ == b.c_; }

 private:
  std::vector<double> c_;
};

/// A point of the slice plane: the pair x' = (x_p, r).
struct SlicePoint {
  std::vector<double> xp;  // p+1 coordinates
  double r = 0.0;
};

/// (x_p, r) -> (x_p, -r); an involution.
inline SlicePoint reflect(SlicePoint s) {
  s.r = -s.r;
  return s;
}

struct SliceDecomposition {
  std::vector<double> xp;       // coordinates 0..p
  double r = 0.0;               // |trailing part|
  std::optional<Omega> omega;   // absent exactly when r == 0

  SlicePoint slice_point() const { return {xp, r}; }
};

SliceDecomposition decompose(const SliceContext& ctx, const Point& x);
Point compose(const SliceContext& ctx, const std::vector<double>& xp, double r,
              const Omega& omega);
/// compose() for a decomposition that may lack an omega (r == 0).
Point compose(const SliceContext& ctx, const SliceDecomposition& d);

/// True when y lies on the orbit [x] = x_p + r S (tolerance relative).
bool orbit_contains(const SliceContext& ctx, const Point& x, const Point& y,
                    double rel_tol = 1e-12);

// ------------------------------------------------------------------ domains

/// Reflection-invariant subset of the slice plane R^{p+2}; the base D of a
/// p-symmetric completion. Custom predicates are spot-checked for the
/// reflection invariance on a handful of sample points.
class PlaneDomain {
 public:
  using Predicate = std::function<bool(const SlicePoint&)>;

  /// Open disk |x' - (center, 0)| < radius, center on R^{p+1}.
  static PlaneDomain disk(const SliceContext& ctx, std::vector<double> center, double radius);
  static PlaneDomain custom(const SliceContext& ctx, Predicate pred);

  bool contains(const SlicePoint& s) const { return pred_(s); }

 private:
  PlaneDomain(Predicate pred) : pred_(std::move(pred)) {}
  Predicate pred_;
};

bool p_symmetric_completion_contains(const SliceContext& ctx, const PlaneDomain& d,
                                     const Point& x);

/// Descriptor of a domain in R^{p+q+1}: a membership predicate plus the
/// sliceness / p-symmetry metadata asserted at construction.
class DomainDescriptor {
 public:
  enum class Kind { Ball, Annulus, ComplementOfAxis, HalfSpaceUnion, Custom };

  /// Open ball of the given radius centered on R^{p+1}; p-symmetric and slice.
  static DomainDescriptor ball(const SliceContext& ctx, std::vector<double> center,
                               double radius);
  /// Open annulus rho1 < |x| < rho2 about the origin.
  static DomainDescriptor annulus(const SliceContext& ctx, double rho1, double rho2);
  /// R^{p+q+1} minus the axis R^{p+1}.
  static DomainDescriptor complement_of_axis(const SliceContext& ctx);
  /// H_omega united with H_{-omega}.
  static DomainDescriptor half_space_union(const SliceContext& ctx, Omega omega);
  static DomainDescriptor custom(const SliceContext& ctx,
                                 std::function<bool(const Point&)> pred, bool is_slice,
                                 bool is_p_symmetric);

  bool contains(const Point& x) const { return pred_(x); }
  bool is_slice_domain() const { return is_slice_; }
  bool is_p_symmetric() const { return is_p_symmetric_; }
  Kind kind() const { return kind_; }

 private:
  DomainDescriptor(Kind k, std::function<bool(const Point&)> pred, bool slice, bool sym)
      : kind_(k), pred_(std::move(pred)), is_slice_(slice), is_p_symmetric_(sym) {}

  Kind kind_;
  std::function<bool(const Point&)> pred_;
  bool is_slice_;
  bool is_p_symmetric_;
};

}  // namespace psmono
