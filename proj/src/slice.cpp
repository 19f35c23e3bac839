#include "psmono/slice.hpp"

#include <cmath>

namespace psmono {

double Point::norm() const {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Multivector to_multivector(const SliceContext& ctx, const Point& pt) {
  if (pt.dim() != ctx.ambient_dim()) throw DimensionError("point arity mismatch");
  return Multivector::paravector(ctx.n(), pt.x);
}

Point point_from_multivector(const SliceContext& ctx, const Multivector& m, double tol) {
  if (m.generators() != ctx.n()) throw DimensionError("algebra mismatch");
  return Point(m.paravector_coords(tol));
}

Omega::Omega(const SliceContext& ctx, std::vector<double> components, double tol)
    : c_(std::move(components)) {
  if (static_cast<int>(c_.size()) != ctx.q)
    throw DimensionError("omega needs q components");
  double nsq = 0.0;
  for (double v : c_) nsq += v * v;
  if (std::abs(nsq - 1.0) > tol) throw DomainError("omega must be a unit 1-vector");
}

Multivector Omega::to_multivector(const SliceContext& ctx) const {
  Multivector m(ctx.n());
  for (int i = 0; i < q(); ++i) m.at(Blade{1} << (ctx.p + i)) = c_[static_cast<std::size_t>(i)];
  return m;
}

Omega Omega::negated() const {
  Omega o = *this;
  for (auto& v : o.c_) v = -v;
  return o;
}

Omega Omega::axis(const SliceContext& ctx, int i) {
  if (i < 0 || i >= ctx.q) throw DomainError("axis index out of range");
  std::vector<double> c(static_cast<std::size_t>(ctx.q), 0.0);
  c[static_cast<std::size_t>(i)] = 1.0;
  return Omega(ctx, std::move(c));
}

SliceDecomposition decompose(const SliceContext& ctx, const Point& x) {
  if (x.dim() != ctx.ambient_dim()) throw DimensionError("point arity mismatch");
  SliceDecomposition d;
  d.xp.assign(x.x.begin(), x.x.begin() + ctx.p + 1);
  double nsq = 0.0;
  for (int i = ctx.p + 1; i <= ctx.n(); ++i) nsq += x[i] * x[i];
  d.r = std::sqrt(nsq);
  if (d.r > 0.0) {
    std::vector<double> comps(static_cast<std::size_t>(ctx.q));
    for (int i = 0; i < ctx.q; ++i) comps[static_cast<std::size_t>(i)] = x[ctx.p + 1 + i] / d.r;
    d.omega = Omega(ctx, std::move(comps), 1e-9);
  }
  return d;
}

Point compose(const SliceContext& ctx, const std::vector<double>& xp, double r,
              const Omega& omega) {
  if (static_cast<int>(xp.size()) != ctx.p + 1) throw DimensionError("xp needs p+1 entries");
  if (r < 0.0) throw DomainError("radial coordinate must be nonnegative");
  Point out(std::vector<double>(static_cast<std::size_t>(ctx.ambient_dim()), 0.0));
  for (int i = 0; i <= ctx.p; ++i) out[i] = xp[static_cast<std::size_t>(i)];
  for (int i = 0; i < ctx.q; ++i) out[ctx.p + 1 + i] = r * omega.component(i);
  return out;
}

Point compose(const SliceContext& ctx, const SliceDecomposition& d) {
  if (!d.omega) {
    if (d.r != 0.0) throw DomainError("r > 0 requires an omega");
    Point out(std::vector<double>(static_cast<std::size_t>(ctx.ambient_dim()), 0.0));
    for (int i = 0; i <= ctx.p; ++i) out[i] = d.xp[static_cast<std::size_t>(i)];
    return out;
  }
  return compose(ctx, d.xp, d.r, *d.omega);
}

bool orbit_contains(const SliceContext& ctx, const Point& x, const Point& y, double rel_tol) {
  const auto dx = decompose(ctx, x);
  const auto dy = decompose(ctx, y);
  const double scale = 1.0 + x.norm();
  for (int i = 0; i <= ctx.p; ++i)
    if (std::abs(dx.xp[static_cast<std::size_t>(i)] - dy.xp[static_cast<std::size_t>(i)]) >
        rel_tol * scale)
      return false;
  return std::abs(dx.r - dy.r) <= rel_tol * scale;
}

PlaneDomain PlaneDomain::disk(const SliceContext& ctx, std::vector<double> center,
                              double radius) {
  if (static_cast<int>(center.size()) != ctx.p + 1)
    throw DimensionError("disk center lives on R^{p+1}");
  if (radius <= 0.0) throw DomainError("disk radius must be positive");
  return PlaneDomain([center = std::move(center), radius](const SlicePoint& s) {
    double d2 = s.r * s.r;
    for (std::size_t i = 0; i < center.size(); ++i) {
      const double diff = s.xp[i] - center[i];
      d2 += diff * diff;
    }
    return d2 < radius * radius;
  });
}

PlaneDomain PlaneDomain::custom(const SliceContext& ctx, Predicate pred) {
  // Spot-check the reflection invariance; a full proof is undecidable for a
  // black-box predicate.
  const double probes[] = {0.0, 0.3, 1.0, 2.5};
  for (double r : probes) {
    SlicePoint s{std::vector<double>(static_cast<std::size_t>(ctx.p + 1), 0.25), r};
    if (pred(s) != pred(reflect(s)))
      throw DomainError("plane domain is not reflection invariant");
  }
  return PlaneDomain(std::move(pred));
}

bool p_symmetric_completion_contains(const SliceContext& ctx, const PlaneDomain& d,
                                     const Point& x) {
  return d.contains(decompose(ctx, x).slice_point());
}

DomainDescriptor DomainDescriptor::ball(const SliceContext& ctx, std::vector<double> center,
                                        double radius) {
  if (static_cast<int>(center.size()) != ctx.p + 1)
    throw DomainError("p-symmetric ball centers live on R^{p+1}");
  if (radius <= 0.0) throw DomainError("ball radius must be positive");
  const int dim = ctx.ambient_dim();
  auto pred = [center = std::move(center), radius, dim](const Point& x) {
    if (x.dim() != dim) return false;
    double d2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double c = i < static_cast<int>(center.size()) ? center[static_cast<std::size_t>(i)]
                                                           : 0.0;
      const double diff = x[i] - c;
      d2 += diff * diff;
    }
    return d2 < radius * radius;
  };
  return DomainDescriptor(Kind::Ball, std::move(pred), true, true);
}

DomainDescriptor DomainDescriptor::annulus(const SliceContext& ctx, double rho1, double rho2) {
  if (!(0.0 <= rho1 && rho1 < rho2)) throw DomainError("annulus needs 0 <= rho1 < rho2");
  const int dim = ctx.ambient_dim();
  auto pred = [rho1, rho2, dim](const Point& x) {
    if (x.dim() != dim) return false;
    const double n = x.norm();
    return rho1 < n && n < rho2;
  };
  // Slice iff the annulus meets R^{p+1}, which it always does (rho1 < |x_p| < rho2
  // is nonempty); each plane section is an annulus, hence connected for p >= 1
  // and two-sided only through the disk complement -- asserted, not verified.
  return DomainDescriptor(Kind::Annulus, std::move(pred), true, true);
}

DomainDescriptor DomainDescriptor::complement_of_axis(const SliceContext& ctx) {
  auto pred = [ctx](const Point& x) { return decompose(ctx, x).r > 0.0; };
  return DomainDescriptor(Kind::ComplementOfAxis, std::move(pred), false, true);
}

DomainDescriptor DomainDescriptor::half_space_union(const SliceContext& ctx, Omega omega) {
  auto pred = [ctx, omega = std::move(omega)](const Point& x) {
    const auto d = decompose(ctx, x);
    if (d.r == 0.0) return true;
    // x lies in H_omega or H_{-omega} iff its direction is parallel to omega.
    double dot = 0.0;
    for (int i = 0; i < ctx.q; ++i) dot += d.omega->component(i) * omega.component(i);
    return std::abs(std::abs(dot) - 1.0) <= 1e-12;
  };
  return DomainDescriptor(Kind::HalfSpaceUnion, std::move(pred), true, false);
}

DomainDescriptor DomainDescriptor::custom(const SliceContext&,
                                          std::function<bool(const Point&)> pred,
                                          bool is_slice, bool is_p_symmetric) {
  return DomainDescriptor(Kind::Custom, std::move(pred), is_slice, is_p_symmetric);
}

}  // namespace psmono
