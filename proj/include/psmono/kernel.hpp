#pragma once

#include "psmono/fueter.hpp"

namespace psmono {

/// Surface area of the unit sphere S^{p+1} in R^{p+2}.
double sigma(int p);

// Finite sum of terms P(x') rho^{-m} on the slice plane, where rho^2 is the
// squared distance to the origin of R^{p+2}. Closed under the partial
// derivatives d/dx_i and d/dr, which is what makes the derivative kernels
// expressible exactly.
class KernelExpr {
 public:
  struct Term {
    CliffordPolynomial numerator;  // slice polynomial
    int m;                         // positive exponent of rho^{-1}
  };

  explicit KernelExpr(SliceContext ctx) : ctx_(ctx) {}

  const SliceContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(CliffordPolynomial numerator, int m);

  KernelExpr& operator+=(const KernelExpr& o);
  friend KernelExpr operator+(KernelExpr a, const KernelExpr& b) { return a += b; }
  KernelExpr left_multiplied(const Multivector& c) const;
  KernelExpr right_multiplied(const Multivector& c) const;
  KernelExpr scaled(double s) const;

  /// d/dvar of the whole expression; var indexes (x_0..x_p, r).
  KernelExpr derivative(int var) const;
  KernelExpr partial(const MultiIndex& k) const;

  /// Slice operator of eta applied from the left (termwise derivative rule).
  KernelExpr slice_dirac_applied(const Omega& eta) const;
  /// Right-acting variant.
  KernelExpr slice_dirac_right_applied(const Omega& eta) const;

  /// Merge terms sharing the same rho exponent.
  KernelExpr collected() const;
  /// True when the expression collapses to zero over the common denominator.
  bool symbolically_zero(double tol = 1e-12) const;

  /// Value at x' = (x_0..x_p, r); undefined (throws) at the origin.
  Multivector evaluate(std::span<const double> slice_coords) const;

 private:
  SliceContext ctx_;
  std::vector<Term> terms_;
};

/// E restricted to the plane of eta, as a kernel expression with seed
/// exponent p+2.
KernelExpr cauchy_kernel_expr(const SliceContext& ctx, const Omega& eta);

/// E(x) = conj(x) / (sigma(p) |x|^{p+2}) on R^{p+q+1} minus the origin.
Multivector cauchy_kernel(const SliceContext& ctx, const Point& x);

/// Q_{eta,k} = ((-1)^{|k|}/k!) partial_k E on the slice of eta.
KernelExpr q_kernel(const SliceContext& ctx, const MultiIndex& k, const Omega& eta);

/// The slice-independent Q_k at a full point (two-point combination;
/// eta defaults to the first trailing axis, the value is eta-independent).
Multivector q_full(const SliceContext& ctx, const MultiIndex& k, const Point& x,
                   const std::optional<Omega>& eta = std::nullopt);

/// True when x lies on the orbit of y within the pole-detection tolerance.
bool near_pole_orbit(const SliceContext& ctx, const Point& y, const Point& x,
                     double rel_tol = 1e-12);

/// The generalized partial-slice Cauchy kernel with pole orbit [y],
/// evaluated at x. Left and right variants.
Multivector slice_cauchy_kernel(const SliceContext& ctx, const Point& y, const Point& x,
                                Side side = Side::Left);

}  // namespace psmono
