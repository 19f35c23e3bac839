#pragma once

#include <string>

#include "psmono/quadrature.hpp"

namespace psmono {

/// One generator of the p-symmetry-preserving Möbius subgroup.
struct GravGenerator {
  enum class Kind { Translation, Inversion, ModifiedRotation, Dilation };

  Kind kind;
  std::vector<double> shift;       // Translation: p+1 coordinates on R^{p+1}
  std::optional<Omega> rotation;   // ModifiedRotation: a in S
  double lambda = 1.0;             // Dilation: nonzero real

  static GravGenerator translation(std::vector<double> b) {
    return {Kind::Translation, std::move(b), std::nullopt, 1.0};
  }
  static GravGenerator inversion() { return {Kind::Inversion, {}, std::nullopt, 1.0}; }
  static GravGenerator modified_rotation(Omega a) {
    return {Kind::ModifiedRotation, {}, std::move(a), 1.0};
  }
  static GravGenerator dilation(double lambda) {
    return {Kind::Dilation, {}, std::nullopt, lambda};
  }
};

// 2x2 matrix of Clifford numbers representing a Möbius transformation
// x -> (a x + b)(c x + d)^{-1}. Matrices built from GRAV generators carry
// their provenance, which is what certifies the Clifford-group membership
// of the entries.
class VahlenMatrix {
 public:
  VahlenMatrix(Multivector a, Multivector b, Multivector c, Multivector d);

  static VahlenMatrix identity(const SliceContext& ctx);
  static VahlenMatrix from_generator(const SliceContext& ctx, const GravGenerator& g);

  const Multivector& a() const { return a_; }
  const Multivector& b() const { return b_; }
  const Multivector& c() const { return c_; }
  const Multivector& d() const { return d_; }

  const std::vector<GravGenerator>& provenance() const { return provenance_; }
  bool has_grav_provenance() const { return !provenance_.empty(); }

  /// Matrix product, concatenating provenance when both sides carry it.
  friend VahlenMatrix operator*(const VahlenMatrix& m, const VahlenMatrix& n);

 private:
  Multivector a_, b_, c_, d_;
  std::vector<GravGenerator> provenance_;
};

struct VahlenReport {
  bool ok = false;
  // 0 when all conditions hold, otherwise '1','2','3' for the failed one.
  char failed_condition = 0;
  // How the Clifford-group membership of the entries was settled:
  // "paravector", "provenance", "norm-test", or "violated".
  std::string membership_basis;
};

/// Checks the three Ahlfors-Vahlen conditions. Membership in the Clifford
/// group is undecidable by inspection for arbitrary entries; entries that
/// are zero or paravectors pass structurally, provenance-tracked products
/// pass by construction, and everything else gets the necessary test
/// g conj(g) in R_{>0} with the basis reported honestly.
VahlenReport check_vahlen(const VahlenMatrix& m, double tol = 1e-10);

/// Inverse of a product of nonzero paravectors: conj(g) / [g conj(g)]_0.
Multivector gamma_inverse(const Multivector& g, double tol = 1e-10);

/// Möbius action (a x + b)(c x + d)^{-1}; the result is a paravector.
Point mobius_apply(const SliceContext& ctx, const VahlenMatrix& m, const Point& x);

/// Conformal weight conj(c x + d) / |c x + d|^{p+2}.
Multivector jacobian_weight(const SliceContext& ctx, const VahlenMatrix& m, const Point& x);

/// J(M, x) f(M<x>): preserves generalized partial-slice monogenicity for
/// GRAV matrices; refuses matrices without GRAV provenance.
Multivector conformal_transform(const SliceContext& ctx, const VahlenMatrix& m,
                                const Evaluator& f, const Point& x);

/// Classical monogenic pullback conj(c x + d)/|c x + d|^{n+1} f(M<x>) with an
/// explicit dimension n.
Multivector ryan_transform(const SliceContext& ctx, const VahlenMatrix& m, const Evaluator& f,
                           const Point& x, int n);

/// Central-difference slice operator with one Richardson level; the residual
/// norm of a monogenicity check at x (which must have r > 0).
Multivector finite_difference_slice_dirac(const SliceContext& ctx, const Evaluator& f,
                                          const Point& x, double h = 1e-5);

}  // namespace psmono
