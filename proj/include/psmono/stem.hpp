#pragma once

#include <utility>

#include "psmono/polynomial.hpp"

namespace psmono {

// Polynomial stem function: a pair (F1, F2) of slice polynomials with F1
// even and F2 odd in the radial variable, inducing the function
// F1(x') + omega F2(x') on the p-symmetric completion of its base set.
class StemPolynomial {
 public:
  StemPolynomial(CliffordPolynomial f1, CliffordPolynomial f2);

  const CliffordPolynomial& even_part() const { return f1_; }
  const CliffordPolynomial& odd_part() const { return f2_; }
  const SliceContext& context() const { return f1_.context(); }

  /// Value of the induced function at a point of R^{p+q+1}.
  Multivector induce(const Point& x) const;

  /// The restriction of the induced function to the plane of eta, as a slice
  /// polynomial in (x_p, r): F1 + eta F2.
  CliffordPolynomial slice_function(const Omega& eta) const;

  /// F1 evaluated on the orbit of x.
  Multivector spherical_value(const Point& x) const;
  /// (F2 / r)(x'); the division is exact because F2 is odd in r.
  Multivector spherical_derivative(const Point& x) const;
  /// F2 / r as a polynomial (even in r).
  CliffordPolynomial spherical_derivative_polynomial() const;

  /// Residuals of the generalized Cauchy-Riemann system:
  /// R1 = D_{x_p} F1 - dF2/dr, R2 = conj(D_{x_p}) F2 + dF1/dr.
  std::pair<CliffordPolynomial, CliffordPolynomial> gsr_residual() const;
  bool is_gsr(double tol = 1e-12) const;

  /// The induced function as a polynomial in all p+q+1 variables.
  CliffordPolynomial to_full_polynomial() const;

  /// The two-branch global operator applied to the induced function:
  /// off the axis D_{x_p} f + (x_q/|x_q|^2) E_{x_q} f, on it D f + (q-1) f'_s.
  Multivector global_derivative(const Point& x) const;

  StemPolynomial operator+(const StemPolynomial& o) const;
  StemPolynomial right_multiplied(const Multivector& c) const;

 private:
  CliffordPolynomial f1_;
  CliffordPolynomial f2_;
};

/// Two-point reconstruction of an induced function: given the values at
/// x_p + r w1 and x_p + r w2, return the value at x_p + r target.
Multivector representation_formula(const SliceContext& ctx, const Multivector& value1,
                                   const Multivector& value2, const Omega& w1, const Omega& w2,
                                   const Omega& target);

/// Recover the stem of the unique induced extension of a slice function
/// annihilated by the slice operator of eta. Throws DomainError with the
/// residual magnitude when the input is not monogenic on its slice.
StemPolynomial extend_from_slice(const CliffordPolynomial& f_eta, const Omega& eta,
                                 double tol = 1e-10);

/// Stem recovery without the monogenicity precondition (used by the
/// representation machinery itself).
StemPolynomial stem_from_slice_function(const CliffordPolynomial& f_eta, const Omega& eta);

}  // namespace psmono
