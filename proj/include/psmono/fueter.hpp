#pragma once

#include <map>

#include "psmono/stem.hpp"

namespace psmono {

enum class Side { Left, Right };

/// Largest total degree the polynomial builders accept by default.
inline constexpr int kFueterDegreeCap = 8;

/// Fueter variable z_l = x_l + r (eta e_l) (Left) or x_l + r (e_l eta) (Right).
CliffordPolynomial fueter_variable(const SliceContext& ctx, int l, const Omega& eta, Side side);

struct FueterBasisElement {
  MultiIndex index;
  Omega eta;
  Side side;
  CliffordPolynomial poly;  // homogeneous of degree |index| in (x_p, r)
};

// The symmetrized Fueter polynomial: 1/k! times the sum over all k!
// orderings (with multiplicity) of the multiset of Fueter variables, built
// through the equivalent recursion k P_k = sum_i k_i P_{k - eps_i} z_i. The
// factorial division happens once, so integer inputs stay exact.
FueterBasisElement fueter_polynomial(const SliceContext& ctx, const MultiIndex& k,
                                     const Omega& eta, Side side,
                                     int degree_cap = kFueterDegreeCap);

/// All Fueter polynomials with total degree <= max_degree, one lattice sweep.
std::map<MultiIndex, CliffordPolynomial> fueter_family(const SliceContext& ctx, int max_degree,
                                                       const Omega& eta, Side side,
                                                       int degree_cap = kFueterDegreeCap);

/// Brute-force oracle: explicit sum over the distinct multiset orderings,
/// weighted by the multiplicity k!, divided by k! once at the end.
CliffordPolynomial fueter_polynomial_permutation_sum(const SliceContext& ctx,
                                                     const MultiIndex& k, const Omega& eta,
                                                     Side side);

/// d/dx_j P_k - k_j P_{k - eps_j}; identically zero.
CliffordPolynomial fueter_derivative_residual(const SliceContext& ctx, const MultiIndex& k,
                                              int j, const Omega& eta, Side side);
/// d/dr P_k - sum_j k_j (eta e_j) P_{k - eps_j}; identically zero (Left side).
CliffordPolynomial fueter_radial_residual(const SliceContext& ctx, const MultiIndex& k,
                                          const Omega& eta);

// Value of the slice-independent Fueter polynomial at a full point, through
// the two-point combination of the slice polynomial at x' and its radial
// reflection. The result does not depend on the auxiliary eta (defaults to
// the first trailing axis).
Multivector full_fueter_evaluate(const SliceContext& ctx, const MultiIndex& k, const Point& x,
                                 Side side = Side::Left,
                                 const std::optional<Omega>& eta = std::nullopt);

/// Taylor coefficients a_k = partial_k f(0) / k! for |k| <= max_degree.
/// Works for slice and full polynomials; only nonzero coefficients appear.
std::map<MultiIndex, Multivector> taylor_coefficients(const CliffordPolynomial& f,
                                                      int max_degree, double tol = 0.0);

/// sum_k P_{eta,k} a_k as a slice polynomial.
CliffordPolynomial taylor_reconstruction(const SliceContext& ctx,
                                         const std::map<MultiIndex, Multivector>& coeffs,
                                         const Omega& eta, Side side = Side::Left);

/// sum_k P_k a_k as a full polynomial.
CliffordPolynomial taylor_reconstruction_full(const SliceContext& ctx,
                                              const std::map<MultiIndex, Multivector>& coeffs);

// Cauchy-Kovalevskaya extension of a polynomial on R^{p+1} (a slice
// polynomial with no radial part): the terminating exponential series in
// r of the split operator, organized as a stem pair.
StemPolynomial ck_extension(const CliffordPolynomial& f0);

/// CK of the plain monomial x^k.
StemPolynomial monomial_ck(const SliceContext& ctx, const MultiIndex& k);

/// The full-variable form of the Fueter polynomial P_k.
CliffordPolynomial fueter_full_polynomial(const SliceContext& ctx, const MultiIndex& k);

/// Enumerate the multi-indices of length p+1 with total degree == d
/// (or <= d when cumulative is true), in lexicographic order.
std::vector<MultiIndex> multi_indices(int entries, int d, bool cumulative = false);

}  // namespace psmono
