#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "psmono/slice.hpp"

namespace psmono {

/// Exponent multi-index (k_0, ..., k_p) over the paravector variables.
struct MultiIndex {
  std::vector<int> k;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps);

  int size() const { return static_cast<int>(k.size()); }
  int total() const;
  /// k_0! k_1! ... k_p!
  double factorial() const;
  /// k - epsilon_i, or nullopt when the entry would go negative.
  std::optional<MultiIndex> minus(int i) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.k == b.k; }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.k < b.k; }
};

double factorial(int n);

// Multivariate polynomial in commuting real variables with Multivector
// coefficients multiplying monomials from the left. Two arities exist and
// never mix: slice polynomials in (x_0..x_p, r) and full polynomials in
// (x_0..x_{p+q}).
class CliffordPolynomial {
 public:
  enum class Kind { Slice, Full };
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Multivector>;

  CliffordPolynomial(Kind kind, SliceContext ctx) : kind_(kind), ctx_(ctx) {}

  static CliffordPolynomial constant(Kind kind, SliceContext ctx, Multivector c);
  static CliffordPolynomial scalar_constant(Kind kind, SliceContext ctx, double c);
  /// Degree-one monomial 1 * x_var.
  static CliffordPolynomial variable(Kind kind, SliceContext ctx, int var);
  static CliffordPolynomial monomial(Kind kind, SliceContext ctx, Exponents exps,
                                     Multivector c);

  Kind kind() const { return kind_; }
  const SliceContext& context() const { return ctx_; }
  int arity() const { return kind_ == Kind::Slice ? ctx_.p + 2 : ctx_.ambient_dim(); }
  /// Index of the radial variable r (slice polynomials only).
  int radial_index() const;

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;

  /// Accumulate c * x^exps, dropping exact zeros.
  void add_term(const Exponents& exps, const Multivector& c);

  CliffordPolynomial& operator+=(const CliffordPolynomial& o);
  CliffordPolynomial& operator-=(const CliffordPolynomial& o);
  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a += b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a -= b;
  }
  CliffordPolynomial operator-() const;
  CliffordPolynomial scaled(double s) const;
  /// Coefficient-wise true division by s (single rounding per coefficient).
  CliffordPolynomial divided(double s) const;
  CliffordPolynomial left_multiplied(const Multivector& c) const;
  CliffordPolynomial right_multiplied(const Multivector& c) const;
  /// Product with coefficient order preserved: (a x^k)(b x^m) = (a b) x^{k+m}.
  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);

  CliffordPolynomial derivative(int var) const;
  CliffordPolynomial partial(const MultiIndex& k) const;
  /// Substitute x_var -> -x_var.
  CliffordPolynomial negated_variable(int var) const;
  /// Substitute x_i -> x_i + b_i for the paravector variables i = 0..p.
  CliffordPolynomial shifted_paravector(std::span<const double> b) const;

  Multivector evaluate(std::span<const double> coords) const;
  bool is_zero(double tol = 1e-12) const;
  double max_abs_coefficient() const;

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.kind_ == b.kind_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const CliffordPolynomial& o) const;

  Kind kind_;
  SliceContext ctx_;
  TermMap terms_;
};

bool approx_equal(const CliffordPolynomial& a, const CliffordPolynomial& b, double tol);

// --------------------------------------------------------------- operators

/// D_{x_p} = sum_{i=0}^{p} e_i d/dx_i (e_0 = 1), coefficients on the left.
CliffordPolynomial dirac_p(const CliffordPolynomial& P);
/// Conjugated split operator d/dx_0 - sum_{i=1}^{p} e_i d/dx_i.
CliffordPolynomial dirac_p_conj(const CliffordPolynomial& P);
/// D_omega = D_{x_p} + omega d/dr on slice polynomials.
CliffordPolynomial slice_dirac(const CliffordPolynomial& P, const Omega& omega);
/// Right-acting variant: sum (dP/dx_i) e_i + (dP/dr) omega.
CliffordPolynomial slice_dirac_right(const CliffordPolynomial& P, const Omega& omega);
/// Full generalized Cauchy-Riemann operator sum_{i=0}^{p+q} e_i d/dx_i.
CliffordPolynomial dirac_full(const CliffordPolynomial& P);
/// Trailing Dirac operator sum_{i=p+1}^{p+q} e_i d/dx_i.
CliffordPolynomial dirac_q(const CliffordPolynomial& P);
/// Trailing Euler operator sum_{i=p+1}^{p+q} x_i d/dx_i.
CliffordPolynomial euler_q(const CliffordPolynomial& P);
/// Angular momentum L_ij = x_i d/dx_j - x_j d/dx_i (full polynomials).
CliffordPolynomial angular_momentum(const CliffordPolynomial& P, int i, int j);
/// Spherical Dirac operator -sum_{p+1 <= i < j} e_i e_j L_ij.
CliffordPolynomial spherical_dirac(const CliffordPolynomial& P);
/// |x_q|^2 D_{x_p} + x_q E_{x_q}, the polynomial global operator.
CliffordPolynomial global_operator(const CliffordPolynomial& P);

/// Substitute x_{p+1+i} = r * omega_i; full -> slice.
CliffordPolynomial restrict_to_slice(const CliffordPolynomial& P, const Omega& omega);

/// The trailing 1-vector x_q = sum x_i e_i as a full polynomial.
CliffordPolynomial trailing_vector_polynomial(const SliceContext& ctx);
/// |x_q|^2 = sum_{i>p} x_i^2 as a full polynomial.
CliffordPolynomial trailing_norm_squared_polynomial(const SliceContext& ctx);

/// Tagged operator for the generic entry point (CLI, tests).
struct OperatorSpec {
  enum class Tag {
    DiracP,
    DiracPConj,
    DiracQ,
    DiracFull,
    SliceDirac,
    SliceDiracRight,
    EulerQ,
    SphericalDirac,
    GlobalOperator,
    Partial,
    SlicePartial,
    AngularMomentum,
  };

  Tag tag;
  std::optional<Omega> omega;     // SliceDirac(+Right), SlicePartial
  std::optional<MultiIndex> index;  // Partial, SlicePartial
  int i = 0, j = 0;               // AngularMomentum
};

CliffordPolynomial apply(const OperatorSpec& op, const CliffordPolynomial& P);

}  // namespace psmono
