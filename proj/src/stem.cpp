#include "psmono/stem.hpp"

#include <cmath>
#include <string>

namespace psmono {

namespace {

enum class Parity { Even, Odd };

void require_parity(const CliffordPolynomial& f, Parity parity, const char* name) {
  const int r = f.radial_index();
  for (const auto& [e, c] : f.terms()) {
    const bool odd = e[static_cast<std::size_t>(r)] & 1;
    if (odd != (parity == Parity::Odd))
      throw DomainError(std::string(name) + " has a term of the wrong radial parity");
  }
}

// Replace r^{2m} by (sum of trailing squares)^m; input must be even in r.
CliffordPolynomial even_slice_to_full(const CliffordPolynomial& f) {
  const auto& ctx = f.context();
  const auto rho2 = trailing_norm_squared_polynomial(ctx);
  const int rvar = f.radial_index();

  // Cache powers of rho^2 up to the needed order.
  const int max_m = f.degree_in(rvar) / 2;
  std::vector<CliffordPolynomial> pow;
  pow.push_back(CliffordPolynomial::scalar_constant(CliffordPolynomial::Kind::Full, ctx, 1.0));
  for (int m = 1; m <= max_m; ++m) pow.push_back(pow.back() * rho2);

  CliffordPolynomial out(CliffordPolynomial::Kind::Full, ctx);
  CliffordPolynomial::Exponents fe(static_cast<std::size_t>(ctx.ambient_dim()), 0);
  for (const auto& [e, c] : f.terms()) {
    const int m = e[static_cast<std::size_t>(rvar)] / 2;
    for (const auto& [pe, pc] : pow[static_cast<std::size_t>(m)].terms()) {
      for (int i = 0; i <= ctx.p; ++i)
        fe[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
      for (int i = ctx.p + 1; i <= ctx.n(); ++i)
        fe[static_cast<std::size_t>(i)] = pe[static_cast<std::size_t>(i)];
      out.add_term(fe, c * pc.scalar_part());
    }
  }
  return out;
}

}  // namespace

StemPolynomial::StemPolynomial(CliffordPolynomial f1, CliffordPolynomial f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (f1_.kind() != CliffordPolynomial::Kind::Slice ||
      f2_.kind() != CliffordPolynomial::Kind::Slice)
    throw DomainError("stem components must be slice polynomials");
  if (!(f1_.context() == f2_.context())) throw DimensionError("stem context mismatch");
  require_parity(f1_, Parity::Even, "F1");
  require_parity(f2_, Parity::Odd, "F2");
}

Multivector StemPolynomial::induce(const Point& x) const {
  const auto& ctx = context();
  const auto d = decompose(ctx, x);
  std::vector<double> coords = d.xp;
  coords.push_back(d.r);
  Multivector value = f1_.evaluate(coords);
  if (d.omega) {
    const Multivector omega = d.omega->to_multivector(ctx);
    value += omega * f2_.evaluate(coords);
  }
  return value;
}

CliffordPolynomial StemPolynomial::slice_function(const Omega& eta) const {
  return f1_ + f2_.left_multiplied(eta.to_multivector(context()));
}

Multivector StemPolynomial::spherical_value(const Point& x) const {
  const auto d = decompose(context(), x);
  std::vector<double> coords = d.xp;
  coords.push_back(d.r);
  return f1_.evaluate(coords);
}

CliffordPolynomial StemPolynomial::spherical_derivative_polynomial() const {
  const int rvar = f2_.radial_index();
  CliffordPolynomial out(CliffordPolynomial::Kind::Slice, context());
  for (const auto& [e, c] : f2_.terms()) {
    auto de = e;
    de[static_cast<std::size_t>(rvar)] -= 1;  // exact: every exponent is odd, >= 1
    out.add_term(de, c);
  }
  return out;
}

Multivector StemPolynomial::spherical_derivative(const Point& x) const {
  const auto d = decompose(context(), x);
  std::vector<double> coords = d.xp;
  coords.push_back(d.r);
  return spherical_derivative_polynomial().evaluate(coords);
}

std::pair<CliffordPolynomial, CliffordPolynomial> StemPolynomial::gsr_residual() const {
  const int rvar = f1_.radial_index();
  CliffordPolynomial r1 = dirac_p(f1_) - f2_.derivative(rvar);
  CliffordPolynomial r2 = dirac_p_conj(f2_) + f1_.derivative(rvar);
  return {std::move(r1), std::move(r2)};
}

bool StemPolynomial::is_gsr(double tol) const {
  const auto [r1, r2] = gsr_residual();
  return r1.is_zero(tol) && r2.is_zero(tol);
}

CliffordPolynomial StemPolynomial::to_full_polynomial() const {
  // f = F1 + omega F2 = F1(x_p, r) + x_q * (F2/r)(x_p, r); both survivors are
  // even in r and collapse to polynomials in |x_q|^2.
  CliffordPolynomial out = even_slice_to_full(f1_);
  const auto g2 = even_slice_to_full(spherical_derivative_polynomial());
  out += trailing_vector_polynomial(context()) * g2;
  return out;
}

Multivector StemPolynomial::global_derivative(const Point& x) const {
  const auto& ctx = context();
  const auto d = decompose(ctx, x);
  const auto full = to_full_polynomial();
  if (d.omega) {
    Multivector xq(ctx.n());
    for (int i = 0; i < ctx.q; ++i)
      xq.at(Blade{1} << (ctx.p + i)) = x[ctx.p + 1 + i];
    const double r2 = d.r * d.r;
    Multivector value = dirac_p(full).evaluate(x.x);
    value += (xq * euler_q(full).evaluate(x.x)) * (1.0 / r2);
    return value;
  }
  Multivector value = dirac_full(full).evaluate(x.x);
  value.add_scaled(spherical_derivative(x), static_cast<double>(ctx.q - 1));
  return value;
}

StemPolynomial StemPolynomial::operator+(const StemPolynomial& o) const {
  return StemPolynomial(f1_ + o.f1_, f2_ + o.f2_);
}

StemPolynomial StemPolynomial::right_multiplied(const Multivector& c) const {
  return StemPolynomial(f1_.right_multiplied(c), f2_.right_multiplied(c));
}

Multivector representation_formula(const SliceContext& ctx, const Multivector& value1,
                                   const Multivector& value2, const Omega& w1, const Omega& w2,
                                   const Omega& target) {
  const Multivector m1 = w1.to_multivector(ctx);
  const Multivector m2 = w2.to_multivector(ctx);
  const Multivector t = target.to_multivector(ctx);
  const Multivector diff = m1 - m2;
  if (diff.norm() < 1e-14) throw SingularityError("representation formula needs w1 != w2");
  const Multivector inv = diff.paravector_inverse();
  return (t - m2) * inv * value1 - (t - m1) * inv * value2;
}

StemPolynomial stem_from_slice_function(const CliffordPolynomial& f_eta, const Omega& eta) {
  if (f_eta.kind() != CliffordPolynomial::Kind::Slice)
    throw DomainError("slice polynomial expected");
  const auto& ctx = f_eta.context();
  const int rvar = f_eta.radial_index();
  const CliffordPolynomial reflected = f_eta.negated_variable(rvar);
  const CliffordPolynomial f1 = (f_eta + reflected).scaled(0.5);
  const CliffordPolynomial f2 =
      (f_eta - reflected).scaled(0.5).left_multiplied(-eta.to_multivector(ctx));
  return StemPolynomial(f1, f2);
}

StemPolynomial extend_from_slice(const CliffordPolynomial& f_eta, const Omega& eta,
                                 double tol) {
  const auto residual = slice_dirac(f_eta, eta);
  if (!residual.is_zero(tol))
    throw DomainError("slice function is not monogenic; residual magnitude " +
                      std::to_string(residual.max_abs_coefficient()));
  return stem_from_slice_function(f_eta, eta);
}

}  // namespace psmono
