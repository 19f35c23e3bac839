#include "psmono/kernel.hpp"

#include <cmath>

namespace psmono {

double sigma(int p) {
  if (p < 0) throw DomainError("sigma needs p >= 0");
  const double half = (p + 2) / 2.0;
  return 2.0 * std::pow(std::acos(-1.0), half) / std::tgamma(half);
}

void KernelExpr::add_term(CliffordPolynomial numerator, int m) {
  if (numerator.kind() != CliffordPolynomial::Kind::Slice || !(numerator.context() == ctx_))
    throw DimensionError("kernel numerators are slice polynomials of the same context");
  if (m <= 0) throw DomainError("rho exponent must be positive");
  if (!terms_.empty() && ((terms_.front().m ^ m) & 1))
    throw DomainError("rho exponents must share parity within one expression");
  if (numerator.empty()) return;
  terms_.push_back({std::move(numerator), m});
}

KernelExpr& KernelExpr::operator+=(const KernelExpr& o) {
  for (const auto& t : o.terms_) add_term(t.numerator, t.m);
  return *this;
}

KernelExpr KernelExpr::left_multiplied(const Multivector& c) const {
  KernelExpr out(ctx_);
  for (const auto& t : terms_) out.add_term(t.numerator.left_multiplied(c), t.m);
  return out;
}

KernelExpr KernelExpr::right_multiplied(const Multivector& c) const {
  KernelExpr out(ctx_);
  for (const auto& t : terms_) out.add_term(t.numerator.right_multiplied(c), t.m);
  return out;
}

KernelExpr KernelExpr::scaled(double s) const {
  KernelExpr out(ctx_);
  for (const auto& t : terms_) out.add_term(t.numerator.scaled(s), t.m);
  return out;
}

KernelExpr KernelExpr::derivative(int var) const {
  KernelExpr out(ctx_);
  for (const auto& t : terms_) {
    out.add_term(t.numerator.derivative(var), t.m);
    const auto xvar = CliffordPolynomial::variable(CliffordPolynomial::Kind::Slice, ctx_, var);
    out.add_term((xvar * t.numerator).scaled(-static_cast<double>(t.m)), t.m + 2);
  }
  return out.collected();
}

KernelExpr KernelExpr::partial(const MultiIndex& k) const {
  KernelExpr out = *this;
  for (int v = 0; v < k.size(); ++v)
    for (int rep = 0; rep < k.k[static_cast<std::size_t>(v)]; ++rep)
      out = out.derivative(v);
  return out;
}

KernelExpr KernelExpr::slice_dirac_applied(const Omega& eta) const {
  KernelExpr out(ctx_);
  out += derivative(0);
  for (int i = 1; i <= ctx_.p; ++i)
    out += derivative(i).left_multiplied(Multivector::generator(ctx_.n(), i));
  out += derivative(ctx_.p + 1).left_multiplied(eta.to_multivector(ctx_));
  return out.collected();
}

KernelExpr KernelExpr::slice_dirac_right_applied(const Omega& eta) const {
  KernelExpr out(ctx_);
  out += derivative(0);
  for (int i = 1; i <= ctx_.p; ++i)
    out += derivative(i).right_multiplied(Multivector::generator(ctx_.n(), i));
  out += derivative(ctx_.p + 1).right_multiplied(eta.to_multivector(ctx_));
  return out.collected();
}

KernelExpr KernelExpr::collected() const {
  KernelExpr out(ctx_);
  std::map<int, CliffordPolynomial> by_m;
  for (const auto& t : terms_) {
    auto it = by_m.find(t.m);
    if (it == by_m.end())
      by_m.emplace(t.m, t.numerator);
    else
      it->second += t.numerator;
  }
  for (auto& [m, num] : by_m)
    if (!num.empty()) out.terms_.push_back({std::move(num), m});
  return out;
}

namespace {

CliffordPolynomial rho_squared(const SliceContext& ctx) {
  CliffordPolynomial out(CliffordPolynomial::Kind::Slice, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
  for (int i = 0; i <= ctx.p + 1; ++i) {
    e[static_cast<std::size_t>(i)] = 2;
    out.add_term(e, Multivector::scalar(ctx.n(), 1.0));
    e[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

}  // namespace

bool KernelExpr::symbolically_zero(double tol) const {
  const auto merged = collected();
  if (merged.terms_.empty()) return true;
  int max_m = 0;
  for (const auto& t : merged.terms_) max_m = std::max(max_m, t.m);
  const auto r2 = rho_squared(ctx_);
  CliffordPolynomial total(CliffordPolynomial::Kind::Slice, ctx_);
  for (const auto& t : merged.terms_) {
    CliffordPolynomial lifted = t.numerator;
    for (int m = t.m; m < max_m; m += 2) lifted = lifted * r2;
    total += lifted;
  }
  return total.is_zero(tol);
}

Multivector KernelExpr::evaluate(std::span<const double> slice_coords) const {
  if (static_cast<int>(slice_coords.size()) != ctx_.p + 2)
    throw DimensionError("kernel expressions evaluate on slice coordinates");
  double r2 = 0.0;
  for (double v : slice_coords) r2 += v * v;
  if (r2 == 0.0) throw SingularityError("kernel expression evaluated at the origin");
  Multivector acc(ctx_.n());
  for (const auto& t : terms_)
    acc.add_scaled(t.numerator.evaluate(slice_coords), std::pow(r2, -0.5 * t.m));
  return acc;
}

KernelExpr cauchy_kernel_expr(const SliceContext& ctx, const Omega& eta) {
  // conj(x_p + r eta) / (sigma |x|^{p+2}) with the conjugation expanded:
  // x_0 - sum x_i e_i - r eta over rho^{p+2}.
  const int n = ctx.n();
  CliffordPolynomial numerator(CliffordPolynomial::Kind::Slice, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
  e[0] = 1;
  numerator.add_term(e, Multivector::scalar(n, 1.0));
  e[0] = 0;
  for (int i = 1; i <= ctx.p; ++i) {
    e[static_cast<std::size_t>(i)] = 1;
    numerator.add_term(e, -Multivector::generator(n, i));
    e[static_cast<std::size_t>(i)] = 0;
  }
  e[static_cast<std::size_t>(ctx.p + 1)] = 1;
  numerator.add_term(e, -eta.to_multivector(ctx));

  KernelExpr out(ctx);
  out.add_term(numerator.divided(sigma(ctx.p)), ctx.p + 2);
  return out;
}

Multivector cauchy_kernel(const SliceContext& ctx, const Point& x) {
  const Multivector xm = to_multivector(ctx, x);
  const double nx = xm.norm();
  if (nx == 0.0) throw SingularityError("Cauchy kernel has a pole at the origin");
  Multivector out = xm.conjugate();
  out /= sigma(ctx.p) * std::pow(nx, ctx.p + 2);
  return out;
}

KernelExpr q_kernel(const SliceContext& ctx, const MultiIndex& k, const Omega& eta) {
  if (k.size() != ctx.p + 1) throw DimensionError("multi-index needs p+1 entries");
  KernelExpr derived = cauchy_kernel_expr(ctx, eta).partial(k);
  const bool negate = k.total() & 1;
  KernelExpr out(ctx);
  for (const auto& t : derived.terms())
    out.add_term((negate ? -t.numerator : t.numerator).divided(k.factorial()), t.m);
  return out;
}

Multivector q_full(const SliceContext& ctx, const MultiIndex& k, const Point& x,
                   const std::optional<Omega>& eta_opt) {
  const Omega eta = eta_opt.value_or(Omega::axis(ctx, 0));
  const auto q = q_kernel(ctx, k, eta);
  const auto d = decompose(ctx, x);
  std::vector<double> coords = d.xp;
  coords.push_back(d.r);
  const Multivector at_plus = q.evaluate(coords);
  if (!d.omega) return at_plus;
  coords.back() = -d.r;
  const Multivector at_minus = q.evaluate(coords);
  const Multivector omega_eta = d.omega->to_multivector(ctx) * eta.to_multivector(ctx);
  const Multivector one_mv = Multivector::scalar(ctx.n(), 1.0);
  return ((one_mv - omega_eta) * at_plus + (one_mv + omega_eta) * at_minus) * 0.5;
}

bool near_pole_orbit(const SliceContext& ctx, const Point& y, const Point& x, double rel_tol) {
  const auto dx = decompose(ctx, x);
  const auto dy = decompose(ctx, y);
  const double scale = rel_tol * (1.0 + y.norm());
  double dp = 0.0;
  for (int i = 0; i <= ctx.p; ++i) {
    const double diff = dx.xp[static_cast<std::size_t>(i)] - dy.xp[static_cast<std::size_t>(i)];
    dp += diff * diff;
  }
  return std::sqrt(dp) <= scale && std::abs(dx.r - dy.r) <= scale;
}

Multivector slice_cauchy_kernel(const SliceContext& ctx, const Point& y, const Point& x,
                                Side side) {
  if (near_pole_orbit(ctx, y, x))
    throw SingularityError("evaluation point lies on the pole orbit");
  const auto dy = decompose(ctx, y);
  const auto dx = decompose(ctx, x);

  auto diff_point = [&](const Point& a, const Point& b) {
    Point out = a;
    for (int i = 0; i < out.dim(); ++i) out[i] -= b[i];
    return out;
  };

  if (!dy.omega || !dx.omega) {
    // Real pole or on-axis evaluation point: both projections coincide and
    // the kernel is the plain E(y - x).
    Point proj = x;
    if (dy.omega && dx.omega) proj = compose(ctx, dx.xp, dx.r, *dy.omega);
    return cauchy_kernel(ctx, diff_point(y, proj));
  }

  const Omega& eta = *dy.omega;
  const Point pi = compose(ctx, dx.xp, dx.r, eta);
  const Point pi_refl = compose(ctx, dx.xp, dx.r, eta.negated());
  const Multivector e_plus = cauchy_kernel(ctx, diff_point(y, pi));
  const Multivector e_minus = cauchy_kernel(ctx, diff_point(y, pi_refl));
  const Multivector one_mv = Multivector::scalar(ctx.n(), 1.0);
  if (side == Side::Left) {
    const Multivector omega_eta =
        dx.omega->to_multivector(ctx) * eta.to_multivector(ctx);
    return ((one_mv - omega_eta) * e_plus + (one_mv + omega_eta) * e_minus) * 0.5;
  }
  const Multivector eta_omega = eta.to_multivector(ctx) * dx.omega->to_multivector(ctx);
  return (e_plus * (one_mv - eta_omega) + e_minus * (one_mv + eta_omega)) * 0.5;
}

}  // namespace psmono
