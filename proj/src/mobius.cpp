#include "psmono/mobius.hpp"

#include <cmath>

namespace psmono {

VahlenMatrix::VahlenMatrix(Multivector a, Multivector b, Multivector c, Multivector d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const int n = a_.generators();
  if (b_.generators() != n || c_.generators() != n || d_.generators() != n)
    throw DimensionError("matrix entries from different algebras");
}

VahlenMatrix VahlenMatrix::identity(const SliceContext& ctx) {
  const int n = ctx.n();
  VahlenMatrix m(Multivector::scalar(n, 1.0), Multivector(n), Multivector(n),
                 Multivector::scalar(n, 1.0));
  return m;
}

VahlenMatrix VahlenMatrix::from_generator(const SliceContext& ctx, const GravGenerator& g) {
  const int n = ctx.n();
  const Multivector zero(n);
  const Multivector one = Multivector::scalar(n, 1.0);
  switch (g.kind) {
    case GravGenerator::Kind::Translation: {
      if (static_cast<int>(g.shift.size()) != ctx.p + 1)
        throw DomainError("translations move along R^{p+1}");
      Multivector b(n);
      b.at(0) = g.shift[0];
      for (int i = 1; i <= ctx.p; ++i) b.at(Blade{1} << (i - 1)) = g.shift[static_cast<std::size_t>(i)];
      VahlenMatrix m(one, std::move(b), zero, one);
      m.provenance_.push_back(g);
      return m;
    }
    case GravGenerator::Kind::Inversion: {
      VahlenMatrix m(zero, one, -one, zero);
      m.provenance_.push_back(g);
      return m;
    }
    case GravGenerator::Kind::ModifiedRotation: {
      if (!g.rotation) throw DomainError("modified rotation needs a sphere element");
      const Multivector a = g.rotation->to_multivector(ctx);
      // a^{-1} = -a for a unit 1-vector.
      VahlenMatrix m(a, zero, zero, -a);
      m.provenance_.push_back(g);
      return m;
    }
    case GravGenerator::Kind::Dilation: {
      if (g.lambda == 0.0) throw DomainError("dilation scale must be nonzero");
      VahlenMatrix m(Multivector::scalar(n, g.lambda), zero, zero,
                     Multivector::scalar(n, 1.0 / g.lambda));
      m.provenance_.push_back(g);
      return m;
    }
  }
  throw DomainError("unknown generator");
}

VahlenMatrix operator*(const VahlenMatrix& m, const VahlenMatrix& n) {
  VahlenMatrix out(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                   m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
  if (m.has_grav_provenance() && n.has_grav_provenance()) {
    out.provenance_ = m.provenance_;
    out.provenance_.insert(out.provenance_.end(), n.provenance_.begin(), n.provenance_.end());
  }
  return out;
}

namespace {

// Zero or a nonzero paravector passes structurally; otherwise apply the
// necessary test g conj(g) in R_{>0}.
bool gamma_membership_plausible(const Multivector& g, double tol, bool* structural) {
  *structural = false;
  if (g.is_zero(tol) || g.is_paravector(tol)) {
    *structural = true;
    return true;
  }
  const Multivector gc = g * g.conjugate();
  const double scalar = gc.scalar_part();
  if (scalar <= tol) return false;
  Multivector rest = gc;
  rest.at(0) = 0.0;
  return rest.is_zero(tol * (1.0 + std::abs(scalar)));
}

}  // namespace

VahlenReport check_vahlen(const VahlenMatrix& m, double tol) {
  VahlenReport report;

  // (i) Entries in the Clifford group or zero.
  bool all_structural = true;
  for (const Multivector* entry : {&m.a(), &m.b(), &m.c(), &m.d()}) {
    bool structural = false;
    if (!gamma_membership_plausible(*entry, tol, &structural)) {
      report.failed_condition = '1';
      report.membership_basis = "violated";
      return report;
    }
    all_structural = all_structural && structural;
  }
  report.membership_basis = all_structural       ? "paravector"
                            : m.has_grav_provenance() ? "provenance"
                                                      : "norm-test";

  // (ii) The four mixed products are paravectors.
  const Multivector products[] = {m.a() * m.b().reverse(), m.c() * m.d().reverse(),
                                  m.c().reverse() * m.a(), m.d().reverse() * m.b()};
  for (const auto& prod : products) {
    if (!prod.is_paravector(tol * (1.0 + prod.norm()))) {
      report.failed_condition = '2';
      return report;
    }
  }

  // (iii) a d~ - b c~ is a nonzero real.
  Multivector pseudo = m.a() * m.d().reverse() - m.b() * m.c().reverse();
  const double scalar = pseudo.scalar_part();
  pseudo.at(0) = 0.0;
  if (!pseudo.is_zero(tol * (1.0 + std::abs(scalar))) || std::abs(scalar) <= tol) {
    report.failed_condition = '3';
    return report;
  }

  report.ok = true;
  return report;
}

Multivector gamma_inverse(const Multivector& g, double tol) {
  const Multivector gc = g * g.conjugate();
  const double scalar = gc.scalar_part();
  Multivector rest = gc;
  rest.at(0) = 0.0;
  if (std::abs(scalar) <= tol || !rest.is_zero(tol * (1.0 + std::abs(scalar))))
    throw SingularityError("element is not an invertible paravector product");
  Multivector inv = g.conjugate();
  inv /= scalar;
  return inv;
}

Point mobius_apply(const SliceContext& ctx, const VahlenMatrix& m, const Point& x) {
  const Multivector xm = to_multivector(ctx, x);
  const Multivector den = m.c() * xm + m.d();
  if (den.is_zero(1e-13)) throw SingularityError("Möbius image at infinity");
  const Multivector value = (m.a() * xm + m.b()) * gamma_inverse(den);
  return point_from_multivector(ctx, value, 1e-8 * (1.0 + value.norm()));
}

Multivector jacobian_weight(const SliceContext& ctx, const VahlenMatrix& m, const Point& x) {
  const Multivector xm = to_multivector(ctx, x);
  const Multivector den = m.c() * xm + m.d();
  const double nd = den.norm();
  if (nd <= 1e-14) throw SingularityError("conformal weight undefined at the singular point");
  Multivector out = den.conjugate();
  out /= std::pow(nd, ctx.p + 2);
  return out;
}

Multivector conformal_transform(const SliceContext& ctx, const VahlenMatrix& m,
                                const Evaluator& f, const Point& x) {
  if (!m.has_grav_provenance())
    throw DomainError("conformal transform requires a GRAV provenance-tracked matrix");
  return jacobian_weight(ctx, m, x) * f(mobius_apply(ctx, m, x));
}

Multivector ryan_transform(const SliceContext& ctx, const VahlenMatrix& m, const Evaluator& f,
                           const Point& x, int n) {
  const Multivector xm = to_multivector(ctx, x);
  const Multivector den = m.c() * xm + m.d();
  const double nd = den.norm();
  if (nd <= 1e-14) throw SingularityError("pullback undefined at the singular point");
  Multivector weight = den.conjugate();
  weight /= std::pow(nd, n + 1);
  return weight * f(mobius_apply(ctx, m, x));
}

Multivector finite_difference_slice_dirac(const SliceContext& ctx, const Evaluator& f,
                                          const Point& x, double h) {
  const auto d = decompose(ctx, x);
  if (!d.omega) throw DomainError("finite-difference slice operator needs r > 0");
  const Multivector omega = d.omega->to_multivector(ctx);

  auto central = [&](auto&& move) {
    auto at = [&](double step) {
      Point y = x;
      move(y, step);
      return f(y);
    };
    // One Richardson level: (4 D_{h/2} - D_h) / 3.
    const Multivector d_h = (at(h) - at(-h)) * (0.5 / h);
    const Multivector d_h2 = (at(0.5 * h) - at(-0.5 * h)) * (1.0 / h);
    return (d_h2 * 4.0 - d_h) * (1.0 / 3.0);
  };

  Multivector out(ctx.n());
  for (int i = 0; i <= ctx.p; ++i) {
    const Multivector partial = central([&](Point& y, double step) { y[i] += step; });
    out += i == 0 ? partial : Multivector::generator(ctx.n(), i) * partial;
  }
  const Multivector radial = central([&](Point& y, double step) {
    for (int j = 0; j < ctx.q; ++j) y[ctx.p + 1 + j] += step * d.omega->component(j);
  });
  out += omega * radial;
  return out;
}

}  // namespace psmono
