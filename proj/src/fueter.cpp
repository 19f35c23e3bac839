#include "psmono/fueter.hpp"

#include <algorithm>
#include <string>

namespace psmono {

namespace {

using Kind = CliffordPolynomial::Kind;

void check_index(const SliceContext& ctx, const MultiIndex& k, int degree_cap) {
  if (k.size() != ctx.p + 1) throw DimensionError("multi-index needs p+1 entries");
  if (k.total() > degree_cap) throw DomainError("total degree exceeds the cap");
}

CliffordPolynomial one(const SliceContext& ctx) {
  return CliffordPolynomial::scalar_constant(Kind::Slice, ctx, 1.0);
}

}  // namespace

std::vector<MultiIndex> multi_indices(int entries, int d, bool cumulative) {
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(entries), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == entries - 1) {
      if (cumulative) {
        for (int v = 0; v <= remaining; ++v) {
          current[static_cast<std::size_t>(pos)] = v;
          out.push_back(MultiIndex(current));
        }
      } else {
        current[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(MultiIndex(current));
      }
      current[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
    current[static_cast<std::size_t>(pos)] = 0;
  };
  if (entries == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const MultiIndex& a, const MultiIndex& b) { return a.k == b.k; }),
            out.end());
  return out;
}

CliffordPolynomial fueter_variable(const SliceContext& ctx, int l, const Omega& eta,
                                   Side side) {
  if (l < 0 || l > ctx.p) throw DomainError("Fueter variable index out of range");
  const int n = ctx.n();
  const Multivector eta_mv = eta.to_multivector(ctx);
  const Multivector el = Multivector::generator(n, l);
  const Multivector radial = side == Side::Left ? eta_mv * el : el * eta_mv;

  CliffordPolynomial z(Kind::Slice, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
  e[static_cast<std::size_t>(l)] = 1;
  z.add_term(e, Multivector::scalar(n, 1.0));
  e[static_cast<std::size_t>(l)] = 0;
  e[static_cast<std::size_t>(ctx.p + 1)] = 1;
  z.add_term(e, radial);
  return z;
}

// Scaled lattice sweep: S_k = sum_i k_i S_{k - eps_i} z_i with S_0 = 1, so
// that S_k = k! P_k stays integer for integer inputs; a single division by
// k! lands the normalized polynomial.
std::map<MultiIndex, CliffordPolynomial> fueter_family(const SliceContext& ctx, int max_degree,
                                                       const Omega& eta, Side side,
                                                       int degree_cap) {
  if (max_degree > degree_cap) throw DomainError("total degree exceeds the cap");
  std::vector<CliffordPolynomial> z;
  for (int l = 0; l <= ctx.p; ++l) z.push_back(fueter_variable(ctx, l, eta, side));

  std::map<MultiIndex, CliffordPolynomial> scaled;
  scaled.emplace(MultiIndex(std::vector<int>(static_cast<std::size_t>(ctx.p + 1), 0)),
                 one(ctx));
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& k : multi_indices(ctx.p + 1, d)) {
      CliffordPolynomial s(Kind::Slice, ctx);
      for (int i = 0; i <= ctx.p; ++i) {
        const auto prev = k.minus(i);
        if (!prev) continue;
        const double ki = k.k[static_cast<std::size_t>(i)];
        s += (scaled.at(*prev) * z[static_cast<std::size_t>(i)]).scaled(ki);
      }
      scaled.emplace(k, std::move(s));
    }
  }

  std::map<MultiIndex, CliffordPolynomial> out;
  for (auto& [k, s] : scaled) out.emplace(k, s.divided(factorial(k.total())));
  return out;
}

FueterBasisElement fueter_polynomial(const SliceContext& ctx, const MultiIndex& k,
                                     const Omega& eta, Side side, int degree_cap) {
  check_index(ctx, k, degree_cap);
  // Sweep only the sub-lattice below k.
  std::vector<CliffordPolynomial> z;
  for (int l = 0; l <= ctx.p; ++l) z.push_back(fueter_variable(ctx, l, eta, side));

  std::map<MultiIndex, CliffordPolynomial> scaled;
  auto build = [&](auto&& self, const MultiIndex& idx) -> const CliffordPolynomial& {
    auto it = scaled.find(idx);
    if (it != scaled.end()) return it->second;
    if (idx.total() == 0) return scaled.emplace(idx, one(ctx)).first->second;
    CliffordPolynomial s(Kind::Slice, ctx);
    for (int i = 0; i <= ctx.p; ++i) {
      const auto prev = idx.minus(i);
      if (!prev) continue;
      const double ki = idx.k[static_cast<std::size_t>(i)];
      s += (self(self, *prev) * z[static_cast<std::size_t>(i)]).scaled(ki);
    }
    return scaled.emplace(idx, std::move(s)).first->second;
  };
  const CliffordPolynomial& s = build(build, k);
  return {k, eta, side, s.divided(factorial(k.total()))};
}

CliffordPolynomial fueter_polynomial_permutation_sum(const SliceContext& ctx,
                                                     const MultiIndex& k, const Omega& eta,
                                                     Side side) {
  check_index(ctx, k, kFueterDegreeCap);
  std::vector<CliffordPolynomial> z;
  for (int l = 0; l <= ctx.p; ++l) z.push_back(fueter_variable(ctx, l, eta, side));

  std::vector<int> sequence;
  for (int i = 0; i <= ctx.p; ++i)
    sequence.insert(sequence.end(), static_cast<std::size_t>(k.k[static_cast<std::size_t>(i)]),
                    i);
  if (sequence.empty()) return one(ctx);

  CliffordPolynomial sum(Kind::Slice, ctx);
  std::sort(sequence.begin(), sequence.end());
  do {
    CliffordPolynomial prod = z[static_cast<std::size_t>(sequence[0])];
    for (std::size_t i = 1; i < sequence.size(); ++i)
      prod = prod * z[static_cast<std::size_t>(sequence[i])];
    sum += prod;
  } while (std::next_permutation(sequence.begin(), sequence.end()));

  // Each distinct arrangement stands for k! identical orderings of the
  // multiset's labeled copies; scale, then normalize once.
  return sum.scaled(k.factorial()).divided(factorial(k.total()));
}

CliffordPolynomial fueter_derivative_residual(const SliceContext& ctx, const MultiIndex& k,
                                              int j, const Omega& eta, Side side) {
  if (j < 0 || j > ctx.p) throw DomainError("derivative index out of range");
  const auto pk = fueter_polynomial(ctx, k, eta, side).poly;
  CliffordPolynomial residual = pk.derivative(j);
  if (const auto prev = k.minus(j)) {
    const double kj = k.k[static_cast<std::size_t>(j)];
    residual -= fueter_polynomial(ctx, *prev, eta, side).poly.scaled(kj);
  }
  return residual;
}

CliffordPolynomial fueter_radial_residual(const SliceContext& ctx, const MultiIndex& k,
                                          const Omega& eta) {
  const auto pk = fueter_polynomial(ctx, k, eta, Side::Left).poly;
  CliffordPolynomial residual = pk.derivative(ctx.p + 1);
  const Multivector eta_mv = eta.to_multivector(ctx);
  for (int j = 0; j <= ctx.p; ++j) {
    const auto prev = k.minus(j);
    if (!prev) continue;
    const double kj = k.k[static_cast<std::size_t>(j)];
    const Multivector factor = (eta_mv * Multivector::generator(ctx.n(), j)) * kj;
    residual -= fueter_polynomial(ctx, *prev, eta, Side::Left).poly.left_multiplied(factor);
  }
  return residual;
}

Multivector full_fueter_evaluate(const SliceContext& ctx, const MultiIndex& k, const Point& x,
                                 Side side, const std::optional<Omega>& eta_opt) {
  const Omega eta = eta_opt.value_or(Omega::axis(ctx, 0));
  const auto pk = fueter_polynomial(ctx, k, eta, side).poly;
  const auto d = decompose(ctx, x);
  std::vector<double> coords = d.xp;
  coords.push_back(d.r);
  const Multivector at_plus = pk.evaluate(coords);
  if (!d.omega) return at_plus;

  coords.back() = -d.r;
  const Multivector at_minus = pk.evaluate(coords);
  const int n = ctx.n();
  const Multivector omega_eta = d.omega->to_multivector(ctx) * eta.to_multivector(ctx);
  const Multivector one_mv = Multivector::scalar(n, 1.0);
  if (side == Side::Left) {
    return ((one_mv - omega_eta) * at_plus + (one_mv + omega_eta) * at_minus) * 0.5;
  }
  const Multivector eta_omega = eta.to_multivector(ctx) * d.omega->to_multivector(ctx);
  return (at_plus * (one_mv - eta_omega) + at_minus * (one_mv + eta_omega)) * 0.5;
}

std::map<MultiIndex, Multivector> taylor_coefficients(const CliffordPolynomial& f,
                                                      int max_degree, double tol) {
  const auto& ctx = f.context();
  const std::vector<double> origin(static_cast<std::size_t>(f.arity()), 0.0);
  std::map<MultiIndex, Multivector> out;
  for (const auto& k : multi_indices(ctx.p + 1, max_degree, /*cumulative=*/true)) {
    Multivector a = f.partial(k).evaluate(origin);
    a /= k.factorial();
    if (a.max_abs_coefficient() > tol) out.emplace(k, std::move(a));
  }
  return out;
}

CliffordPolynomial taylor_reconstruction(const SliceContext& ctx,
                                         const std::map<MultiIndex, Multivector>& coeffs,
                                         const Omega& eta, Side side) {
  CliffordPolynomial out(Kind::Slice, ctx);
  for (const auto& [k, a] : coeffs) {
    const auto pk = fueter_polynomial(ctx, k, eta, side).poly;
    out += side == Side::Left ? pk.right_multiplied(a) : pk.left_multiplied(a);
  }
  return out;
}

CliffordPolynomial taylor_reconstruction_full(const SliceContext& ctx,
                                              const std::map<MultiIndex, Multivector>& coeffs) {
  CliffordPolynomial out(Kind::Full, ctx);
  for (const auto& [k, a] : coeffs)
    out += fueter_full_polynomial(ctx, k).right_multiplied(a);
  return out;
}

StemPolynomial ck_extension(const CliffordPolynomial& f0) {
  if (f0.kind() != Kind::Slice) throw DomainError("CK input must use slice variables");
  const auto& ctx = f0.context();
  const int rvar = ctx.p + 1;
  if (f0.degree_in(rvar) != 0)
    throw DomainError("CK extends functions of the paravector variables only");

  auto laplacian = [&](const CliffordPolynomial& g) {
    CliffordPolynomial out(Kind::Slice, ctx);
    for (int i = 0; i <= ctx.p; ++i) out += g.derivative(i).derivative(i);
    return out;
  };
  auto shifted = [&](const CliffordPolynomial& g, int rpow, double divisor, bool negate) {
    CliffordPolynomial out(Kind::Slice, ctx);
    for (const auto& [e, c] : g.terms()) {
      auto re = e;
      re[static_cast<std::size_t>(rvar)] += rpow;
      Multivector scaled = negate ? -c : c;
      scaled /= divisor;
      out.add_term(re, scaled);
    }
    return out;
  };

  // exp(r omega D) f0 regrouped by parity: even terms (-1)^m r^{2m}/(2m)!
  // Laplacian^m f0, odd terms r^{2m+1}/(2m+1)! (-1)^m D Laplacian^m f0 with
  // the single omega factored to the left.
  CliffordPolynomial f1 = f0;
  CliffordPolynomial f2(Kind::Slice, ctx);
  CliffordPolynomial g = f0;
  for (int m = 0;; ++m) {
    const bool neg = m & 1;
    const CliffordPolynomial h = dirac_p(g);
    if (!h.empty()) f2 += shifted(h, 2 * m + 1, factorial(2 * m + 1), neg);
    g = laplacian(g);
    if (g.empty()) break;
    f1 += shifted(g, 2 * m + 2, factorial(2 * m + 2), !neg);
  }
  return StemPolynomial(std::move(f1), std::move(f2));
}

StemPolynomial monomial_ck(const SliceContext& ctx, const MultiIndex& k) {
  if (k.size() != ctx.p + 1) throw DimensionError("multi-index needs p+1 entries");
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.p + 2), 0);
  for (int i = 0; i <= ctx.p; ++i)
    e[static_cast<std::size_t>(i)] = k.k[static_cast<std::size_t>(i)];
  const auto mono = CliffordPolynomial::monomial(Kind::Slice, ctx, e,
                                                 Multivector::scalar(ctx.n(), 1.0));
  return ck_extension(mono);
}

CliffordPolynomial fueter_full_polynomial(const SliceContext& ctx, const MultiIndex& k) {
  return monomial_ck(ctx, k).to_full_polynomial();
}

}  // namespace psmono
