#include "psmono/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace psmono {

MultiIndex::MultiIndex(std::vector<int> exps) : k(std::move(exps)) {
  for (int v : k)
    if (v < 0) throw DomainError("multi-index entries must be nonnegative");
}

int MultiIndex::total() const {
  int t = 0;
  for (int v : k) t += v;
  return t;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double MultiIndex::factorial() const {
  double f = 1.0;
  for (int v : k) f *= psmono::factorial(v);
  return f;
}

std::optional<MultiIndex> MultiIndex::minus(int i) const {
  if (i < 0 || i >= size() || k[static_cast<std::size_t>(i)] == 0) return std::nullopt;
  MultiIndex out = *this;
  out.k[static_cast<std::size_t>(i)] -= 1;
  return out;
}

// ------------------------------------------------------------- polynomial

CliffordPolynomial CliffordPolynomial::constant(Kind kind, SliceContext ctx, Multivector c) {
  CliffordPolynomial P(kind, ctx);
  P.add_term(Exponents(static_cast<std::size_t>(P.arity()), 0), c);
  return P;
}

CliffordPolynomial CliffordPolynomial::scalar_constant(Kind kind, SliceContext ctx, double c) {
  return constant(kind, ctx, Multivector::scalar(ctx.n(), c));
}

CliffordPolynomial CliffordPolynomial::variable(Kind kind, SliceContext ctx, int var) {
  CliffordPolynomial P(kind, ctx);
  if (var < 0 || var >= P.arity()) throw DomainError("variable index out of range");
  Exponents e(static_cast<std::size_t>(P.arity()), 0);
  e[static_cast<std::size_t>(var)] = 1;
  P.add_term(e, Multivector::scalar(ctx.n(), 1.0));
  return P;
}

CliffordPolynomial CliffordPolynomial::monomial(Kind kind, SliceContext ctx, Exponents exps,
                                                Multivector c) {
  CliffordPolynomial P(kind, ctx);
  if (static_cast<int>(exps.size()) != P.arity()) throw DimensionError("exponent arity");
  P.add_term(exps, c);
  return P;
}

int CliffordPolynomial::radial_index() const {
  if (kind_ != Kind::Slice) throw DomainError("only slice polynomials carry r");
  return ctx_.p + 1;
}

int CliffordPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

int CliffordPolynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

void CliffordPolynomial::add_term(const Exponents& exps, const Multivector& c) {
  if (static_cast<int>(exps.size()) != arity()) throw DimensionError("exponent arity");
  if (c.generators() != ctx_.n()) throw DimensionError("coefficient algebra mismatch");
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CliffordPolynomial::require_compatible(const CliffordPolynomial& o) const {
  if (kind_ != o.kind_ || !(ctx_ == o.ctx_))
    throw DimensionError("polynomials of different kind or context");
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CliffordPolynomial CliffordPolynomial::operator-() const { return scaled(-1.0); }

CliffordPolynomial CliffordPolynomial::scaled(double s) const {
  CliffordPolynomial out(kind_, ctx_);
  if (s == 0.0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

CliffordPolynomial CliffordPolynomial::divided(double s) const {
  CliffordPolynomial out(kind_, ctx_);
  for (const auto& [e, c] : terms_) {
    Multivector q = c;
    q /= s;
    out.terms_.emplace(e, std::move(q));
  }
  return out;
}

CliffordPolynomial CliffordPolynomial::left_multiplied(const Multivector& m) const {
  CliffordPolynomial out(kind_, ctx_);
  for (const auto& [e, c] : terms_) out.add_term(e, m * c);
  return out;
}

CliffordPolynomial CliffordPolynomial::right_multiplied(const Multivector& m) const {
  CliffordPolynomial out(kind_, ctx_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * m);
  return out;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  a.require_compatible(b);
  CliffordPolynomial out(a.kind_, a.ctx_);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(a.arity()));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CliffordPolynomial CliffordPolynomial::derivative(int var) const {
  if (var < 0 || var >= arity()) throw DomainError("variable index out of range");
  CliffordPolynomial out(kind_, ctx_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents de = e;
    de[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(de, c * static_cast<double>(k));
  }
  return out;
}

CliffordPolynomial CliffordPolynomial::partial(const MultiIndex& mi) const {
  if (mi.size() > arity()) throw DomainError("multi-index arity too large");
  CliffordPolynomial out = *this;
  for (int v = 0; v < mi.size(); ++v)
    for (int rep = 0; rep < mi.k[static_cast<std::size_t>(v)]; ++rep)
      out = out.derivative(v);
  return out;
}

CliffordPolynomial CliffordPolynomial::negated_variable(int var) const {
  CliffordPolynomial out(kind_, ctx_);
  for (const auto& [e, c] : terms_)
    out.add_term(e, (e[static_cast<std::size_t>(var)] & 1) ? -c : c);
  return out;
}

CliffordPolynomial CliffordPolynomial::shifted_paravector(std::span<const double> b) const {
  if (static_cast<int>(b.size()) != ctx_.p + 1)
    throw DimensionError("shift vector lives on R^{p+1}");
  CliffordPolynomial out(kind_, ctx_);
  Exponents shifted(static_cast<std::size_t>(arity()));
  for (const auto& [e, c] : terms_) {
    // Expand prod (x_i + b_i)^{k_i} over the paravector variables.
    std::vector<int> choice(static_cast<std::size_t>(ctx_.p + 1), 0);
    auto rec = [&](auto&& self, int var, double weight) -> void {
      if (var > ctx_.p) {
        shifted.assign(e.begin(), e.end());
        for (int i = 0; i <= ctx_.p; ++i)
          shifted[static_cast<std::size_t>(i)] = choice[static_cast<std::size_t>(i)];
        out.add_term(shifted, c * weight);
        return;
      }
      const int k = e[static_cast<std::size_t>(var)];
      double binom = 1.0;
      double power = 1.0;
      for (int j = k; j >= 0; --j) {
        // weight of x^j b^{k-j} is C(k, j) b^{k-j}; iterate j downward so the
        // running binomial and power updates stay integer-exact.
        choice[static_cast<std::size_t>(var)] = j;
        self(self, var + 1, weight * binom * power);
        binom = binom * j / (k - j + 1);
        power *= b[static_cast<std::size_t>(var)];
      }
      choice[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, 1.0);
  }
  return out;
}

Multivector CliffordPolynomial::evaluate(std::span<const double> coords) const {
  if (static_cast<int>(coords.size()) != arity())
    throw DimensionError("evaluation arity mismatch");
  Multivector acc(ctx_.n());
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) mono *= coords[i];
    acc.add_scaled(c, mono);
  }
  return acc;
}

bool CliffordPolynomial::is_zero(double tol) const { return max_abs_coefficient() <= tol; }

double CliffordPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.max_abs_coefficient());
  return m;
}

bool approx_equal(const CliffordPolynomial& a, const CliffordPolynomial& b, double tol) {
  return (a - b).is_zero(tol);
}

// --------------------------------------------------------------- operators

namespace {

void require_kind(const CliffordPolynomial& P, CliffordPolynomial::Kind k, const char* op) {
  if (P.kind() != k) throw DomainError(std::string(op) + ": polynomial kind mismatch");
}

}  // namespace

CliffordPolynomial dirac_p(const CliffordPolynomial& P) {
  const auto& ctx = P.context();
  CliffordPolynomial out = P.derivative(0);  // e_0 = 1
  for (int i = 1; i <= ctx.p; ++i)
    out += P.derivative(i).left_multiplied(Multivector::generator(ctx.n(), i));
  return out;
}

CliffordPolynomial dirac_p_conj(const CliffordPolynomial& P) {
  const auto& ctx = P.context();
  CliffordPolynomial out = P.derivative(0);
  for (int i = 1; i <= ctx.p; ++i)
    out -= P.derivative(i).left_multiplied(Multivector::generator(ctx.n(), i));
  return out;
}

CliffordPolynomial slice_dirac(const CliffordPolynomial& P, const Omega& omega) {
  require_kind(P, CliffordPolynomial::Kind::Slice, "slice_dirac");
  CliffordPolynomial out = dirac_p(P);
  out += P.derivative(P.radial_index()).left_multiplied(omega.to_multivector(P.context()));
  return out;
}

CliffordPolynomial slice_dirac_right(const CliffordPolynomial& P, const Omega& omega) {
  require_kind(P, CliffordPolynomial::Kind::Slice, "slice_dirac_right");
  const auto& ctx = P.context();
  CliffordPolynomial out = P.derivative(0);
  for (int i = 1; i <= ctx.p; ++i)
    out += P.derivative(i).right_multiplied(Multivector::generator(ctx.n(), i));
  out += P.derivative(P.radial_index()).right_multiplied(omega.to_multivector(ctx));
  return out;
}

CliffordPolynomial dirac_full(const CliffordPolynomial& P) {
  require_kind(P, CliffordPolynomial::Kind::Full, "dirac_full");
  const auto& ctx = P.context();
  CliffordPolynomial out = P.derivative(0);
  for (int i = 1; i <= ctx.n(); ++i)
    out += P.derivative(i).left_multiplied(Multivector::generator(ctx.n(), i));
  return out;
}

CliffordPolynomial dirac_q(const CliffordPolynomial& P) {
  require_kind(P, CliffordPolynomial::Kind::Full, "dirac_q");
  const auto& ctx = P.context();
  CliffordPolynomial out(P.kind(), ctx);
  for (int i = ctx.p + 1; i <= ctx.n(); ++i)
    out += P.derivative(i).left_multiplied(Multivector::generator(ctx.n(), i));
  return out;
}

CliffordPolynomial euler_q(const CliffordPolynomial& P) {
  require_kind(P, CliffordPolynomial::Kind::Full, "euler_q");
  const auto& ctx = P.context();
  // x_i d/dx_i scales each term by its x_i exponent, so the whole operator
  // scales a term by its trailing degree.
  CliffordPolynomial out(P.kind(), ctx);
  for (const auto& [e, c] : P.terms()) {
    int deg = 0;
    for (int i = ctx.p + 1; i <= ctx.n(); ++i) deg += e[static_cast<std::size_t>(i)];
    if (deg != 0) out.add_term(e, c * static_cast<double>(deg));
  }
  return out;
}

CliffordPolynomial angular_momentum(const CliffordPolynomial& P, int i, int j) {
  require_kind(P, CliffordPolynomial::Kind::Full, "angular_momentum");
  if (i < 0 || j < 0 || i >= P.arity() || j >= P.arity() || i == j)
    throw DomainError("angular momentum needs two distinct variables");
  CliffordPolynomial xi = CliffordPolynomial::variable(P.kind(), P.context(), i);
  CliffordPolynomial xj = CliffordPolynomial::variable(P.kind(), P.context(), j);
  return xi * P.derivative(j) - xj * P.derivative(i);
}

CliffordPolynomial spherical_dirac(const CliffordPolynomial& P) {
  require_kind(P, CliffordPolynomial::Kind::Full, "spherical_dirac");
  const auto& ctx = P.context();
  CliffordPolynomial out(P.kind(), ctx);
  for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
    const auto ei = Multivector::generator(ctx.n(), i);
    for (int j = i + 1; j <= ctx.n(); ++j) {
      const auto eij = ei * Multivector::generator(ctx.n(), j);
      out -= angular_momentum(P, i, j).left_multiplied(eij);
    }
  }
  return out;
}

CliffordPolynomial global_operator(const CliffordPolynomial& P) {
  require_kind(P, CliffordPolynomial::Kind::Full, "global_operator");
  const auto& ctx = P.context();
  return trailing_norm_squared_polynomial(ctx) * dirac_p(P) +
         trailing_vector_polynomial(ctx) * euler_q(P);
}

CliffordPolynomial restrict_to_slice(const CliffordPolynomial& P, const Omega& omega) {
  require_kind(P, CliffordPolynomial::Kind::Full, "restrict_to_slice");
  const auto& ctx = P.context();
  CliffordPolynomial out(CliffordPolynomial::Kind::Slice, ctx);
  CliffordPolynomial::Exponents se(static_cast<std::size_t>(ctx.p + 2));
  for (const auto& [e, c] : P.terms()) {
    double factor = 1.0;
    int rdeg = 0;
    for (int i = 0; i < ctx.q; ++i) {
      const int m = e[static_cast<std::size_t>(ctx.p + 1 + i)];
      rdeg += m;
      for (int rep = 0; rep < m; ++rep) factor *= omega.component(i);
    }
    for (int i = 0; i <= ctx.p; ++i) se[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    se[static_cast<std::size_t>(ctx.p + 1)] = rdeg;
    out.add_term(se, c * factor);
  }
  return out;
}

CliffordPolynomial trailing_vector_polynomial(const SliceContext& ctx) {
  CliffordPolynomial out(CliffordPolynomial::Kind::Full, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.ambient_dim()), 0);
  for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
    e[static_cast<std::size_t>(i)] = 1;
    out.add_term(e, Multivector::generator(ctx.n(), i));
    e[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

CliffordPolynomial trailing_norm_squared_polynomial(const SliceContext& ctx) {
  CliffordPolynomial out(CliffordPolynomial::Kind::Full, ctx);
  CliffordPolynomial::Exponents e(static_cast<std::size_t>(ctx.ambient_dim()), 0);
  for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
    e[static_cast<std::size_t>(i)] = 2;
    out.add_term(e, Multivector::scalar(ctx.n(), 1.0));
    e[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

CliffordPolynomial apply(const OperatorSpec& op, const CliffordPolynomial& P) {
  using Tag = OperatorSpec::Tag;
  switch (op.tag) {
    case Tag::DiracP: return dirac_p(P);
    case Tag::DiracPConj: return dirac_p_conj(P);
    case Tag::DiracQ: return dirac_q(P);
    case Tag::DiracFull: return dirac_full(P);
    case Tag::SliceDirac:
      if (!op.omega) throw DomainError("slice operator needs omega");
      return slice_dirac(P, *op.omega);
    case Tag::SliceDiracRight:
      if (!op.omega) throw DomainError("slice operator needs omega");
      return slice_dirac_right(P, *op.omega);
    case Tag::EulerQ: return euler_q(P);
    case Tag::SphericalDirac: return spherical_dirac(P);
    case Tag::GlobalOperator: return global_operator(P);
    case Tag::Partial:
      if (!op.index) throw DomainError("partial needs a multi-index");
      return P.partial(*op.index);
    case Tag::SlicePartial: {
      if (!op.index || !op.omega) throw DomainError("slice partial needs omega and index");
      const auto restricted = restrict_to_slice(P, *op.omega);
      return restricted.partial(*op.index);
    }
    case Tag::AngularMomentum: return angular_momentum(P, op.i, op.j);
  }
  throw DomainError("unknown operator");
}

}  // namespace psmono
