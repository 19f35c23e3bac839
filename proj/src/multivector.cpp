#include "psmono/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "psmono/simd_kernels.hpp"

namespace psmono {

Multivector Multivector::paravector(int n, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != n + 1)
    throw DimensionError("paravector needs n+1 coordinates");
  Multivector m(n);
  m.c_[0] = coords[0];
  for (int i = 1; i <= n; ++i) m.c_[Blade{1} << (i - 1)] = coords[i];
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(o);
  kernels::active().add(c_.data(), c_.data(), o.c_.data(), c_.size());
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(o);
  kernels::active().sub(c_.data(), c_.data(), o.c_.data(), c_.size());
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  kernels::active().scale(c_.data(), c_.data(), s, c_.size());
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (auto i = std::size_t{0}; i < c_.size(); ++i) c_[i] /= s;
  return *this;
}

Multivector& Multivector::add_scaled(const Multivector& o, double s) {
  require_same(o);
  kernels::active().axpy(c_.data(), o.c_.data(), s, c_.size());
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  a.require_same(b);
  const std::size_t len = a.size();
  Multivector out(a.generators());

  std::size_t nnz_a = 0, nnz_b = 0;
  for (std::size_t i = 0; i < len; ++i) nnz_a += a.c_[i] != 0.0;
  for (std::size_t i = 0; i < len; ++i) nnz_b += b.c_[i] != 0.0;
  if (nnz_a == 0 || nnz_b == 0) return out;

  // Sparse operands: direct pairwise blade products. Dense-ish ones: one
  // signed XOR-permuted accumulation per nonzero blade of the sparser side.
  if (nnz_a * nnz_b <= std::min(nnz_a, nnz_b) * len / 2) {
    for (std::size_t i = 0; i < len; ++i) {
      const double ca = a.c_[i];
      if (ca == 0.0) continue;
      const Blade bi = static_cast<Blade>(i);
      const Blade mask = left_sign_mask(bi);
      for (std::size_t j = 0; j < len; ++j) {
        const double cb = b.c_[j];
        if (cb == 0.0) continue;
        const Blade bj = static_cast<Blade>(j);
        const double v = ca * cb;
        out.c_[bi ^ bj] += (std::popcount(bj & mask) & 1) ? -v : v;
      }
    }
    return out;
  }

  const auto& k = kernels::active();
  if (nnz_b <= nnz_a) {
    // out[A ^ B] += sign(A, B) a[A] c_B, rewritten over the output index.
    for (std::size_t j = 0; j < len; ++j) {
      const double cb = b.c_[j];
      if (cb == 0.0) continue;
      const Blade bj = static_cast<Blade>(j);
      const Blade mask = right_sign_mask(bj);
      const double s = (std::popcount(bj & mask) & 1) ? -cb : cb;
      k.xor_signed_axpy(out.c_.data(), a.c_.data(), len, bj, mask, s);
    }
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      const double ca = a.c_[i];
      if (ca == 0.0) continue;
      const Blade bi = static_cast<Blade>(i);
      const Blade mask = left_sign_mask(bi);
      const double s = (std::popcount(bi & mask) & 1) ? -ca : ca;
      k.xor_signed_axpy(out.c_.data(), b.c_.data(), len, bi, mask, s);
    }
  }
  return out;
}

Multivector Multivector::conjugate() const {
  Multivector out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = c_[i] * conjugation_sign(blade_grade(static_cast<Blade>(i)));
  return out;
}

Multivector Multivector::reverse() const {
  Multivector out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = c_[i] * reversion_sign(blade_grade(static_cast<Blade>(i)));
  return out;
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (blade_grade(static_cast<Blade>(i)) == k) out.c_[i] = c_[i];
  return out;
}

double Multivector::norm() const {
  return std::sqrt(kernels::active().sum_squares(c_.data(), c_.size()));
}

double Multivector::max_abs_coefficient() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

int Multivector::max_grade(double tol) const {
  int g = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (std::abs(c_[i]) > tol) g = std::max(g, blade_grade(static_cast<Blade>(i)));
  return g;
}

std::vector<double> Multivector::paravector_coords(double tol) const {
  if (!is_paravector(tol)) throw DomainError("multivector has grade >= 2 components");
  std::vector<double> coords(static_cast<std::size_t>(n_) + 1);
  coords[0] = c_[0];
  for (int i = 1; i <= n_; ++i) coords[i] = c_[Blade{1} << (i - 1)];
  return coords;
}

Multivector Multivector::paravector_inverse() const {
  if (!is_paravector(0.0)) throw DomainError("inverse defined for paravectors only");
  const double nsq = kernels::active().sum_squares(c_.data(), c_.size());
  if (nsq == 0.0) throw SingularityError("zero paravector has no inverse");
  Multivector out = conjugate();
  out *= 1.0 / nsq;
  return out;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  if (a.generators() != b.generators()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a.coefficients()[i] - b.coefficients()[i]) > tol) return false;
  return true;
}

}  // namespace psmono
