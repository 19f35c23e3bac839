#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psmono/blades.hpp"
#include "psmono/errors.hpp"

namespace psmono {

/// The universal real Clifford algebra R_n with e_i^2 = -1 for all i.
struct AlgebraSignature {
  int n;

  explicit AlgebraSignature(int generators) : n(generators) {
    if (n < 1 || n > kMaxGenerators)
      throw DomainError("algebra needs 1 <= n <= " + std::to_string(kMaxGenerators) +
                        " generators, got " + std::to_string(generators));
  }
  std::size_t dimension() const { return std::size_t{1} << n; }
  friend bool operator==(AlgebraSignature a, AlgebraSignature b) { return a.n == b.n; }
};

// Dense element of R_n: one double per basis blade, indexed by the blade
// bitset. Values are immutable in spirit; all operations return fresh
// objects and are safe to run concurrently on shared inputs.
class Multivector {
 public:
  explicit Multivector(int n) : n_(check(n)), c_(std::size_t{1} << n, 0.0) {}
  explicit Multivector(AlgebraSignature sig) : Multivector(sig.n) {}

  static Multivector scalar(int n, double v) {
    Multivector m(n);
    m.c_[0] = v;
    return m;
  }

  /// Single basis blade e_A with coefficient v.
  static Multivector blade(int n, Blade a, double v = 1.0) {
    Multivector m(n);
    m.at(a) = v;
    return m;
  }

  /// Generator e_i, 1-based (e_0 is the scalar unit).
  static Multivector generator(int n, int i) {
    if (i < 0 || i > n) throw DomainError("generator index out of range");
    return i == 0 ? scalar(n, 1.0) : blade(n, Blade{1} << (i - 1));
  }

  /// Paravector x_0 + x_1 e_1 + ... + x_n e_n from n+1 coordinates.
  static Multivector paravector(int n, std::span<const double> coords);

  int generators() const { return n_; }
  std::size_t size() const { return c_.size(); }
  double operator[](Blade a) const { return c_[a]; }
  double& at(Blade a) { return c_[a]; }
  std::span<const double> coefficients() const { return c_; }

  double scalar_part() const { return c_[0]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  /// True division per coefficient (one rounding, unlike multiplying by 1/s).
  Multivector& operator/=(double s);
  /// *this += s * o, fused.
  Multivector& add_scaled(const Multivector& o, double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  /// Geometric product; bilinear extension of the blade product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  /// Clifford conjugation: grade-k blades pick up (-1)^{k(k+1)/2}.
  Multivector conjugate() const;
  /// Reversion: grade-k blades pick up (-1)^{k(k-1)/2}.
  Multivector reverse() const;
  /// Keep only the grade-k part.
  Multivector grade_part(int k) const;

  /// Euclidean coefficient norm; for paravector products it coincides with
  /// the square root of the scalar part of a * conjugate(a).
  double norm() const;
  double max_abs_coefficient() const;
  bool is_zero(double tol = 0.0) const { return max_abs_coefficient() <= tol; }
  int max_grade(double tol = 0.0) const;

  bool is_paravector(double tol = 0.0) const { return max_grade(tol) <= 1; }
  /// The n+1 paravector coordinates; throws unless grade <= 1 within tol.
  std::vector<double> paravector_coords(double tol = 1e-12) const;
  /// conjugate(x) / |x|^2 for a nonzero paravector.
  Multivector paravector_inverse() const;

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  static int check(int n) {
    if (n < 1 || n > kMaxGenerators) throw DomainError("unsupported generator count");
    return n;
  }
  void require_same(const Multivector& o) const {
    if (n_ != o.n_) throw DimensionError("multivectors from different algebras");
  }

  int n_;
  std::vector<double> c_;
};

bool approx_equal(const Multivector& a, const Multivector& b, double tol);

}  // namespace psmono
