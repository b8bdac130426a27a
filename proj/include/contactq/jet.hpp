// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace contactq {

/// Maximum chart dimension supported by the fixed-size jet storage.
inline constexpr int kMaxDim = 7;

/// Order-2 jet of a smooth function at a point: value, gradient, and
/// symmetric Hessian. The Hessian is stored as a packed upper triangle,
/// so symmetry holds to machine exactness by construction.
///
/// All arithmetic propagates derivatives through the exact chain rule;
/// nothing here is a finite difference.
class Jet2 {
 public:
  Jet2() : dim_(0), v_(0.0) {}

  explicit Jet2(int dim, double value = 0.0) : dim_(dim), v_(value) {
    assert(dim >= 0 && dim <= kMaxDim);
    g_.fill(0.0);
    h_.fill(0.0);
  }

  static Jet2 constant(int dim, double value) { return Jet2(dim, value); }

  /// Jet of the coordinate function x_index evaluated at x_index = value.
  static Jet2 coordinate(int dim, int index, double value) {
    Jet2 j(dim, value);
    assert(index >= 0 && index < dim);
    j.g_[static_cast<std::size_t>(index)] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  double value() const { return v_; }

  double grad(int i) const {
    assert(i >= 0 && i < dim_);
    return g_[static_cast<std::size_t>(i)];
  }

  /// Symmetric access: hess(i, j) == hess(j, i) for free.
  double hess(int i, int j) const { return h_[pack(i, j)]; }

  double& grad_ref(int i) { return g_[static_cast<std::size_t>(i)]; }
  double& hess_ref(int i, int j) { return h_[pack(i, j)]; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r.v_ += b.v_;
    for (std::size_t k = 0; k < a.gsize(); ++k) r.g_[k] += b.g_[k];
    for (std::size_t k = 0; k < a.hsize(); ++k) r.h_[k] += b.h_[k];
    return r;
  }

  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r.v_ -= b.v_;
    for (std::size_t k = 0; k < a.gsize(); ++k) r.g_[k] -= b.g_[k];
    for (std::size_t k = 0; k < a.hsize(); ++k) r.h_[k] -= b.h_[k];
    return r;
  }

  friend Jet2 operator-(const Jet2& a) {
    Jet2 r = a;
    r.v_ = -r.v_;
    for (std::size_t k = 0; k < a.gsize(); ++k) r.g_[k] = -r.g_[k];
    for (std::size_t k = 0; k < a.hsize(); ++k) r.h_[k] = -r.h_[k];
    return r;
  }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.dim_);
    r.v_ = a.v_ * b.v_;
    for (int i = 0; i < a.dim_; ++i)
      r.g_[static_cast<std::size_t>(i)] = a.v_ * b.grad(i) + b.v_ * a.grad(i);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = i; j < a.dim_; ++j)
        r.h_[r.pack(i, j)] = a.v_ * b.hess(i, j) + b.v_ * a.hess(i, j) +
                             a.grad(i) * b.grad(j) + a.grad(j) * b.grad(i);
    return r;
  }

  friend Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    r.v_ *= s;
    for (std::size_t k = 0; k < a.gsize(); ++k) r.g_[k] *= s;
    for (std::size_t k = 0; k < a.hsize(); ++k) r.h_[k] *= s;
    return r;
  }

  friend Jet2 operator*(const Jet2& a, double s) { return s * a; }

  /// Reciprocal: d(1/b) = -b_i/b^2, d^2(1/b) = 2 b_i b_j / b^3 - b_ij / b^2.
  Jet2 reciprocal() const {
    Jet2 r(dim_);
    const double iv = 1.0 / v_;
    const double iv2 = iv * iv;
    r.v_ = iv;
    for (int i = 0; i < dim_; ++i) r.g_[static_cast<std::size_t>(i)] = -grad(i) * iv2;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        r.h_[pack(i, j)] = (2.0 * grad(i) * grad(j) * iv - hess(i, j)) * iv2;
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.reciprocal(); }

  /// Composition with a scalar function given by f(v), f'(v), f''(v).
  Jet2 compose(double f, double fp, double fpp) const {
    Jet2 r(dim_);
    r.v_ = f;
    for (int i = 0; i < dim_; ++i) r.g_[static_cast<std::size_t>(i)] = fp * grad(i);
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        r.h_[pack(i, j)] = fp * hess(i, j) + fpp * grad(i) * grad(j);
    return r;
  }

 private:
  std::size_t gsize() const { return static_cast<std::size_t>(dim_); }
  std::size_t hsize() const { return static_cast<std::size_t>(dim_ * (dim_ + 1) / 2); }

  std::size_t pack(int i, int j) const {
    assert(i >= 0 && i < dim_ && j >= 0 && j < dim_);
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * dim_ - i * (i + 1) / 2 + j);
  }

  int dim_;
  double v_;
  std::array<double, kMaxDim> g_{};
  std::array<double, kMaxDim*(kMaxDim + 1) / 2> h_{};
};

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s);
}

inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c);
}

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}

inline Jet2 pow_int(const Jet2& a, int k) {
  if (k == 0) return Jet2::constant(a.dim(), 1.0);
  if (k == 1) return a;
  const double v = a.value();
  const double f = std::pow(v, k);
  const double fp = k * std::pow(v, k - 1);
  const double fpp = static_cast<double>(k) * (k - 1) * std::pow(v, k - 2);
  return a.compose(f, fp, fpp);
}

}  // namespace contactq
