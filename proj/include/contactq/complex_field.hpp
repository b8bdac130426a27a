// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "contactq/fields.hpp"

namespace contactq {

/// Complex-valued scalar field as a pair of real fields. There is no
/// dedicated complex jet type; everything reuses the real kernel.
struct CField {
  ScalarField re, im;

  CField() = default;
  CField(ScalarField r, ScalarField i) : re(std::move(r)), im(std::move(i)) {}
  explicit CField(double r) : re(ScalarField::constant(r)) {}
  CField(double r, double i) : re(ScalarField::constant(r)), im(ScalarField::constant(i)) {}

  static CField constant(std::complex<double> c) { return CField(c.real(), c.imag()); }
  static CField from_real(const ScalarField& f) { return CField(f, ScalarField()); }

  CField conj() const { return CField(re, ScalarField() - im); }

  std::complex<double> eval(const ChartPoint& p) const { return {re.eval(p), im.eval(p)}; }

  CField derivative(int i) const { return CField(re.derivative(i), im.derivative(i)); }

  friend CField operator+(const CField& a, const CField& b) { return {a.re + b.re, a.im + b.im}; }
  friend CField operator-(const CField& a, const CField& b) { return {a.re - b.re, a.im - b.im}; }
  friend CField operator-(const CField& a) { return {ScalarField() - a.re, ScalarField() - a.im}; }
  friend CField operator*(const CField& a, const CField& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CField operator*(std::complex<double> c, const CField& a) {
    return CField::constant(c) * a;
  }
  friend CField operator*(const ScalarField& f, const CField& a) { return {f * a.re, f * a.im}; }
};

/// i*f
inline CField rotate_i(const CField& f) { return CField(ScalarField() - f.im, f.re); }

/// Complex vector field (e.g. a CR frame field) as complex components.
struct CVectorField {
  std::vector<CField> comps;

  CVectorField() = default;
  explicit CVectorField(int dim) : comps(static_cast<std::size_t>(dim)) {}

  int dim() const { return static_cast<int>(comps.size()); }
  const CField& component(int i) const { return comps[static_cast<std::size_t>(i)]; }
  CField& component(int i) { return comps[static_cast<std::size_t>(i)]; }

  CVectorField conj() const {
    CVectorField r(dim());
    for (int i = 0; i < dim(); ++i) r.component(i) = comps[static_cast<std::size_t>(i)].conj();
    return r;
  }

  /// Z.f for complex f: complex-linear directional derivative.
  CField apply(const CField& f) const {
    CField r;
    for (int i = 0; i < dim(); ++i) r = r + component(i) * f.derivative(i);
    return r;
  }
  CField apply(const ScalarField& f) const { return apply(CField::from_real(f)); }

  friend CVectorField operator+(const CVectorField& a, const CVectorField& b) {
    CVectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = a.component(i) + b.component(i);
    return r;
  }
  friend CVectorField operator-(const CVectorField& a, const CVectorField& b) {
    CVectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = a.component(i) - b.component(i);
    return r;
  }
  friend CVectorField operator*(const CField& f, const CVectorField& a) {
    CVectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = f * a.component(i);
    return r;
  }

  std::vector<std::complex<double>> eval(const ChartPoint& p) const {
    std::vector<std::complex<double>> v(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) v[static_cast<std::size_t>(i)] = component(i).eval(p);
    return v;
  }
};

inline CVectorField complexify(const VectorField& x) {
  CVectorField r(x.dim());
  for (int i = 0; i < x.dim(); ++i) r.component(i) = CField::from_real(x.component(i));
  return r;
}

/// [A,B] for complex vector fields, componentwise complex chain rule.
inline CVectorField lie_bracket(const CVectorField& a, const CVectorField& b) {
  CVectorField r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    r.component(i) = a.apply(b.component(i)) - b.apply(a.component(i));
  return r;
}

/// Pairing of a real 1-form with a complex vector, extended C-linearly.
inline CField pair1_complex(const KForm& w, const CVectorField& z) {
  CField r;
  for (const auto& [mask, f] : w.components()) {
    const int i = std::countr_zero(mask);
    r = r + f * z.component(i);
  }
  return r;
}

/// Bilinear extension of a real 2-form to complex vectors.
inline CField pair2_complex(const KForm& w, const CVectorField& z1, const CVectorField& z2) {
  CField r;
  for (const auto& [mask, f] : w.components()) {
    unsigned m = mask;
    const int i = std::countr_zero(m);
    m &= m - 1;
    const int j = std::countr_zero(m);
    // w = f dx^i ^ dx^j with i < j
    r = r + f * (z1.component(i) * z2.component(j) - z1.component(j) * z2.component(i));
  }
  return r;
}

}  // namespace contactq
