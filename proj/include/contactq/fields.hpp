// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

#include "contactq/expression.hpp"

namespace contactq {

/// Vector field on a chart: one scalar component per coordinate.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int dim) : comps_(static_cast<std::size_t>(dim)) {}
  explicit VectorField(std::vector<ScalarField> comps) : comps_(std::move(comps)) {}

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }
  ScalarField& component(int i) { return comps_[static_cast<std::size_t>(i)]; }

  /// Directional derivative X.f as a field.
  ScalarField apply(const ScalarField& f) const {
    ScalarField r;
    for (int i = 0; i < dim(); ++i) r = r + comps_[static_cast<std::size_t>(i)] * f.derivative(i);
    return r;
  }

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = a.component(i) + b.component(i);
    return r;
  }
  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = a.component(i) - b.component(i);
    return r;
  }
  friend VectorField operator*(const ScalarField& f, const VectorField& a) {
    VectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.component(i) = f * a.component(i);
    return r;
  }

  std::vector<double> eval(const ChartPoint& p) const {
    std::vector<double> v(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) v[static_cast<std::size_t>(i)] = comps_[static_cast<std::size_t>(i)].eval(p);
    return v;
  }

 private:
  std::vector<ScalarField> comps_;
};

/// Coordinate vector field d/dx_i.
inline VectorField coordinate_vector(int dim, int i) {
  VectorField v(dim);
  v.component(i) = ScalarField::constant(1.0);
  return v;
}

namespace detail {

// Index tuples of a k-form component are strictly increasing, which is
// exactly a bitmask over the coordinate indices.
inline int mask_sign_merge(unsigned a, unsigned b) {
  // Sign of reordering dx^a ^ dx^b into increasing order; masks disjoint.
  int inversions = 0;
  for (unsigned bb = b; bb != 0; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    const unsigned above = a >> (j + 1);
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

inline int mask_position(unsigned mask, int i) {
  // Number of set bits of mask strictly below i.
  return std::popcount(mask & ((1u << i) - 1u));
}

}  // namespace detail

/// Differential form of fixed degree with ScalarField coefficients,
/// stored on strictly increasing index tuples only.
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0 || degree > dim) throw std::invalid_argument("KForm: bad degree");
  }

  static KForm zero(int dim, int degree) { return KForm(dim, degree); }

  /// dx^i
  static KForm coordinate_differential(int dim, int i) {
    KForm w(dim, 1);
    w.set(1u << i, ScalarField::constant(1.0));
    return w;
  }

  static KForm from_function(int dim, const ScalarField& f) {
    KForm w(dim, 0);
    w.set(0u, f);
    return w;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  void set(unsigned mask, const ScalarField& f) {
    if (std::popcount(mask) != degree_) throw std::invalid_argument("KForm::set: mask degree mismatch");
    if (f.is_structural_zero()) {
      comps_.erase(mask);
    } else {
      comps_[mask] = f;
    }
  }

  void add(unsigned mask, const ScalarField& f) {
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
      set(mask, f);
    } else {
      ScalarField s = it->second + f;
      if (s.is_structural_zero()) {
        comps_.erase(it);
      } else {
        it->second = s;
      }
    }
  }

  ScalarField component(unsigned mask) const {
    auto it = comps_.find(mask);
    return it == comps_.end() ? ScalarField() : it->second;
  }

  const std::map<unsigned, ScalarField>& components() const { return comps_; }

  friend KForm operator+(const KForm& a, const KForm& b) {
    KForm r = a;
    for (const auto& [m, f] : b.comps_) r.add(m, f);
    return r;
  }
  friend KForm operator-(const KForm& a, const KForm& b) {
    KForm r = a;
    for (const auto& [m, f] : b.comps_) r.add(m, ScalarField() - f);
    return r;
  }
  friend KForm operator*(const ScalarField& f, const KForm& a) {
    KForm r(a.dim_, a.degree_);
    for (const auto& [m, g] : a.comps_) r.set(m, f * g);
    return r;
  }

  /// Componentwise values at p, keyed by index mask.
  std::map<unsigned, double> eval(const ChartPoint& p) const {
    std::map<unsigned, double> out;
    for (const auto& [m, f] : comps_) out[m] = f.eval(p);
    return out;
  }

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<unsigned, ScalarField> comps_;
};

/// d: degree k -> k+1. Top-degree input yields the zero form of degree dim.
inline KForm exterior_derivative(const KForm& w) {
  const int dim = w.dim();
  if (w.degree() == dim) return KForm::zero(dim, dim);
  KForm r(dim, w.degree() + 1);
  for (const auto& [mask, f] : w.components()) {
    for (int i = 0; i < dim; ++i) {
      const unsigned bit = 1u << i;
      if (mask & bit) continue;
      const int sgn = (detail::mask_position(mask, i) % 2 == 0) ? 1 : -1;
      ScalarField term = f.derivative(i);
      if (sgn < 0) term = ScalarField() - term;
      r.add(mask | bit, term);
    }
  }
  return r;
}

/// Graded-commutative wedge product.
inline KForm wedge(const KForm& a, const KForm& b) {
  if (a.degree() + b.degree() > a.dim())
    return KForm::zero(a.dim(), a.dim());  // no nonzero forms above top degree
  KForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, fa] : a.components()) {
    for (const auto& [mb, fb] : b.components()) {
      if (ma & mb) continue;
      const int sgn = detail::mask_sign_merge(ma, mb);
      ScalarField term = fa * fb;
      if (sgn < 0) term = ScalarField() - term;
      r.add(ma | mb, term);
    }
  }
  return r;
}

/// Interior product (contraction in the first slot). Degree-0 input is
/// rejected; contraction needs at least one slot.
inline KForm interior_product(const VectorField& x, const KForm& w) {
  if (w.degree() < 1) throw std::invalid_argument("interior_product: degree-0 form");
  KForm r(w.dim(), w.degree() - 1);
  for (const auto& [mask, f] : w.components()) {
    for (unsigned mm = mask; mm != 0; mm &= mm - 1) {
      const int i = std::countr_zero(mm);
      const int sgn = (detail::mask_position(mask, i) % 2 == 0) ? 1 : -1;
      ScalarField term = x.component(i) * f;
      if (sgn < 0) term = ScalarField() - term;
      r.add(mask & ~(1u << i), term);
    }
  }
  return r;
}

/// [X,Y]^i = X.Y^i - Y.X^i.
inline VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  VectorField r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    r.component(i) = x.apply(y.component(i)) - y.apply(x.component(i));
  return r;
}

/// Cartan's formula: L_X w = d(i_X w) + i_X (dw).
inline KForm lie_derivative(const VectorField& x, const KForm& w) {
  if (w.degree() == 0) {
    return KForm::from_function(w.dim(), x.apply(w.component(0u)));
  }
  return exterior_derivative(interior_product(x, w)) +
         interior_product(x, exterior_derivative(w));
}

/// Full contraction of a k-form with k vector fields.
inline ScalarField pair_form(KForm w, const std::vector<VectorField>& xs) {
  if (static_cast<int>(xs.size()) != w.degree())
    throw std::invalid_argument("pair_form: arity mismatch");
  for (const auto& x : xs) w = interior_product(x, w);
  return w.component(0u);
}

/// 1-form / vector pairing.
inline ScalarField pair1(const KForm& w, const VectorField& x) { return pair_form(w, {x}); }

}  // namespace contactq
