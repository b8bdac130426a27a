// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cmath>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "contactq/chart.hpp"
#include "contactq/jet.hpp"

namespace contactq {

namespace detail {

enum class ExprKind {
  kConst,
  kCoord,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
  kPow,  // integer exponent
  kSin,
  kCos,
  kExp,
};

struct ExprNode {
  ExprKind kind;
  double cval = 0.0;  // kConst
  int index = 0;      // kCoord
  int exponent = 0;   // kPow
  std::shared_ptr<const ExprNode> a, b;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

inline ExprPtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::kConst;
  n->cval = v;
  return n;
}

inline ExprPtr make_coord(int i) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::kCoord;
  n->index = i;
  return n;
}

inline bool is_const(const ExprPtr& e, double v) {
  return e->kind == ExprKind::kConst && e->cval == v;
}

inline bool is_const(const ExprPtr& e) { return e->kind == ExprKind::kConst; }

// Builders with light constant folding. This is bookkeeping to keep
// derivative trees small, not algebraic simplification.
inline ExprPtr make_binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

inline ExprPtr make_unary(ExprKind k, ExprPtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  return n;
}

inline ExprPtr add(ExprPtr a, ExprPtr b) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->cval + b->cval);
  return make_binary(ExprKind::kAdd, std::move(a), std::move(b));
}

inline ExprPtr sub(ExprPtr a, ExprPtr b) {
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->cval - b->cval);
  if (is_const(a, 0.0)) return make_unary(ExprKind::kNeg, std::move(b));
  return make_binary(ExprKind::kSub, std::move(a), std::move(b));
}

inline ExprPtr mul(ExprPtr a, ExprPtr b) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->cval * b->cval);
  return make_binary(ExprKind::kMul, std::move(a), std::move(b));
}

inline ExprPtr div(ExprPtr a, ExprPtr b) {
  if (is_const(a, 0.0)) return make_const(0.0);
  if (is_const(b, 1.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->cval / b->cval);
  return make_binary(ExprKind::kDiv, std::move(a), std::move(b));
}

inline ExprPtr neg(ExprPtr a) {
  if (is_const(a)) return make_const(-a->cval);
  if (a->kind == ExprKind::kNeg) return a->a;
  return make_unary(ExprKind::kNeg, std::move(a));
}

inline ExprPtr pow_int(ExprPtr a, int k) {
  if (k == 0) return make_const(1.0);
  if (k == 1) return a;
  if (is_const(a)) return make_const(std::pow(a->cval, k));
  auto n = make_unary(ExprKind::kPow, std::move(a));
  const_cast<ExprNode*>(n.get())->exponent = k;
  return n;
}

}  // namespace detail

/// A smooth scalar function on a chart, represented as a composable
/// elementary-function expression over the chart coordinates. Immutable;
/// evaluation is pure and yields exact order-2 jets via the chain rule.
///
/// The language is closed under partial differentiation: derivative()
/// returns another ScalarField, which is what makes the exterior
/// calculus exact at every composition depth.
class ScalarField {
 public:
  ScalarField() : node_(detail::make_const(0.0)) {}
  explicit ScalarField(double c) : node_(detail::make_const(c)) {}

  static ScalarField constant(double c) { return ScalarField(detail::make_const(c)); }
  static ScalarField coordinate(int i) { return ScalarField(detail::make_coord(i)); }

  bool is_structural_zero() const { return detail::is_const(node_, 0.0); }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::add(a.node_, b.node_));
  }
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::sub(a.node_, b.node_));
  }
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::mul(a.node_, b.node_));
  }
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::div(a.node_, b.node_));
  }
  friend ScalarField operator-(const ScalarField& a) { return ScalarField(detail::neg(a.node_)); }

  friend ScalarField operator*(double s, const ScalarField& a) {
    return ScalarField::constant(s) * a;
  }
  friend ScalarField operator*(const ScalarField& a, double s) {
    return a * ScalarField::constant(s);
  }
  friend ScalarField operator+(const ScalarField& a, double s) {
    return a + ScalarField::constant(s);
  }
  friend ScalarField operator-(const ScalarField& a, double s) {
    return a - ScalarField::constant(s);
  }

  /// Exact jet (value, gradient, Hessian) at p. Shared subtrees are
  /// evaluated once per call; safe for concurrent use.
  Jet2 eval_jet(const ChartPoint& p) const {
    std::unordered_map<const detail::ExprNode*, Jet2> memo;
    return eval_jet_node(node_.get(), p, memo);
  }

  /// Value only; cheaper than eval_jet on large trees.
  double eval(const ChartPoint& p) const {
    std::unordered_map<const detail::ExprNode*, double> memo;
    return eval_node(node_.get(), p, memo);
  }

  /// Symbolic partial derivative with respect to coordinate i.
  ScalarField derivative(int i) const {
    std::unordered_map<const detail::ExprNode*, detail::ExprPtr> memo;
    return ScalarField(deriv_node(node_, i, memo));
  }

  /// Substitutes args[i] for coordinate i. Used for pullbacks along
  /// explicit chart maps.
  ScalarField substitute(std::span<const ScalarField> args) const {
    std::unordered_map<const detail::ExprNode*, detail::ExprPtr> memo;
    return ScalarField(subst_node(node_, args, memo));
  }

  friend ScalarField sin(const ScalarField& a) {
    using namespace detail;
    if (is_const(a.node_)) return ScalarField::constant(std::sin(a.node_->cval));
    return ScalarField(make_unary(ExprKind::kSin, a.node_));
  }
  friend ScalarField cos(const ScalarField& a) {
    using namespace detail;
    if (is_const(a.node_)) return ScalarField::constant(std::cos(a.node_->cval));
    return ScalarField(make_unary(ExprKind::kCos, a.node_));
  }
  friend ScalarField exp(const ScalarField& a) {
    using namespace detail;
    if (is_const(a.node_)) return ScalarField::constant(std::exp(a.node_->cval));
    return ScalarField(make_unary(ExprKind::kExp, a.node_));
  }
  friend ScalarField pow_int(const ScalarField& a, int k) {
    return ScalarField(detail::pow_int(a.node_, k));
  }

 private:
  explicit ScalarField(detail::ExprPtr n) : node_(std::move(n)) {}

  static Jet2 eval_jet_node(const detail::ExprNode* n, const ChartPoint& p,
                            std::unordered_map<const detail::ExprNode*, Jet2>& memo) {
    using detail::ExprKind;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Jet2 r;
    switch (n->kind) {
      case ExprKind::kConst:
        r = Jet2::constant(p.dim(), n->cval);
        break;
      case ExprKind::kCoord:
        r = Jet2::coordinate(p.dim(), n->index, p[n->index]);
        break;
      case ExprKind::kAdd:
        r = eval_jet_node(n->a.get(), p, memo) + eval_jet_node(n->b.get(), p, memo);
        break;
      case ExprKind::kSub:
        r = eval_jet_node(n->a.get(), p, memo) - eval_jet_node(n->b.get(), p, memo);
        break;
      case ExprKind::kMul:
        r = eval_jet_node(n->a.get(), p, memo) * eval_jet_node(n->b.get(), p, memo);
        break;
      case ExprKind::kDiv:
        r = eval_jet_node(n->a.get(), p, memo) / eval_jet_node(n->b.get(), p, memo);
        break;
      case ExprKind::kNeg:
        r = -eval_jet_node(n->a.get(), p, memo);
        break;
      case ExprKind::kPow:
        r = pow_int(eval_jet_node(n->a.get(), p, memo), n->exponent);
        break;
      case ExprKind::kSin:
        r = sin(eval_jet_node(n->a.get(), p, memo));
        break;
      case ExprKind::kCos:
        r = cos(eval_jet_node(n->a.get(), p, memo));
        break;
      case ExprKind::kExp:
        r = exp(eval_jet_node(n->a.get(), p, memo));
        break;
    }
    memo.emplace(n, r);
    return r;
  }

  static double eval_node(const detail::ExprNode* n, const ChartPoint& p,
                          std::unordered_map<const detail::ExprNode*, double>& memo) {
    using detail::ExprKind;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    double r = 0.0;
    switch (n->kind) {
      case ExprKind::kConst: r = n->cval; break;
      case ExprKind::kCoord: r = p[n->index]; break;
      case ExprKind::kAdd: r = eval_node(n->a.get(), p, memo) + eval_node(n->b.get(), p, memo); break;
      case ExprKind::kSub: r = eval_node(n->a.get(), p, memo) - eval_node(n->b.get(), p, memo); break;
      case ExprKind::kMul: r = eval_node(n->a.get(), p, memo) * eval_node(n->b.get(), p, memo); break;
      case ExprKind::kDiv: r = eval_node(n->a.get(), p, memo) / eval_node(n->b.get(), p, memo); break;
      case ExprKind::kNeg: r = -eval_node(n->a.get(), p, memo); break;
      case ExprKind::kPow: r = std::pow(eval_node(n->a.get(), p, memo), n->exponent); break;
      case ExprKind::kSin: r = std::sin(eval_node(n->a.get(), p, memo)); break;
      case ExprKind::kCos: r = std::cos(eval_node(n->a.get(), p, memo)); break;
      case ExprKind::kExp: r = std::exp(eval_node(n->a.get(), p, memo)); break;
    }
    memo.emplace(n, r);
    return r;
  }

  static detail::ExprPtr deriv_node(
      const detail::ExprPtr& n, int i,
      std::unordered_map<const detail::ExprNode*, detail::ExprPtr>& memo) {
    using namespace detail;
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    ExprPtr r;
    switch (n->kind) {
      case ExprKind::kConst:
        r = make_const(0.0);
        break;
      case ExprKind::kCoord:
        r = make_const(n->index == i ? 1.0 : 0.0);
        break;
      case ExprKind::kAdd:
        r = add(deriv_node(n->a, i, memo), deriv_node(n->b, i, memo));
        break;
      case ExprKind::kSub:
        r = sub(deriv_node(n->a, i, memo), deriv_node(n->b, i, memo));
        break;
      case ExprKind::kMul:
        r = add(mul(deriv_node(n->a, i, memo), n->b), mul(n->a, deriv_node(n->b, i, memo)));
        break;
      case ExprKind::kDiv:
        // (a/b)' = a'/b - a b'/b^2
        r = sub(div(deriv_node(n->a, i, memo), n->b),
                div(mul(n->a, deriv_node(n->b, i, memo)), pow_int(n->b, 2)));
        break;
      case ExprKind::kNeg:
        r = neg(deriv_node(n->a, i, memo));
        break;
      case ExprKind::kPow:
        r = mul(mul(make_const(n->exponent), pow_int(n->a, n->exponent - 1)),
                deriv_node(n->a, i, memo));
        break;
      case ExprKind::kSin:
        r = mul(make_unary(ExprKind::kCos, n->a), deriv_node(n->a, i, memo));
        break;
      case ExprKind::kCos:
        r = neg(mul(make_unary(ExprKind::kSin, n->a), deriv_node(n->a, i, memo)));
        break;
      case ExprKind::kExp:
        r = mul(make_unary(ExprKind::kExp, n->a), deriv_node(n->a, i, memo));
        break;
    }
    memo.emplace(n.get(), r);
    return r;
  }

  static detail::ExprPtr subst_node(
      const detail::ExprPtr& n, std::span<const ScalarField> args,
      std::unordered_map<const detail::ExprNode*, detail::ExprPtr>& memo) {
    using namespace detail;
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    ExprPtr r;
    switch (n->kind) {
      case ExprKind::kConst:
        r = n;
        break;
      case ExprKind::kCoord:
        assert(n->index < static_cast<int>(args.size()));
        r = args[static_cast<std::size_t>(n->index)].node_;
        break;
      case ExprKind::kAdd:
        r = add(subst_node(n->a, args, memo), subst_node(n->b, args, memo));
        break;
      case ExprKind::kSub:
        r = sub(subst_node(n->a, args, memo), subst_node(n->b, args, memo));
        break;
      case ExprKind::kMul:
        r = mul(subst_node(n->a, args, memo), subst_node(n->b, args, memo));
        break;
      case ExprKind::kDiv:
        r = div(subst_node(n->a, args, memo), subst_node(n->b, args, memo));
        break;
      case ExprKind::kNeg:
        r = neg(subst_node(n->a, args, memo));
        break;
      case ExprKind::kPow:
        r = pow_int(subst_node(n->a, args, memo), n->exponent);
        break;
      case ExprKind::kSin:
        r = make_unary(ExprKind::kSin, subst_node(n->a, args, memo));
        break;
      case ExprKind::kCos:
        r = make_unary(ExprKind::kCos, subst_node(n->a, args, memo));
        break;
      case ExprKind::kExp:
        r = make_unary(ExprKind::kExp, subst_node(n->a, args, memo));
        break;
    }
    memo.emplace(n.get(), r);
    return r;
  }

  detail::ExprPtr node_;
};

/// Jet evaluation with the chart-domain precondition enforced.
inline Jet2 eval_jet(const ScalarField& f, const ChartDomain& dom, const ChartPoint& p) {
  require_in_domain(dom, p, "eval_jet");
  return f.eval_jet(p);
}

}  // namespace contactq
