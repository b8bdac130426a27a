// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cassert>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactq/jet.hpp"

namespace contactq {

/// A point in a coordinate chart. Dimension is odd and >= 3 for the
/// contact models, but the type itself only enforces the storage bound.
class ChartPoint {
 public:
  ChartPoint() : dim_(0) { x_.fill(0.0); }

  ChartPoint(std::initializer_list<double> coords) : dim_(static_cast<int>(coords.size())) {
    assert(dim_ <= kMaxDim);
    x_.fill(0.0);
    int i = 0;
    for (double c : coords) x_[static_cast<std::size_t>(i++)] = c;
  }

  explicit ChartPoint(const std::vector<double>& coords) : dim_(static_cast<int>(coords.size())) {
    assert(dim_ <= kMaxDim);
    x_.fill(0.0);
    for (int i = 0; i < dim_; ++i) x_[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)];
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x_[static_cast<std::size_t>(i)]; }

 private:
  int dim_;
  std::array<double, kMaxDim> x_;
};

/// Open box domain of a chart, with a (possibly smaller) box used for
/// random sampling. Unbounded coordinates use +/- infinity.
class ChartDomain {
 public:
  ChartDomain() = default;

  explicit ChartDomain(int dim) : dim_(dim) {
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim; ++i) {
      valid_lo_.push_back(-inf);
      valid_hi_.push_back(inf);
      sample_lo_.push_back(-1.0);
      sample_hi_.push_back(1.0);
    }
  }

  int dim() const { return dim_; }

  void set_valid(int i, double lo, double hi) {
    valid_lo_[static_cast<std::size_t>(i)] = lo;
    valid_hi_[static_cast<std::size_t>(i)] = hi;
  }

  void set_sample(int i, double lo, double hi) {
    sample_lo_[static_cast<std::size_t>(i)] = lo;
    sample_hi_[static_cast<std::size_t>(i)] = hi;
  }

  bool contains(const ChartPoint& p) const {
    if (p.dim() != dim_) return false;
    for (int i = 0; i < dim_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (!(p[i] > valid_lo_[k] && p[i] < valid_hi_[k])) return false;
    }
    return true;
  }

  double sample_lo(int i) const { return sample_lo_[static_cast<std::size_t>(i)]; }
  double sample_hi(int i) const { return sample_hi_[static_cast<std::size_t>(i)]; }

 private:
  int dim_ = 0;
  std::vector<double> valid_lo_, valid_hi_;
  std::vector<double> sample_lo_, sample_hi_;
};

/// Thrown when an input point lies outside the declared chart domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_in_domain(const ChartDomain& dom, const ChartPoint& p,
                              const std::string& what) {
  if (!dom.contains(p)) throw DomainError(what + ": point outside chart domain");
}

}  // namespace contactq
