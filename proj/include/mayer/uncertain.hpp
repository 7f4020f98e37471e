#pragma once

#include <cmath>
#include <cstddef>

#include <Eigen/Core>

namespace mayer {

/// First-order error propagation: a value plus its gradient with respect
/// to independent inputs, each input scaled to unit standard deviation.
/// An empty gradient stands for an exact constant.
class Uncertain {
 public:
  Uncertain(double value = 0.0) : value_(value) {}  // NOLINT: implicit constants

  /// Input number `index` out of `inputs`, with standard error `sigma`.
  static Uncertain input(double value, double sigma, std::size_t index, std::size_t inputs) {
    Uncertain u(value);
    u.grad_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(inputs));
    u.grad_[static_cast<Eigen::Index>(index)] = sigma;
    return u;
  }

  double value() const { return value_; }
  double standard_error() const { return grad_.size() == 0 ? 0.0 : grad_.norm(); }
  const Eigen::VectorXd& gradient() const { return grad_; }

  Uncertain operator-() const { return {-value_, -grad_}; }

  friend Uncertain operator+(const Uncertain& a, const Uncertain& b) {
    return {a.value_ + b.value_, combine(a.grad_, 1.0, b.grad_, 1.0)};
  }
  friend Uncertain operator-(const Uncertain& a, const Uncertain& b) {
    return {a.value_ - b.value_, combine(a.grad_, 1.0, b.grad_, -1.0)};
  }
  friend Uncertain operator*(const Uncertain& a, const Uncertain& b) {
    return {a.value_ * b.value_, combine(a.grad_, b.value_, b.grad_, a.value_)};
  }
  friend Uncertain operator/(const Uncertain& a, const Uncertain& b) {
    const double q = a.value_ / b.value_;
    return {q, combine(a.grad_, 1.0 / b.value_, b.grad_, -q / b.value_)};
  }
  Uncertain& operator+=(const Uncertain& o) { return *this = *this + o; }
  Uncertain& operator-=(const Uncertain& o) { return *this = *this - o; }
  Uncertain& operator*=(const Uncertain& o) { return *this = *this * o; }
  Uncertain& operator/=(const Uncertain& o) { return *this = *this / o; }

 private:
  Uncertain(double value, Eigen::VectorXd grad) : value_(value), grad_(std::move(grad)) {}

  static Eigen::VectorXd combine(const Eigen::VectorXd& a, double sa, const Eigen::VectorXd& b,
                                 double sb) {
    if (a.size() == 0) return b.size() == 0 ? Eigen::VectorXd() : Eigen::VectorXd(sb * b);
    if (b.size() == 0) return sa * a;
    return sa * a + sb * b;
  }

  double value_;
  Eigen::VectorXd grad_;
};

}  // namespace mayer
