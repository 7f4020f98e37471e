#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mayer/common.hpp"
#include "mayer/partitions.hpp"
#include "mayer/uncertain.hpp"

namespace mayer {

/// Arithmetic operations performed by an evaluation. Multiplications and
/// divisions by an exact 1 are skipped rather than counted. A factorial
/// lookup counts once in total(); strict_total() instead charges the
/// k-2 multiplications needed to form k! from scratch.
struct OpCounter {
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  std::int64_t divisions = 0;
  std::int64_t factorial_lookups = 0;
  std::int64_t factorial_multiplications = 0;

  std::int64_t total() const { return additions + multiplications + divisions + factorial_lookups; }
  std::int64_t strict_total() const {
    return additions + multiplications + divisions + factorial_multiplications;
  }
  void lookup(int k) {
    ++factorial_lookups;
    factorial_multiplications += std::max(k - 2, 0);
  }
  OpCounter& operator+=(const OpCounter& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    divisions += o.divisions;
    factorial_lookups += o.factorial_lookups;
    factorial_multiplications += o.factorial_multiplications;
    return *this;
  }
};

template <class S>
S scalar_from(const Integer& k);
template <>
inline Rational scalar_from<Rational>(const Integer& k) { return Rational(k); }
template <>
inline double scalar_from<double>(const Integer& k) { return k.convert_to<double>(); }
template <>
inline Uncertain scalar_from<Uncertain>(const Integer& k) { return Uncertain(k.convert_to<double>()); }

inline double value_of(const Rational& q) { return q.convert_to<double>(); }
inline double value_of(double x) { return x; }
inline double value_of(const Uncertain& u) { return u.value(); }

/// Q(x; y; m) = prod_j (y_j x_j)^{m_j} / m_j!. Integer y_j equal to 1
/// cost no multiplication.
template <class S>
S q_eval(std::span<const S> x, std::span<const int> y, const PartitionVector& m, OpCounter& ops) {
  if (static_cast<int>(x.size()) != m.length() || static_cast<int>(y.size()) != m.length())
    throw ValidationError("Q needs x, y and m of equal length (got " + std::to_string(x.size()) +
                          ", " + std::to_string(y.size()) + ", " + std::to_string(m.length()) + ")");
  if (std::any_of(m.m.begin(), m.m.end(), [](int v) { return v < 0; }))
    throw ValidationError("negative multiplicity in m");
  if (m.norm() == 0) throw ValidationError("m must have a positive entry");

  S product{};
  bool started = false;
  Integer denominator = 1;
  bool divides = false;
  for (int j = 0; j < m.length(); ++j) {
    const int mj = m.m[j];
    if (mj == 0) continue;
    S base = x[j];
    if (y[j] != 1) {
      base = base * scalar_from<S>(y[j]);
      ++ops.multiplications;
    }
    S power = base;
    for (int k = 1; k < mj; ++k) {
      power = power * base;
      ++ops.multiplications;
    }
    if (started) {
      product = product * power;
      ++ops.multiplications;
    } else {
      product = power;
      started = true;
    }
    if (mj >= 2) {
      ops.lookup(mj);
      if (divides) ++ops.multiplications;
      denominator *= factorial(mj);
      divides = true;
    }
  }
  if (divides) {
    product = product / scalar_from<S>(denominator);
    ++ops.divisions;
  }
  return product;
}

namespace detail {

template <class S>
void require_terms(std::span<const S> v, int n, const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + " needs n >= 1");
  if (static_cast<int>(v.size()) < n)
    throw ValidationError(std::string(what) + " needs " + std::to_string(n) +
                          " coefficients, got " + std::to_string(v.size()));
}

template <class S>
void require_unit_first(std::span<const S> v, const char* what) {
  if (value_of(v[0]) != 1.0) throw ValidationError(std::string(what) + ": first coefficient must be 1");
}

// Accumulates a running sum, counting every addition after the first term.
template <class S>
struct Sum {
  S value{};
  bool started = false;
  void add(const S& term, OpCounter& ops) {
    if (started) {
      value = value + term;
      ++ops.additions;
    } else {
      value = term;
      started = true;
    }
  }
};

inline std::vector<int> sequence_y(int length, int sign) {
  std::vector<int> y(length);
  for (int j = 1; j <= length; ++j) y[j - 1] = sign * (j + 1);
  return y;
}

}  // namespace detail

/// Virial coefficient from Mayer coefficients, b[k] = b_{k+1}:
/// B_n = ((n-1)/n!) sum_{m in M(n)} (n+|m|-2)! Q(x, y, m), x_i = -b_{i+1},
/// y_i = i+1. The sign of x is folded into y so that no negations are
/// spent; this gives B_2 = -b_2.
template <class S>
S virial_from_b(std::span<const S> b, int n, OpCounter& ops) {
  detail::require_terms(b, n, "virial_from_b");
  if (n < 2) throw ValidationError("virial_from_b needs n >= 2");
  const auto y = detail::sequence_y(n - 1, -1);
  const std::span<const S> x = b.subspan(1, n - 1);
  detail::Sum<S> sum;
  for (const auto& m : partition_vectors(n)) {
    S term = q_eval<S>(x, y, m, ops);
    const int k = n + m.norm() - 2;
    if (k >= 2) {
      ops.lookup(k);
      term = term * scalar_from<S>(factorial(k));
      ++ops.multiplications;
    }
    sum.add(term, ops);
  }
  S out = sum.value;
  if (n - 1 > 1) {
    out = out * scalar_from<S>(n - 1);
    ++ops.multiplications;
  }
  ops.lookup(n);
  ++ops.divisions;
  return out / scalar_from<S>(factorial(n));
}

template <class S>
S virial_from_b(std::span<const S> b, int n) {
  OpCounter ops;
  return virial_from_b(b, n, ops);
}

/// Solves n b_n = sum_{q=1}^{n-1} (q+1) a_{q+1} (n-q) b_{n-q} for a_2..a_n,
/// with a_1 = b_1 = 1. Index k holds the coefficient of order k+1.
template <class S>
std::vector<S> a_from_b(std::span<const S> b, int n) {
  detail::require_terms(b, n, "a_from_b");
  detail::require_unit_first(b, "a_from_b");
  std::vector<S> a(n);
  a[0] = scalar_from<S>(1);
  for (int k = 2; k <= n; ++k) {
    S rest = scalar_from<S>(k) * b[k - 1];
    for (int q = 1; q <= k - 2; ++q)
      rest = rest - scalar_from<S>((q + 1) * (k - q)) * a[q] * b[k - q - 1];
    a[k - 1] = rest / (scalar_from<S>(k) * b[0]);
  }
  return a;
}

template <class S>
std::vector<S> b_from_a(std::span<const S> a, int n) {
  detail::require_terms(a, n, "b_from_a");
  detail::require_unit_first(a, "b_from_a");
  std::vector<S> b(n);
  b[0] = scalar_from<S>(1);
  for (int k = 2; k <= n; ++k) {
    S sum{};
    for (int q = 1; q <= k - 1; ++q)
      sum = sum + scalar_from<S>((q + 1) * (k - q)) * a[q] * b[k - q - 1];
    b[k - 1] = sum / scalar_from<S>(k);
  }
  return b;
}

/// e_1 = 1, e_mu = (1/mu) sum_{m in M(mu)} |m|! Q(x, y, m), x_j = a_{j+1}, y_j = j+1.
template <class S>
std::vector<S> e_coeffs(std::span<const S> a, int n, OpCounter& ops) {
  detail::require_terms(a, n, "e_coeffs");
  std::vector<S> e(n);
  e[0] = scalar_from<S>(1);
  for (int mu = 2; mu <= n; ++mu) {
    const auto y = detail::sequence_y(mu - 1, 1);
    const std::span<const S> x = a.subspan(1, mu - 1);
    detail::Sum<S> sum;
    for (const auto& m : partition_vectors(mu)) {
      S term = q_eval<S>(x, y, m, ops);
      if (m.norm() >= 2) {
        ops.lookup(m.norm());
        term = term * scalar_from<S>(factorial(m.norm()));
        ++ops.multiplications;
      }
      sum.add(term, ops);
    }
    e[mu - 1] = sum.value / scalar_from<S>(mu);
    ++ops.divisions;
  }
  return e;
}

/// tau_1 = 1, tau_mu = (mu-1)! sum_{m in M(mu)} Q(x, -y, m) / (mu-|m|)!.
template <class S>
std::vector<S> tau_coeffs(std::span<const S> a, int n, OpCounter& ops) {
  detail::require_terms(a, n, "tau_coeffs");
  std::vector<S> tau(n);
  tau[0] = scalar_from<S>(1);
  for (int mu = 2; mu <= n; ++mu) {
    const auto y = detail::sequence_y(mu - 1, -1);
    const std::span<const S> x = a.subspan(1, mu - 1);
    detail::Sum<S> sum;
    for (const auto& m : partition_vectors(mu)) {
      S term = q_eval<S>(x, y, m, ops);
      const int k = mu - m.norm();
      if (k >= 2) {
        ops.lookup(k);
        term = term / scalar_from<S>(factorial(k));
        ++ops.divisions;
      }
      sum.add(term, ops);
    }
    S value = sum.value;
    if (mu - 1 >= 2) {
      ops.lookup(mu - 1);
      value = value * scalar_from<S>(factorial(mu - 1));
      ++ops.multiplications;
    }
    tau[mu - 1] = value;
  }
  return tau;
}

/// B_n = sum_{m in M(n+1)} |m|! e_{|m|} Q(tau; 1; m).
template <class S>
S virial_from_e_tau(std::span<const S> e, std::span<const S> tau, int n, OpCounter& ops) {
  detail::require_terms(e, n, "virial_from_e_tau");
  detail::require_terms(tau, n, "virial_from_e_tau");
  if (n < 2) throw ValidationError("virial_from_e_tau needs n >= 2");
  const std::vector<int> ones(n, 1);
  const std::span<const S> x = tau.first(n);
  detail::Sum<S> sum;
  for (const auto& m : partition_vectors(n + 1)) {
    S term = q_eval<S>(x, ones, m, ops);
    const int k = m.norm();
    if (k >= 2) {
      term = term * e[k - 1];
      ops.lookup(k);
      term = term * scalar_from<S>(factorial(k));
      ops.multiplications += 2;
    }
    sum.add(term, ops);
  }
  return sum.value;
}

template <class S>
struct PipelineResult {
  S value;
  std::vector<S> e;
  std::vector<S> tau;
  OpCounter e_ops;
  OpCounter tau_ops;
  OpCounter combine_ops;

  OpCounter total() const {
    OpCounter t = e_ops;
    t += tau_ops;
    t += combine_ops;
    return t;
  }
};

/// B_n from a_1..a_n (a[k] = a_{k+1}) through e and tau.
template <class S>
PipelineResult<S> virial_from_a(std::span<const S> a, int n) {
  detail::require_terms(a, n, "virial_from_a");
  PipelineResult<S> r{};
  r.e = e_coeffs(a, n, r.e_ops);
  r.tau = tau_coeffs(a, n, r.tau_ops);
  r.value = virial_from_e_tau<S>(r.e, r.tau, n, r.combine_ops);
  return r;
}

inline std::int64_t bound_q(int norm, bool unit_y) { return (unit_y ? 3 : 5) * norm; }
std::int64_t bound_e_mu(int mu);       // 7 p(mu-1) (mu-1)
std::int64_t bound_e_vector(int n);    // 7 p(n-1) n(n-1)/2, also for tau
std::int64_t bound_combine(int n);     // 5 n p(n)
std::int64_t bound_pipeline(int n);    // 7 p(n-1) n(n-1) + 5 n p(n)
/// Mayer-formula bound: 2440 for n <= 10; beyond that the per-term count
/// 5|m| + 3 over M(n) plus three operations for the prefactor.
std::int64_t bound_mayer(int n);

}  // namespace mayer
