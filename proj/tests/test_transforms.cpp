#include <random>
#include <vector>

#include "doctest.h"
#include "mayer/transforms.hpp"

using namespace mayer;

namespace {

// Mayer coefficients of hard rods of unit length in one dimension:
// b_n = (-n)^{n-1} / n!.
std::vector<Rational> hard_rod_b(int n) {
  std::vector<Rational> b;
  for (int k = 1; k <= n; ++k) b.emplace_back(ipow(Integer(-k), k - 1), factorial(k));
  return b;
}

// Independent route to a: z / rho(z) = 1 - sum_{q>=1} (q+1) a_{q+1} z^q with
// rho(z) = sum_n n b_n z^n, by long division of power series.
std::vector<Rational> a_by_series_division(const std::vector<Rational>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<Rational> d(n);  // rho(z)/z
  for (int k = 0; k < n; ++k) d[k] = Rational(k + 1) * b[k];
  std::vector<Rational> inv(n);  // 1 / d
  inv[0] = 1 / d[0];
  for (int k = 1; k < n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += d[j] * inv[k - j];
    inv[k] = -s / d[0];
  }
  std::vector<Rational> a(n);
  a[0] = 1;
  for (int q = 1; q < n; ++q) a[q] = -inv[q] / (q + 1);
  return a;
}

std::vector<Rational> random_b(std::mt19937_64& rng, int n) {
  std::vector<Rational> b{1};
  for (int k = 2; k <= n; ++k)
    b.emplace_back(static_cast<long long>(rng() % 201) - 100, static_cast<long long>(rng() % 30) + 1);
  return b;
}

template <class S>
std::span<const S> view(const std::vector<S>& v) {
  return v;
}

}  // namespace

TEST_CASE("Q evaluation") {
  OpCounter ops;
  const std::vector<Rational> x{Rational(-3, 2)};
  const std::vector<int> y{2};
  CHECK(q_eval<Rational>(x, y, PartitionVector{{1}}, ops) == Rational(-3));
  CHECK(ops.total() == 1);
  CHECK_THROWS_AS(q_eval<Rational>(x, y, PartitionVector{{0}}, ops), ValidationError);
  CHECK_THROWS_AS(q_eval<Rational>(x, y, PartitionVector{{1, 0}}, ops), ValidationError);

  // (2*x1)^2/2! * (3*x2) with x = (1/2, 5)
  const std::vector<Rational> x2{Rational(1, 2), Rational(5)};
  const std::vector<int> y2{2, 3};
  CHECK(q_eval<Rational>(x2, y2, PartitionVector{{2, 1}}, ops) == Rational(15, 2));

  std::mt19937_64 rng(5);
  for (int n = 2; n <= 12; ++n) {
    const auto b = random_b(rng, n);
    const std::span<const Rational> xs = view(b).subspan(1, n - 1);
    std::vector<int> given(n - 1), unit(n - 1, 1);
    for (int j = 1; j < n; ++j) given[j - 1] = -(j + 1);
    for (const auto& m : partition_vectors(n)) {
      CHECK(m.norm() <= n - 1);
      OpCounter a, c;
      q_eval<Rational>(xs, given, m, a);
      q_eval<Rational>(xs, unit, m, c);
      CHECK(a.total() <= bound_q(m.norm(), false));
      CHECK(a.strict_total() <= bound_q(m.norm(), false));
      CHECK(c.total() <= bound_q(m.norm(), true));
    }
    CHECK(Integer(partition_vectors(n).size()) == partition_count(n - 1));
  }
  OpCounter four;
  const std::vector<Rational> x4{1, 2, 3, 4};
  const std::vector<int> y4{2, 3, 4, 5};
  q_eval<Rational>(x4, y4, PartitionVector{{4, 0, 0, 0}}, four);
  CHECK(four.total() <= 20);
}

TEST_CASE("Mayer formula") {
  const std::vector<Rational> b{1, Rational(7, 3)};
  CHECK(virial_from_b<Rational>(b, 2) == Rational(-7, 3));
  const auto rods = hard_rod_b(10);
  CHECK(rods[1] == -1);
  CHECK(rods[2] == Rational(3, 2));
  CHECK(rods[3] == Rational(-8, 3));
  CHECK(rods[4] == Rational(125, 24));
  for (int n = 2; n <= 10; ++n) {
    OpCounter ops;
    CHECK(virial_from_b<Rational>(rods, n, ops) == 1);
    CHECK(ops.total() < bound_mayer(n));
  }
  OpCounter ten;
  virial_from_b<Rational>(rods, 10, ten);
  CHECK(ten.total() < 2440);
  CHECK(ten.strict_total() < 2440);
  CHECK_THROWS_AS(virial_from_b<Rational>(b, 3), ValidationError);
}

TEST_CASE("b and a coefficients") {
  const std::vector<Rational> b{1, Rational(-5, 7)};
  CHECK(a_from_b<Rational>(b, 2)[1] == Rational(-5, 7));

  const auto rods = hard_rod_b(8);
  const auto a = a_from_b<Rational>(rods, 8);
  CHECK(a == a_by_series_division(rods));
  const std::vector<Rational> expected{1, -1, Rational(1, 6), Rational(-1, 6), Rational(9, 40),
                                       Rational(-16, 45), Rational(625, 1008), Rational(-81, 70)};
  CHECK(a == expected);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto rb = random_b(rng, n);
    const auto ra = a_from_b<Rational>(rb, n);
    CHECK(ra == a_by_series_division(rb));
    CHECK(b_from_a<Rational>(ra, n) == rb);
  }
  const std::vector<Rational> bad{2, 1};
  CHECK_THROWS_AS(a_from_b<Rational>(bad, 2), ValidationError);
}

TEST_CASE("e and tau coefficients") {
  const std::vector<Rational> a{1, Rational(3, 5)};
  OpCounter ops;
  const auto e = e_coeffs<Rational>(a, 2, ops);
  const auto tau = tau_coeffs<Rational>(a, 2, ops);
  CHECK(e[0] == 1);
  CHECK(e[1] == Rational(3, 5));
  CHECK(tau[0] == 1);
  CHECK(tau[1] == Rational(-6, 5));
  CHECK(virial_from_a<Rational>(a, 2).value == Rational(-3, 5));

  const auto rods = a_from_b<Rational>(hard_rod_b(10), 10);
  for (int n = 2; n <= 10; ++n) {
    const auto r = virial_from_a<Rational>(rods, n);
    CHECK(r.value == 1);
    CHECK(r.e_ops.total() <= bound_e_vector(n));
    CHECK(r.tau_ops.total() <= bound_e_vector(n));
    CHECK(r.combine_ops.total() <= bound_combine(n));
    CHECK(r.total().total() <= bound_pipeline(n));
    CHECK(r.total().strict_total() <= bound_pipeline(n));
  }
  CHECK(virial_from_a<Rational>(rods, 10).total().total() < 21000);

  // Per-order bounds: the cost of e_mu alone is the increment from mu-1 to mu.
  for (int mu = 2; mu <= 10; ++mu) {
    OpCounter below, upto, tb, tu;
    if (mu > 2) {
      e_coeffs<Rational>(rods, mu - 1, below);
      tau_coeffs<Rational>(rods, mu - 1, tb);
    }
    e_coeffs<Rational>(rods, mu, upto);
    tau_coeffs<Rational>(rods, mu, tu);
    CHECK(upto.total() - below.total() <= bound_e_mu(mu));
    CHECK(tu.total() - tb.total() <= bound_e_mu(mu));
  }
}

TEST_CASE("both routes agree exactly on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto b = random_b(rng, n);
    const auto a = a_from_b<Rational>(b, n);
    CHECK(virial_from_b<Rational>(b, n) == virial_from_a<Rational>(a, n).value);
  }
}

TEST_CASE("floating and uncertain payloads") {
  const auto rods = hard_rod_b(8);
  std::vector<double> bd;
  for (const auto& q : rods) bd.push_back(q.convert_to<double>());
  for (int n = 2; n <= 8; ++n) CHECK(virial_from_b<double>(bd, n) == doctest::Approx(1.0).epsilon(1e-9));

  // B_2 = -b_2 carries the error of b_2 unchanged.
  std::vector<Uncertain> bu{Uncertain(1.0), Uncertain::input(-1.0, 0.25, 0, 1)};
  const auto b2 = virial_from_b<Uncertain>(bu, 2);
  CHECK(b2.value() == doctest::Approx(1.0));
  CHECK(b2.standard_error() == doctest::Approx(0.25));

  // Gradient of B_4 against central differences.
  std::vector<Uncertain> in{Uncertain(1.0)};
  for (int k = 1; k < 4; ++k) in.push_back(Uncertain::input(bd[k], 1.0, k - 1, 3));
  const auto b4 = virial_from_b<Uncertain>(in, 4);
  CHECK(b4.value() == doctest::Approx(1.0));
  for (int k = 1; k < 4; ++k) {
    auto plus = bd, minus = bd;
    plus[k] += 1e-6;
    minus[k] -= 1e-6;
    const double fd = (virial_from_b<double>(plus, 4) - virial_from_b<double>(minus, 4)) / 2e-6;
    CHECK(b4.gradient()[k - 1] == doctest::Approx(fd).epsilon(1e-6));
  }
  std::vector<Uncertain> au;
  const auto ad = a_from_b<double>(bd, 5);
  au.push_back(Uncertain(1.0));
  for (int k = 1; k < 5; ++k) au.push_back(Uncertain::input(ad[k], 0.01, k - 1, 4));
  const auto via_a = virial_from_a<Uncertain>(au, 5);
  CHECK(via_a.value.value() == doctest::Approx(1.0));
  CHECK(via_a.value.standard_error() > 0);
}
