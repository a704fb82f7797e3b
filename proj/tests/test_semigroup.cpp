#include "doctest.h"
#include "oracles.hpp"

#include "conekit/classify.hpp"
#include "conekit/error.hpp"
#include "conekit/generators.hpp"
#include "conekit/semigroup.hpp"

#include <cmath>

using namespace conekit;

namespace {

Mat m2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

const Mat kMetzler = m2(-1, 2, 3, -4);
const Mat kWorked = m2(1, -2, -2, 1);

}  // namespace

TEST_CASE("expm examples") {
  CHECK(max_abs(expm(Mat::Zero(3, 3), 2.5).value - Mat::Identity(3, 3)) == 0.0);
  CHECK(max_abs(expm(m2(0, 1, 0, 0), 1.0).value - m2(1, 1, 0, 1)) < 1e-15);
  const Mat d = expm(m2(-1, 0, 0, -2), 1.0).value;
  CHECK(std::abs(d(0, 0) - std::exp(-1.0)) < 1e-15);
  CHECK(std::abs(d(1, 1) - std::exp(-2.0)) < 1e-15);
  CHECK(d(0, 1) == 0.0);
}

TEST_CASE("expm agrees with the 60-term Taylor oracle") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    const Mat a = random_dense(n, rng);
    const double t = rng.uniform(0.0, 3.0);
    const Mat ref = oracle::taylor_expm(a, t);
    CHECK(max_abs(expm(a, t).value - ref) <= 1e-10 * std::max(1.0, max_abs(ref)));
  }
}

TEST_CASE("semigroup law") {
  Rng rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    const Mat a = trial % 2 ? random_metzler(n, rng) : random_dense(n, rng);
    const double t = rng.uniform(0.0, 2.0);
    const double s = rng.uniform(0.0, 2.0);
    const Mat lhs = expm(a, t + s).value;
    const Mat rhs = expm(a, t).value * expm(a, s).value;
    CHECK(max_abs(lhs - rhs) <= 1e-10 * std::max(1.0, max_abs(lhs)));
  }
}

TEST_CASE("semigroup positivity examples") {
  const auto k = ConeSpec::orthant(2);
  const auto grid = default_time_grid();
  CHECK(positivity_of_semigroup(kMetzler, k, grid).holds);
  const auto bad = positivity_of_semigroup(kWorked, k, grid);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_failure);
  CHECK(*bad.first_failure == doctest::Approx(grid.front()));
  // First-order expansion I + tA already has a negative off-diagonal.
  const double t = grid.front();
  CHECK((Mat::Identity(2, 2) + t * kWorked).minCoeff() < 0);
  CHECK(positivity_of_semigroup(Mat::Zero(2, 2), k, grid).holds);
}

TEST_CASE("lambda threshold") {
  const auto k = ConeSpec::orthant(2);
  const OrderUnit e(k, Vec::Ones(2));
  CHECK(lambda_threshold(kMetzler, k, e) == doctest::Approx(1.0));
  CHECK(lambda_threshold(Mat::Zero(2, 2), k, e) == 0.0);
  CHECK(lambda_threshold(Mat::Identity(2, 2), k, e) == doctest::Approx(1.0));
  const auto su = shifted_unit(kMetzler, k, e, 2.0);
  CHECK(su.dominates);
  CHECK(su.epsilon == doctest::Approx(1.0));
}

TEST_CASE("resolvent positivity") {
  const auto k = ConeSpec::orthant(2);
  CHECK(resolvent_positive(kMetzler, k, 10.0).holds);
  const auto bad = resolvent_positive(kWorked, k, 10.0);
  CHECK_FALSE(bad.holds);
  // (10 I - A)^{-1} = (1/77) [[9,-2],[-2,9]]; the normalised form scales by 10.
  const Mat inv = oracle::inverse2x2(10.0 * Mat::Identity(2, 2) - kWorked);
  CHECK(max_abs(inv - m2(9, -2, -2, 9) / 77.0) < 1e-15);
  CHECK(bad.min_entry == doctest::Approx(-20.0 / 77.0));
  CHECK(resolvent_positive(Mat::Zero(2, 2), k, 1.0).holds);
  CHECK_THROWS_AS(resolvent_positive(Mat::Identity(2, 2), k, 1.0), Error);
}

TEST_CASE("resolvent identity") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    const Mat a = random_dense(n, rng);
    const auto k = ConeSpec::orthant(n);
    const double l0 = lambda_threshold(a, k, OrderUnit(k, Vec::Ones(static_cast<Eigen::Index>(n))));
    // Above the spectral radius bound ||A||_inf the resolvent is well defined.
    const double base = std::max(l0, inf_norm(a)) + 0.5;
    const double lam = base + rng.uniform(0.0, 5.0);
    const double mu = base + rng.uniform(0.0, 5.0);
    const Mat id = Mat::Identity(a.rows(), a.cols());
    const Mat rl = (lam * id - a).inverse();
    const Mat rm = (mu * id - a).inverse();
    CHECK(max_abs(rl - rm - (mu - lam) * rl * rm) <= 1e-12 * std::max(1.0, max_abs(rl)));
  }
}

TEST_CASE("Hille-Yosida approximants") {
  CHECK(max_abs(hille_yosida_approx(Mat::Zero(2, 2), 1.0, 7) - Mat::Identity(2, 2)) == 0.0);
  Mat a(1, 1);
  a << -1.0;
  const double v = hille_yosida_approx(a, 1.0, 10)(0, 0);
  CHECK(std::abs(v - std::pow(1.1, -10.0)) < 1e-15);
  CHECK(v == doctest::Approx(0.3855).epsilon(1e-4));
}

TEST_CASE("Hille-Yosida error halves and approximants stay positive") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const Mat a = random_metzler(n, rng);
    const auto k = ConeSpec::orthant(n);
    const Mat ref = expm(a, 1.0).value;
    for (std::size_t steps = 1; steps <= 128; steps *= 2) {
      const double err_n = max_abs(hille_yosida_approx(a, 1.0, steps) - ref);
      const double err_2n = max_abs(hille_yosida_approx(a, 1.0, 2 * steps) - ref);
      if (err_n <= 1e-2) CHECK(err_2n <= 0.6 * err_n);
    }
    const double l0 = lambda_threshold(a, k, OrderUnit(k, Vec::Ones(static_cast<Eigen::Index>(n))));
    for (int s = 1; s <= 5; ++s) {
      const double alpha = s / (5.0 * (l0 + 1.0));
      const Mat r = (Mat::Identity(a.rows(), a.cols()) - alpha * a).inverse();
      CHECK(r.minCoeff() >= -1e-12);
    }
  }
}

TEST_CASE("contraction and rescaling") {
  const auto k = ConeSpec::orthant(2);
  const OrderUnit e(k, Vec::Ones(2));
  const auto grid = default_time_grid();
  auto r = contraction_rescaling_check(Mat::Zero(2, 2), k, e, grid);
  CHECK(r.contraction_holds);
  CHECK(r.rescaling_holds);
  r = contraction_rescaling_check(m2(1, 0, 0, -1), k, e, grid);
  CHECK(r.lambda0 == doctest::Approx(1.0));
  CHECK(r.sup_unit_norm == doctest::Approx(1.0));
  CHECK(r.contraction_holds);
  CHECK(r.rescaling_holds);
  CHECK_THROWS_AS(contraction_rescaling_check(kWorked, k, e, grid), Error);

  Rng rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const auto kn = ConeSpec::orthant(n);
    const auto rr = contraction_rescaling_check(random_metzler(n, rng), kn,
                                                OrderUnit(kn, Vec::Ones(static_cast<Eigen::Index>(n))), grid);
    CHECK(rr.contraction_holds);
    CHECK(rr.rescaling_holds);
    CHECK(rr.sup_operator_norm == doctest::Approx(rr.sup_unit_norm).epsilon(1e-9));
  }
}

TEST_CASE("four-way harness examples") {
  const auto k = ConeSpec::orthant(2);
  auto r = theorem2_harness(kMetzler, k);
  CHECK(r.cond_i_sampled == Verdict::yes);
  CHECK(r.cond_ii == Verdict::yes);
  CHECK(r.cond_iii == Verdict::yes);
  CHECK(r.cond_iv == Verdict::yes);
  CHECK(r.agreement);
  CHECK_FALSE(r.violation);
  CHECK(r.hy_convergence.size() == 9);

  r = theorem2_harness(kWorked, k);
  CHECK(r.cond_i_sampled == Verdict::no);
  CHECK(r.cond_ii == Verdict::no);
  CHECK(r.cond_iii == Verdict::no);
  CHECK(r.cond_iv == Verdict::no);
  CHECK(r.agreement);

  r = theorem2_harness(-Mat::Identity(3, 3), ConeSpec::orthant(3));
  CHECK(r.cond_ii == Verdict::yes);
  CHECK(r.agreement);
  CHECK(r.contraction_check <= 1.0 + 1e-9);
}

TEST_CASE("four-way harness on simplicial cones") {
  Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const Mat g = random_generators(n, rng);
    const Mat m = trial % 2 ? random_metzler(n, rng) : random_perturbed_metzler(n, rng);
    const auto s = ConeSpec::simplicial(g);
    const auto r = theorem2_harness(g * m * g.inverse(), s);
    CHECK(r.agreement);
    CHECK_FALSE(r.violation);
    CHECK((r.cond_ii == Verdict::yes) == (trial % 2 == 1));
  }
}
