#include "doctest.h"
#include "oracles.hpp"

#include "conekit/error.hpp"
#include "conekit/generators.hpp"
#include "conekit/invpos.hpp"

#include <variant>

using namespace conekit;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Mat m2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("borderline closed form") {
  const auto k = ConeSpec::orthant(2);
  auto b = borderline(k, v2(-1, 3), v2(1, 1));
  CHECK(b.t_b == doctest::Approx(0.5));
  CHECK(b.point(0) == doctest::Approx(0.0));
  CHECK(b.point(1) == doctest::Approx(2.0));
  REQUIRE(b.active_set.size() == 1);
  CHECK(b.active_set[0] == 0);

  b = borderline(k, v2(-1, -1), v2(1, 1));
  CHECK(b.t_b == doctest::Approx(0.5));
  CHECK(b.point.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(b.active_set.size() == 2);

  CHECK(borderline(k, v2(-3, 1), v2(1, 1)).t_b == doctest::Approx(0.75));
  CHECK_THROWS_AS(borderline(k, v2(1, 1), v2(1, 1)), Error);
  CHECK_THROWS_AS(borderline(k, v2(-1, 1), v2(1, 0)), Error);
}

TEST_CASE("borderline brackets the cone crossing") {
  Rng rng(31);
  const Config cfg;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const ConeSpec k = (trial % 2) ? ConeSpec::orthant(n) : ConeSpec::simplicial(random_generators(n, rng));
    const Vec e = k.from_orthant(random_positive(n, rng));
    Vec y(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = rng.uniform(-2.0, 2.0);
    y(0) = -rng.uniform(0.1, 2.0);
    const Vec x = k.from_orthant(y);
    const auto b = borderline(k, x, e, cfg);
    const auto bis = borderline_bisect(k, x, e, cfg);
    CHECK(std::abs(b.t_b - bis.t_b) <= 1e-8);
    CHECK(boundary_position(k, b.point, cfg).where == Position::boundary);
    const double lo = b.t_b - 10 * cfg.tau;
    const double hi = b.t_b + 10 * cfg.tau;
    CHECK_FALSE(contains(k, (1 - lo) * x + lo * e, cfg));
    CHECK(contains(k, (1 - hi) * x + hi * e, cfg));
  }
}

TEST_CASE("theorem1 examples") {
  const auto k = ConeSpec::orthant(2);
  const Mat a = m2(1, -2, -2, 1);
  auto r = theorem1_verify(a, k, k, v2(1, 1));
  REQUIRE(r.hypotheses.all_hold());
  CHECK((r.hypotheses.e - v2(1, 1)).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE(r.conclusions);
  CHECK(r.conclusions->kernel_trivial);
  CHECK(r.conclusions->neg_inverse_positive == Verdict::yes);
  const Mat expect = -oracle::inverse2x2(a);
  CHECK((*r.conclusions->neg_inverse - expect).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_FALSE(r.violation);

  r = theorem1_verify(-Mat::Identity(2, 2), k, k, v2(1, 1));
  REQUIRE(r.hypotheses.all_hold());
  CHECK((*r.conclusions->neg_inverse - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  r = theorem1_verify(m2(-1, -1, -1, -1), k, k, v2(1, 1));
  CHECK(r.hypotheses.somewhere_positive == Verdict::no);
  CHECK_FALSE(r.hypotheses.all_hold());
  CHECK_FALSE(r.conclusions);
  CHECK_FALSE(r.violation);
}

TEST_CASE("Metzler matrices with dominant diagonal are inverse positive") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const Mat a = random_metzler(n, rng);
    const auto k = ConeSpec::orthant(n);
    const Vec z = -(a * Vec::Ones(static_cast<Eigen::Index>(n)));
    const auto r = theorem1_verify(a, k, k, z);
    REQUIRE(r.hypotheses.all_hold());
    CHECK(r.conclusions->kernel_trivial);
    CHECK(r.conclusions->neg_inverse_positive == Verdict::yes);
    CHECK(r.conclusions->neg_inverse->minCoeff() >= -1e-9);
    CHECK_FALSE(r.violation);
    CHECK_FALSE(find_inverse_positivity_counterexample(a, k, k));
  }
}

TEST_CASE("planted somewhere-positive instances admit no counterexample") {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const auto inst = random_somewhere_positive_planted(n, rng);
    const auto k = ConeSpec::orthant(n);
    const auto r = theorem1_verify(inst.a, k, k, inst.z);
    CHECK_FALSE(r.violation);
    if (!r.hypotheses.all_hold()) continue;
    CHECK(r.conclusions->neg_inverse_positive == Verdict::yes);
    CHECK_FALSE(find_inverse_positivity_counterexample(inst.a, k, k));
    // Direct check: any x with A x <= 0 is -A^{-1} applied to a nonnegative vector.
    Vec w(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = rng.uniform(0.0, 1.0);
    const Vec x = inst.a.partialPivLu().solve(-w);
    CHECK((x.array() >= -1e-9).all());
  }
}

TEST_CASE("counterexample search finds inverse positivity failures") {
  const auto k = ConeSpec::orthant(2);
  const Mat a = m2(1, 0, 0, -1);
  const auto cx = find_inverse_positivity_counterexample(a, k, k);
  REQUIRE(cx);
  CHECK(((a * *cx).array() <= 1e-9).all());
  CHECK_FALSE(contains(k, *cx));
}

TEST_CASE("refutation on a matrix that is not somewhere positive") {
  const auto k = ConeSpec::orthant(2);
  const Mat a = m2(-1, -1, -1, -1);
  const auto ref = refute_counterexample(a, k, k, v2(1, 1), v2(2, -1));
  const auto* nsp = std::get_if<NotSomewherePositiveAt>(&ref);
  REQUIRE(nsp != nullptr);
  CHECK(nsp->t_b == doctest::Approx(0.5));
  CHECK((nsp->image.array() < 0).all());
}

TEST_CASE("refutation preconditions") {
  const auto k = ConeSpec::orthant(3);
  Rng rng(47);
  const Mat a = random_metzler(3, rng);
  const Vec e = Vec::Ones(3);
  // A (-e) = z >= 0, so the claimed A x <= 0 fails.
  CHECK_THROWS_AS(refute_counterexample(a, k, k, e, -e), Error);
}

TEST_CASE("path identity is bilinear") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const Mat a = random_dense(n, rng);
    Vec x(static_cast<Eigen::Index>(n)), e(static_cast<Eigen::Index>(n)), psi(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      x(i) = rng.uniform(-2.0, 2.0);
      e(i) = rng.uniform(0.5, 2.0);
      psi(i) = rng.uniform(0.0, 1.0);
    }
    const double t = rng.uniform();
    const Vec xt = (1 - t) * x + t * e;
    const double lhs = psi.dot(a * xt);
    const double rhs = (1 - t) * psi.dot(a * x) + t * psi.dot(a * e);
    const double scale = psi.cwiseAbs().sum() * a.cwiseAbs().maxCoeff() * (x.cwiseAbs().sum() + e.cwiseAbs().sum());
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, scale));
  }
}

TEST_CASE("refutation always lands on a non-somewhere-positive point") {
  Rng rng(59);
  int refuted = 0;
  for (int trial = 0; trial < 400 && refuted < 40; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const Mat a = random_dense(n, rng);
    const auto k = ConeSpec::orthant(n);
    const auto x = find_inverse_positivity_counterexample(a, k, k);
    if (!x) continue;
    const Vec e = random_positive(n, rng);
    if ((-(a * e)).minCoeff() <= 1e-6) continue;
    if (contains(k, *x)) continue;
    const auto ref = refute_counterexample(a, k, k, e, *x);
    const auto* nsp = std::get_if<NotSomewherePositiveAt>(&ref);
    REQUIRE(nsp != nullptr);
    CHECK((nsp->image.array() < 0).all());
    CHECK(boundary_position(k, nsp->x_tb).where == Position::boundary);
    CHECK(is_somewhere_positive(a, k, k).verdict == Verdict::no);
    ++refuted;
  }
  CHECK(refuted > 0);
}
