#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gl2geom/affine.hpp"
#include "gl2geom/coords.hpp"
#include "gl2geom/curvature.hpp"
#include "gl2geom/dynamics.hpp"
#include "gl2geom/verify.hpp"

using namespace gl2;

namespace {

constexpr int kDraws = 200;

template<typename D>
double max_abs(const Eigen::MatrixBase<D> & m)
{
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("lie algebra identities")
{
  Rng rng(101);
  for (int n = 0; n < kDraws; ++n) {
    const AlgebraVector u = random_algebra(rng), v = random_algebra(rng), w = random_algebra(rng);
    CHECK((bracket(u, v) + bracket(v, u)).norm() < 1e-14);
    CHECK((bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).norm() < 1e-13);
    // ad-invariance of k and of the Killing form
    CHECK(std::abs(k_form(bracket(u, v), w) + k_form(v, bracket(u, w))) < 1e-13);
    CHECK(std::abs(killing_form(bracket(u, v), w) + killing_form(v, bracket(u, w))) < 1e-12);
    CHECK(std::abs(causal_quadratic(u) - k_form(u, u)) < 1e-13);
  }
}

TEST_CASE("curvature symmetries")
{
  Rng rng(103);
  for (int n = 0; n < kDraws; ++n) {
    const AlgebraVector x = random_algebra(rng), y = random_algebra(rng), z = random_algebra(rng),
                        w = random_algebra(rng);
    CHECK(std::abs(riemann_covariant(x, y, z, w) + riemann_covariant(y, x, z, w)) < 1e-13);
    CHECK(std::abs(riemann_covariant(x, y, z, w) + riemann_covariant(x, y, w, z)) < 1e-13);
    CHECK(std::abs(riemann_covariant(x, y, z, w) - riemann_covariant(z, w, x, y)) < 1e-13);
    CHECK((riemann(x, y, z) + riemann(y, z, x) + riemann(z, x, y)).norm() < 1e-13);
    CHECK(std::abs(ricci_tensor(x, y) - ricci_tensor(y, x)) < 1e-13);
    CHECK(std::abs(ricci_tensor(x, y) + 0.25 * killing_form(x, y)) < 1e-13);
  }
}

TEST_CASE("exponential")
{
  Rng rng(107);
  for (int n = 0; n < kDraws; ++n) {
    const AlgebraVector u = random_algebra(rng);
    const double s        = uniform(rng, -2, 2);
    const GroupPoint g    = exp_geodesic(u, s);
    CHECK(g.det() == doctest::Approx(std::exp(s * u.to_matrix().trace())).epsilon(1e-12));
    CHECK(max_abs(Mat2(g.matrix() * exp_geodesic(u, -s).matrix() - Mat2::Identity())) < 1e-12);
  }
}

TEST_CASE("isometry I_sigma preserves the coordinate metric")
{
  Rng rng(109);
  for (int n = 0; n < 30; ++n) {
    const GroupPoint s = random_group_point(rng), t = random_group_point(rng);
    // d(I_sigma) at tau: V -> -sigma tau^-1 V tau^-1 sigma.
    const Mat2 A = s.matrix() * t.matrix().inverse();
    const Mat2 B = t.matrix().inverse() * s.matrix();
    Mat4 J;
    for (int i = 0; i < 4; ++i) {
      Mat2 V          = Mat2::Zero();
      V(i / 2, i % 2) = 1.0;
      const Mat2 W    = -A * V * B;
      J.col(i)        = Vec4(W(0, 0), W(0, 1), W(1, 0), W(1, 1));
    }
    const Mat4 pulled = J.transpose() * metric_pullback(isometry_Isigma(s, t)) * J;
    CHECK(max_abs(Mat4(pulled - metric_pullback(t))) < 1e-8 * std::max(1.0, max_abs(metric_pullback(t))));
  }
}

TEST_CASE("cover group")
{
  Rng rng(113);
  for (int n = 0; n < kDraws; ++n) {
    const CoverPoint p = random_cover_point(rng);
    const CoverPoint l = cover_multiply(CoverPoint::identity(), p), r = cover_multiply(p, CoverPoint::identity());
    CHECK(l.t() == doctest::Approx(p.t()).epsilon(1e-12));
    CHECK(r.t() == doctest::Approx(p.t()).epsilon(1e-12));
    CHECK(max_abs(Mat2(l.T() - p.T())) < 1e-12);
    CHECK(max_abs(Mat2(r.T() - p.T())) < 1e-12);
    const Mat2 S = spd_sqrt(p.T());
    CHECK(max_abs(Mat2(S * S - p.T())) < 1e-12);
  }
}

TEST_CASE("transport is linear")
{
  Rng rng(127);
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector x = random_algebra(rng), y = random_algebra(rng), z = random_algebra(rng);
    const double a = uniform(rng, -2, 2);
    const auto end = [&](const AlgebraVector & v) {
      return parallel_transport({GroupPoint::identity(), x}, v, 1.0, 100).vectors.back();
    };
    CHECK(max_abs(Vec4(end(y + a * z) - end(y) - a * end(z))) < 1e-12);
  }
}

TEST_CASE("verification suite")
{
  const auto results = run_verification();
  CHECK(all_passed(results));
  for (const auto & r : results)
    if (r.status == CheckStatus::Fail) FAIL_CHECK(r.module << "/" << r.name << " observed " << r.observed);
  // Same seed, same numbers.
  const auto again = run_verification();
  REQUIRE(again.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(again[i].observed == results[i].observed);
}
