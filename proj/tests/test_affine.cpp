#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "gl2geom/affine.hpp"
#include "gl2geom/coords.hpp"
#include "gl2geom/verify.hpp"

using namespace gl2;

namespace {

Mat2 m2(double a, double b, double c, double d)
{
  Mat2 m;
  m << a, b, c, d;
  return m;
}

template<typename D>
double max_abs(const Eigen::MatrixBase<D> & m)
{
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("flat affine product")
{
  Rng rng(29);
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector u = random_algebra(rng), v = random_algebra(rng), w = random_algebra(rng);
    CHECK(max_abs(Mat2(flat_affine_product(u, v).to_matrix() - u.to_matrix() * v.to_matrix())) < 1e-14);
    CHECK((flat_affine_product(u, v) - flat_affine_product(v, u) - bracket(u, v)).norm() < 1e-14);
    CHECK((flat_affine_product(flat_affine_product(u, v), w) - flat_affine_product(u, flat_affine_product(v, w))).norm()
          < 1e-13);
  }
  const AlgebraVector id = AlgebraVector::from_matrix(Mat2::Identity());
  CHECK((flat_affine_product(id, AlgebraVector::basis(0)) - AlgebraVector::basis(0)).norm() < 1e-15);
}

TEST_CASE("rotation and square root")
{
  CHECK(max_abs(Mat2(rotation(std::numbers::pi / 2) - m2(0, -1, 1, 0))) < 1e-15);
  CHECK(max_abs(Mat2(rotation(0.3) * rotation(0.4) - rotation(0.7))) < 1e-15);
  CHECK(max_abs(Mat2(omega_matrix() - m2(0, 1, -1, 0))) == 0.0);

  const Mat2 T = m2(5, 2, 2, 3);
  const Mat2 S = spd_sqrt(T);
  CHECK(max_abs(Mat2(S * S - T)) < 1e-14);
  CHECK(S(0, 1) == S(1, 0));
  CHECK(max_abs(Mat2(spd_sqrt(Mat2::Identity() * 4) - 2 * Mat2::Identity())) < 1e-15);
  CHECK_THROWS_AS(spd_sqrt(m2(1, 2, 2, 1)), GeometryError);
  CHECK_THROWS_AS(spd_sqrt(m2(1, 0.5, 0, 1)), GeometryError);
}

TEST_CASE("cover points")
{
  CHECK_THROWS_AS(CoverPoint(0.0, m2(1, 0, 0, -1)), GeometryError);
  CHECK_THROWS_AS(CoverPoint(0.0, m2(1, 0.1, 0, 1)), GeometryError);
  CHECK_NOTHROW(CoverPoint(12.0, m2(2, 1, 1, 2)));
  CHECK_THROWS_AS((CoverCoords{Vec4(0, 1, 1, 1)}.to_point()), GeometryError);
  CHECK_THROWS_AS((CoverCoords{Vec4(0, -1, 0, 1)}.to_point()), GeometryError);
  const CoverPoint p = CoverCoords{Vec4(7.5, 2, 0.5, 1)}.to_point();
  CHECK(p.t() == 7.5);
  CHECK(max_abs(Vec4(CoverCoords::from_point(p).y - Vec4(7.5, 2, 0.5, 1))) == 0.0);

  Rng rng(31);
  for (int n = 0; n < 25; ++n) {
    const GroupPoint g  = random_group_point(rng);
    const CoverPoint pd = polar_decompose(g);
    CHECK(pd.t() > -std::numbers::pi);
    CHECK(pd.t() <= std::numbers::pi);
    CHECK(max_abs(Mat2(cover_project(pd).matrix() - g.matrix())) < 1e-12);
  }
}

TEST_CASE("cover product")
{
  Rng rng(37);
  for (int n = 0; n < 40; ++n) {
    const CoverPoint p = random_cover_point(rng), q = random_cover_point(rng), r = random_cover_point(rng);
    const CoverPoint pq = cover_multiply(p, q);
    CHECK(max_abs(Mat2(cover_project(pq).matrix() - cover_project(p).matrix() * cover_project(q).matrix())) < 1e-11);
    const CoverPoint polar = cover_multiply_polar(p, q);
    CHECK(pq.t() == doctest::Approx(polar.t()).epsilon(1e-12));
    CHECK(max_abs(Mat2(pq.T() - polar.T())) < 1e-11);
    const CoverPoint left = cover_multiply(cover_multiply(p, q), r), right = cover_multiply(p, cover_multiply(q, r));
    CHECK(left.t() == doctest::Approx(right.t()).epsilon(1e-12));
    CHECK(max_abs(Mat2(left.T() - right.T())) < 1e-10);
  }
  // Pure rotations add their angles without wrapping.
  const CoverPoint a(3.0, Mat2::Identity()), b(4.0, Mat2::Identity());
  CHECK(cover_multiply(a, b).t() == doctest::Approx(7.0));
  CHECK(cover_multiply(CoverPoint::identity(), a).t() == doctest::Approx(3.0));

  // The printed second factor carries an extra O_{-t}.
  const CoverPoint p(0.5, 2 * Mat2::Identity()), q(0.3, Mat2::Identity());
  CHECK(max_abs(Mat2(cover_multiply(p, q).T() - 2 * Mat2::Identity())) < 1e-14);
  CHECK(max_abs(Mat2(cover_multiply_printed_second(p, q) - 2 * rotation(-0.5))) < 1e-14);
}

TEST_CASE("developing map and eta")
{
  CHECK(max_abs(developing_map(CoverCoords{Vec4(0, 1, 0, 1)})) == 0.0);
  CHECK(max_abs(Vec4(developing_map(CoverCoords{Vec4(2, 3, 0.5, 1.5)}) - Vec4(2, 2, 0.5, 0.5))) == 0.0);
  CHECK_THROWS_AS(developing_map(CoverCoords{Vec4(0, 1, 2, 1)}), GeometryError);
  CHECK(max_abs(Mat4(eta_coefficients(Vec4(1, 2, 3, 4)) - Mat4::Identity())) == 0.0);

  const std::vector<Vec4> path{Vec4(0, 1, 0, 1), Vec4(1, 2, 0.3, 1), Vec4(-2, 1.5, 0.1, 3)};
  CHECK(max_abs(Vec4(eta_path_integral(path) - (path.back() - path.front()))) < 1e-14);
  std::vector<Vec4> loop = path;
  loop.push_back(path.front());
  CHECK(max_abs(eta_path_integral(loop)) < 1e-14);
}

TEST_CASE("hessian potential")
{
  const GroupPoint p(m2(1.3, 0.4, -0.2, 0.9));
  CHECK(hessian_potential(p) == doctest::Approx(0.5 * (p.matrix() * p.matrix()).trace()));
  const double h = 1e-6;
  const Vec4 x   = p.coords();
  for (int i = 0; i < 4; ++i) {
    Vec4 d = Vec4::Zero();
    d[i]   = h;
    const Vec4 xp = x + d, xm = x - d;
    const double fd = (hessian_potential(GroupPoint(m2(xp[0], xp[1], xp[2], xp[3])))
                       - hessian_potential(GroupPoint(m2(xm[0], xm[1], xm[2], xm[3]))))
                    / (2 * h);
    CHECK(fd == doctest::Approx(hessian_gradient(p)[i]).epsilon(1e-8));
  }
  // Hess f is constant and equals k+ only at the identity.
  CHECK(max_abs(Mat4(hessian_matrix() - metric_at(GroupPoint::identity()))) < 1e-15);
  CHECK(hessian_vs_metric_gap(GroupPoint::identity()) < 1e-15);
  CHECK(hessian_vs_metric_gap(p) > 0.1);
}
