#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2geom/algebra.hpp"

using namespace gl2;

namespace {

AlgebraVector e(int i) { return AlgebraVector::basis(i); }

Mat2 m2(double a, double b, double c, double d)
{
  Mat2 m;
  m << a, b, c, d;
  return m;
}

AlgebraVector random_vec(std::mt19937_64 & rng)
{
  std::uniform_real_distribution<double> u(-1, 1);
  return AlgebraVector(u(rng), u(rng), u(rng), u(rng));
}

}  // namespace

TEST_CASE("basis matrices")
{
  const double s = std::sqrt(2.0) / 2;
  CHECK((e(0).to_matrix() - m2(0, s, -s, 0)).norm() < 1e-15);
  CHECK((e(1).to_matrix() - m2(0, s, s, 0)).norm() < 1e-15);
  CHECK((e(2).to_matrix() - m2(s, 0, 0, -s)).norm() < 1e-15);
  CHECK((e(3).to_matrix() - m2(s, 0, 0, s)).norm() < 1e-15);
}

TEST_CASE("matrix round trip")
{
  std::mt19937_64 rng(1);
  for (int n = 0; n < 100; ++n) {
    const AlgebraVector u = random_vec(rng);
    CHECK((AlgebraVector::from_matrix(u.to_matrix()).coeffs() - u.coeffs()).norm() < 1e-12);
  }
  const Mat2 m = m2(1, 2, 3, 4);
  CHECK((AlgebraVector::from_matrix(m).to_matrix() - m).norm() < 1e-12);
}

TEST_CASE("bracket")
{
  CHECK((bracket(e(0), e(1)) - std::sqrt(2.0) * e(2)).norm() < 1e-12);
  CHECK((bracket(e(0), e(2)) + std::sqrt(2.0) * e(1)).norm() < 1e-12);
  CHECK((bracket(e(1), e(2)) + std::sqrt(2.0) * e(0)).norm() < 1e-12);
  for (int i = 0; i < 3; ++i) CHECK(bracket(e(3), e(i)).norm() < 1e-15);

  std::mt19937_64 rng(2);
  const AlgebraVector u = random_vec(rng), v = random_vec(rng);
  CHECK(bracket(u, u).norm() < 1e-15);
  const Mat2 comm = u.to_matrix() * v.to_matrix() - v.to_matrix() * u.to_matrix();
  CHECK((bracket(u, v).to_matrix() - comm).norm() < 1e-14);
  CHECK((bracket(u, v) + bracket(v, u)).norm() < 1e-15);
}

TEST_CASE("trace form")
{
  CHECK(k_form(e(0), e(0)) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::abs(k_form(e(1), e(2))) < 1e-15);
  CHECK(k_form(AlgebraVector::from_matrix(m2(0, 1, 0, 0)), AlgebraVector::from_matrix(m2(0, 0, 1, 0)))
        == doctest::Approx(1).epsilon(1e-12));
  const Mat4 g = k_gram();
  CHECK((g - Vec4(-1, 1, 1, 1).asDiagonal().toDenseMatrix()).norm() < 1e-12);
}

TEST_CASE("killing form")
{
  CHECK(killing_form(e(0), e(0)) == doctest::Approx(-4).epsilon(1e-12));
  CHECK(killing_form(e(1), e(1)) == doctest::Approx(4).epsilon(1e-12));
  CHECK(killing_form(e(2), e(2)) == doctest::Approx(4).epsilon(1e-12));
  CHECK(std::abs(killing_form(e(3), e(3))) < 1e-12);
  CHECK(std::abs(killing_form(e(0), e(1))) < 1e-12);

  // Oracle: 4 trace(uv) - 2 trace(u) trace(v) on gl(2).
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector u = random_vec(rng), v = random_vec(rng);
    const Mat2 a = u.to_matrix(), b = v.to_matrix();
    CHECK(killing_form(u, v) == doctest::Approx(4 * (a * b).trace() - 2 * a.trace() * b.trace()).epsilon(1e-12));
  }
}

TEST_CASE("classification")
{
  CHECK(classify(e(0)) == CausalType::Timelike);
  CHECK(classify(AlgebraVector::from_matrix(Mat2::Identity())) == CausalType::Spacelike);
  CHECK(classify(AlgebraVector::from_matrix(m2(1, 1, -1, 1))) == CausalType::Lightlike);
  CHECK(causal_quadratic(AlgebraVector::from_matrix(m2(1, 2, 3, 4))) == doctest::Approx(1 + 12 + 16));
  CHECK(to_string(CausalType::Lightlike) == "Lightlike");
}

TEST_CASE("timecones")
{
  CHECK(in_timecone_e1(e(0)) == Timecone::Forward);
  CHECK(in_timecone_e1(-e(0)) == Timecone::Backward);
  CHECK(in_timecone_e1(e(1)) == Timecone::NotTimelike);

  CHECK(timecone_convexity_check(e(0), e(0), 0.5));
  CHECK(timecone_convexity_check(e(0), 2.0 * e(0) + 0.1 * e(1), 0.3));
  CHECK_THROWS_AS(timecone_convexity_check(e(0), -e(0), 0.5), GeometryError);
  CHECK_THROWS_AS(timecone_convexity_check(e(0), e(0), 1.5), GeometryError);
}

TEST_CASE("group points")
{
  CHECK_THROWS_AS(GroupPoint(m2(1, 0, 0, -1)), GeometryError);
  CHECK_THROWS_AS(GroupPoint(m2(0, 0, 0, 0)), GeometryError);
  const GroupPoint p(m2(1, 2, 0, 3));
  CHECK(p.det() == doctest::Approx(3));
  CHECK(((p * p.inverse()).matrix() - Mat2::Identity()).norm() < 1e-14);
  CHECK((p.coords() - Vec4(1, 2, 0, 3)).norm() == 0.0);
  try {
    GroupPoint(m2(0, 1, 1, 0));
  } catch (const GeometryError & err) {
    CHECK(err.kind() == ErrorKind::InvalidInput);
    CHECK(err.name() == "InvalidInput");
  }
}
