#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2geom/curvature.hpp"

using namespace gl2;

namespace {

AlgebraVector e(int i) { return AlgebraVector::basis(i); }
const double r2 = std::sqrt(2.0);

// The four-term product written out by hand.
double kn_oracle(const Mat4 & h, const Mat4 & l, int w, int x, int y, int z)
{
  return h(w, z) * l(x, y) + h(x, y) * l(w, z) - h(w, y) * l(x, z) - h(x, z) * l(w, y);
}

}  // namespace

TEST_CASE("levi-civita of k+")
{
  CHECK((levi_civita_biinv(e(0), e(1)) - (r2 / 2) * e(2)).norm() < 1e-12);
  CHECK(levi_civita_biinv(e(1), e(1)).norm() == 0.0);
  CHECK(levi_civita_biinv(e(3), e(2)).norm() < 1e-15);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector u(U(rng), U(rng), U(rng), U(rng)), v(U(rng), U(rng), U(rng), U(rng)),
      w(U(rng), U(rng), U(rng), U(rng));
    CHECK((levi_civita_biinv(u, v) - levi_civita_biinv(v, u) - bracket(u, v)).norm() < 1e-12);
    CHECK(std::abs(k_form(levi_civita_biinv(w, u), v) + k_form(u, levi_civita_biinv(w, v))) < 1e-12);
  }
}

TEST_CASE("riemann values")
{
  CHECK((riemann(e(0), e(1), e(0)) - 0.5 * e(1)).norm() < 1e-12);
  CHECK((riemann(e(1), e(0), e(0)) + 0.5 * e(1)).norm() < 1e-12);
  // The reference table lists e3 for this cell; the double bracket gives e3/2.
  CHECK((riemann(e(2), e(1), e(1)) - 0.5 * e(2)).norm() < 1e-12);
  CHECK(riemann(e(1), e(1), e(2)).norm() == 0.0);

  CHECK(riemann_covariant(e(0), e(1), e(1), e(0)) == doctest::Approx(-0.5));
  CHECK(riemann_covariant(e(0), e(1), e(0), e(1)) == doctest::Approx(0.5));
  CHECK(riemann_covariant(e(2), e(2), e(0), e(1)) == 0.0);

  const auto d = riemann_lemma_discrepancies();
  REQUIRE(d.size() == 1);
  CHECK(d[0].i == 2);
  CHECK(d[0].j == 1);
  CHECK(d[0].k == 1);
  CHECK(printed_riemann_lemma().size() == 12);
}

TEST_CASE("sectional and scalar curvature")
{
  CHECK(sectional(e(0), e(1)) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(sectional(e(1), e(2)) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(sectional(e(0), e(3))) < 1e-12);
  CHECK(sectional(e(0), e(0) + e(1)) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(sectional(2 * e(0) - e(1), 0.5 * e(0) + 3 * e(1)) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_THROWS_AS(sectional(e(0), 2 * e(0)), GeometryError);
  CHECK_THROWS_AS(sectional(e(0) + e(1), e(2) + e(3) - e(3)), GeometryError);

  CHECK(scalar_curvature() == doctest::Approx(-3).epsilon(1e-12));
}

TEST_CASE("ricci and killing")
{
  CHECK(ricci_tensor(e(0), e(0)) == doctest::Approx(1));
  CHECK(ricci_tensor(e(1), e(1)) == doctest::Approx(-1));
  CHECK(std::abs(ricci_tensor(e(3), e(3))) < 1e-12);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(ricci_by_contraction(e(i), e(j)) == doctest::Approx(ricci_tensor(e(i), e(j))).epsilon(1e-12));
      CHECK(killing_matrix()(i, j) == doctest::Approx(killing_form(e(i), e(j))));
    }
  CHECK(kRicciContractionSign == -1.0);
}

TEST_CASE("kulkarni-nomizu")
{
  const FrameTensor2 k = k_tensor();
  const FrameTensor4 kk = kulkarni_nomizu(k, k);
  CHECK(kk(1, 2, 2, 1) == doctest::Approx(2));
  CHECK(kk(0, 0, 2, 1) == 0.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1, 1);
  Mat4 a, b;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      a(i, j) = a(j, i) = U(rng);
      b(i, j) = b(j, i) = U(rng);
    }
  const FrameTensor4 p = kulkarni_nomizu(FrameTensor2::from_matrix(a), FrameTensor2::from_matrix(b));
  double gap = 0.0;
  for (std::size_t f = 0; f < FrameTensor4::size; ++f) {
    const auto i = FrameTensor4::unflatten(f);
    gap          = std::max(gap, std::abs(p.at_flat(f) - kn_oracle(a, b, i[0], i[1], i[2], i[3])));
  }
  CHECK(gap < 1e-15);

  Mat4 asym = Mat4::Identity();
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(kulkarni_nomizu(FrameTensor2::from_matrix(asym), k), GeometryError);
}

TEST_CASE("weyl tensor")
{
  const FrameTensor4 W = weyl_tensor();
  // Trace-free in every slot pair.
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      double t = 0.0;
      for (int i = 0; i < 4; ++i) t += kSignature[i] * W(i, u, i, v);
      CHECK(std::abs(t) < 1e-12);
    }
  // Product of a constant-curvature 3-space and a line: conformally flat.
  CHECK(W.max_abs() < 1e-12);

  // The unsigned variant is not trace-free.
  const FrameTensor4 Wu = weyl_tensor_unsigned();
  double t = 0.0;
  for (int i = 0; i < 4; ++i) t += kSignature[i] * Wu(i, 1, i, 1);
  CHECK(std::abs(t) > 0.1);

  CHECK(weyl_printed_value(0, 1, 0, 1).value() == 1.5);
  CHECK(weyl_printed_value(0, 3, 3, 0).value() == -0.5);
  CHECK(weyl_printed_value(0, 3, 1, 2).value() == 0.0);
  CHECK(weyl_printed_value(0, 0, 0, 0).value() == 0.0);
}

TEST_CASE("tidal force")
{
  CHECK((tidal_force(e(0), e(1)) + 0.5 * e(1)).norm() < 1e-12);
  CHECK(tidal_force(e(3), e(1)).norm() < 1e-15);
  CHECK(tidal_force(e(0), AlgebraVector()).norm() == 0.0);
  CHECK_THROWS_AS(tidal_force(e(1), e(1)), GeometryError);
  CHECK_THROWS_AS(tidal_force(AlgebraVector(), e(1)), GeometryError);

  CHECK(tidal_trace(e(0)) == doctest::Approx(-1));
  CHECK(std::abs(tidal_trace(e(3))) < 1e-12);
  const AlgebraVector v(1, 1, 1, 1);
  CHECK(tidal_trace(v) == doctest::Approx(1));
  CHECK(tidal_trace(v) == doctest::Approx(-ricci_tensor(v, v)));
  CHECK(tidal_trace_formula(v) == doctest::Approx(1));

  // Self-adjoint on the complement of v = e1.
  const AlgebraVector y = e(1) + 2 * e(2), z = e(2) - e(3);
  CHECK(k_form(tidal_force(e(0), y), z) == doctest::Approx(k_form(y, tidal_force(e(0), z))));
}

TEST_CASE("metric operators")
{
  CHECK((metric_K0().to_matrix() - Mat4::Identity()).norm() < 1e-12);
  CHECK((metric_K1().to_matrix() - k_gram()).norm() < 1e-12);
  CHECK((metric_K2().to_matrix() - Vec4(-1, -1, 1, 1).asDiagonal().toDenseMatrix()).norm() < 1e-12);
  CHECK(metric_index(metric_K0()) == 0);
  CHECK(metric_index(metric_K1()) == 1);
  CHECK(metric_index(metric_K2()) == 2);

  Mat4 bad = Mat4::Identity();
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(MetricOperator{bad}, GeometryError);
  CHECK_THROWS_AS(MetricOperator{Mat4::Zero()}, GeometryError);

  // u12 = -u21 for a k-symmetric operator.
  Mat4 ok = Mat4::Identity();
  ok(0, 1) = 0.3;
  ok(1, 0) = -0.3;
  CHECK_NOTHROW(MetricOperator{ok});

  std::vector<std::string> pattern;
  for (const auto & c : ksym_constraint_pattern()) pattern.push_back(to_string(c));
  CHECK(pattern == std::vector<std::string>{"u12: -u21", "u13: -u31", "u14: -u41", "u23: u32", "u24: u42", "u34: u43"});
}

TEST_CASE("christoffel symbols")
{
  const FrameTensor3 g0 = christoffel_left_invariant(metric_K0());
  const FrameTensor3 g1 = christoffel_left_invariant(metric_K1());
  const FrameTensor3 g2 = christoffel_left_invariant(metric_K2());
  CHECK(g0(0, 1, 2) == doctest::Approx(1.5 * r2).epsilon(1e-12));
  CHECK(g1(0, 1, 2) == doctest::Approx(r2 / 2).epsilon(1e-12));
  CHECK(g2(0, 2, 1) == doctest::Approx(-r2 / 2).epsilon(1e-12));
  CHECK(g2(1, 0, 2) == doctest::Approx(-1.5 * r2).epsilon(1e-12));

  const FrameTensor3 C = structure_constants();
  CHECK(C(0, 1, 2) == doctest::Approx(r2));
  Mat4 singular = Mat4::Identity();
  singular(3, 3) = 0.0;
  CHECK_THROWS_AS(christoffel_left_invariant(FrameTensor2::from_matrix(singular)), GeometryError);
}

TEST_CASE("curvature operators of left-invariant metrics")
{
  const auto cells = listing_curvature_cells();
  REQUIRE(cells.size() == 2);
  for (const ListingCell & c : cells) CHECK((c.evaluated - c.printed).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(cells[0].printed(0, 2) == -2.5);
  CHECK(cells[0].printed(2, 0) == 2.5);
  CHECK(cells[1].printed(0, 1) == -0.5);
  CHECK(cells[1].printed(1, 0) == 0.5);
  CHECK((cells[1].proper - cells[1].printed).cwiseAbs().maxCoeff() < 1e-12);

  // For k the connection is 1/2 ad, so the operator is -1/4 ad_[e_i,e_j]:
  // opposite in sign to riemann(), which uses the 1/4 [[u,v],w] convention.
  const Mat4 op = curvature_operator_nonflat(metric_K1(), 0, 1);
  CHECK((op + 0.25 * ad_matrix(bracket(e(0), e(1)))).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(op.norm() > 0.1);

  CHECK_FALSE(is_flat(metric_K0()));
  CHECK_FALSE(is_flat(metric_K1()));
  CHECK_FALSE(is_flat(metric_K2()));

  // A user-supplied k-symmetric operator.
  Mat4 phi = Vec4(2, 3, 1, 0.5).asDiagonal();
  CHECK_FALSE(is_flat(metric_from_phi(MetricOperator(phi))));
}
