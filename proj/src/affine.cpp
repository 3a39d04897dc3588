#include "gl2geom/affine.hpp"

#include <array>
#include <numbers>

#include <Eigen/Dense>

#include "gl2geom/coords.hpp"

namespace gl2 {

namespace {

bool is_spd(const Mat2 & T)
{
  return std::abs(T(0, 1) - T(1, 0)) <= 1e-12 && T(0, 0) > 0.0 && T.determinant() > 0.0;
}

Mat2 symmetrize(const Mat2 & m) { return 0.5 * (m + m.transpose()); }

double wrap_pi(double a)
{
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

}  // namespace

AlgebraVector flat_affine_product(const AlgebraVector & u, const AlgebraVector & v)
{
  return AlgebraVector::from_matrix(u.to_matrix() * v.to_matrix());
}

Mat2 rotation(double t)
{
  Mat2 o;
  o << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return o;
}

Mat2 omega_matrix()
{
  Mat2 w;
  w << 0.0, 1.0, -1.0, 0.0;
  return w;
}

Mat2 spd_sqrt(const Mat2 & T)
{
  if (!is_spd(T)) throw GeometryError(ErrorKind::InvalidInput, "matrix is not symmetric positive definite");
  const double sd    = std::sqrt(T.determinant());
  const double denom = T.trace() + 2.0 * sd;
  if (denom >= 1e-12) return (T + sd * Mat2::Identity()) / std::sqrt(denom);

  const Eigen::SelfAdjointEigenSolver<Mat2> es(T);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

CoverPoint::CoverPoint(double t, const Mat2 & T) : t_(t), T_(T)
{
  if (!std::isfinite(t) || !is_spd(T)) {
    throw GeometryError(ErrorKind::InvalidInput, "cover point needs a symmetric positive-definite matrix");
  }
}

CoverPoint CoverCoords::to_point() const
{
  if (!(y[1] > 0.0 && y[3] > 0.0 && y[1] * y[3] > y[2] * y[2])) {
    throw GeometryError(ErrorKind::InvalidInput, "cover coordinates need y2 > 0, y4 > 0, y2 y4 > y3^2");
  }
  Mat2 T;
  T << y[1], y[2], y[2], y[3];
  return CoverPoint(y[0], T);
}

CoverCoords CoverCoords::from_point(const CoverPoint & p)
{
  return CoverCoords{Vec4(p.t(), p.T()(0, 0), p.T()(0, 1), p.T()(1, 1))};
}

CoverPoint polar_decompose(const GroupPoint & g)
{
  const Mat2 & m = g.matrix();
  const Mat2 T   = symmetrize(spd_sqrt(symmetrize(m.transpose() * m)));
  const Mat2 O   = m * T.inverse();
  return CoverPoint(wrap_pi(std::atan2(O(1, 0), O(0, 0))), T);
}

GroupPoint cover_project(const CoverPoint & p) { return GroupPoint(rotation(p.t()) * p.T()); }

namespace {

double correction_angle(const CoverPoint & p, const CoverPoint & q)
{
  const Mat2 M     = rotation(-q.t()) * p.T() * rotation(q.t()) * q.T();
  const double den = M.trace();
  if (std::abs(den) <= 1e-12) {
    throw GeometryError(ErrorKind::FormulaBreakdown, "trace of O_{-r} T O_r R vanishes");
  }
  return std::atan((M * omega_matrix()).trace() / den);
}

}  // namespace

CoverPoint cover_multiply(const CoverPoint & p, const CoverPoint & q)
{
  const double phi = correction_angle(p, q);
  const Mat2 S     = rotation(-phi - q.t()) * p.T() * rotation(q.t()) * q.T();
  return CoverPoint(phi + p.t() + q.t(), symmetrize(S));
}

Mat2 cover_multiply_printed_second(const CoverPoint & p, const CoverPoint & q)
{
  const double phi = correction_angle(p, q);
  return rotation(-phi - p.t() - q.t()) * p.T() * rotation(q.t()) * q.T();
}

CoverPoint cover_multiply_polar(const CoverPoint & p, const CoverPoint & q)
{
  const Mat2 & T = p.T();
  const Mat2 & R = q.T();
  const Mat2 Or  = rotation(q.t());
  const Mat2 S   = symmetrize(spd_sqrt(symmetrize(R * Or.transpose() * T * T * Or * R)));
  const Mat2 Os  = rotation(p.t()) * T * Or * R * S.inverse();
  const double base = p.t() + q.t();
  const double s    = base + wrap_pi(std::atan2(Os(1, 0), Os(0, 0)) - base);
  return CoverPoint(s, S);
}

Vec4 developing_map(const CoverCoords & y)
{
  y.to_point();
  return Vec4(y.y[0], y.y[1] - 1.0, y.y[2], y.y[3] - 1.0);
}

Mat4 eta_coefficients(const Vec4 &) { return Mat4::Identity(); }

Vec4 eta_path_integral(const std::vector<Vec4> & vertices, int nodes_per_edge)
{
  if (vertices.size() < 2 || nodes_per_edge < 1) {
    throw GeometryError(ErrorKind::InvalidInput, "path needs two vertices and at least one node per edge");
  }
  // Two-point Gauss-Legendre on each sub-interval.
  const double g = 0.5 / std::sqrt(3.0);
  const std::array<double, 2> nodes{0.5 - g, 0.5 + g};

  Vec4 total = Vec4::Zero();
  for (std::size_t e = 0; e + 1 < vertices.size(); ++e) {
    const Vec4 & a      = vertices[e];
    const Vec4 velocity = vertices[e + 1] - a;
    const double h      = 1.0 / nodes_per_edge;
    for (int k = 0; k < nodes_per_edge; ++k) {
      for (double x : nodes) {
        const Vec4 at = a + (k + x) * h * velocity;
        total += 0.5 * h * (eta_coefficients(at) * velocity);
      }
    }
  }
  return total;
}

double hessian_potential(const GroupPoint & p) { return 0.5 * (p.matrix() * p.matrix()).trace(); }

Vec4 hessian_gradient(const GroupPoint & p)
{
  const Vec4 x = p.coords();
  return Vec4(x[0], x[2], x[1], x[3]);
}

Mat4 hessian_matrix()
{
  Mat4 h;
  h << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  return h;
}

double hessian_vs_metric_gap(const GroupPoint & p) { return (hessian_matrix() - metric_at(p)).cwiseAbs().maxCoeff(); }

}  // namespace gl2
