#include "gl2geom/coords.hpp"

#include <Eigen/Dense>

#include "gl2geom/curvature.hpp"

namespace gl2 {

namespace {

// Symmetric matrix of sum_i a_ii dx_i^2 + sum_{i<j} c_ij dx_i dx_j.
Mat4 quadratic_form(const Mat4 & upper)
{
  Mat4 g = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    g(i, i) = upper(i, i);
    for (int j = i + 1; j < 4; ++j) g(i, j) = g(j, i) = upper(i, j) / 2.0;
  }
  return g;
}

Mat4 weighted_squares(const CoframeFieldValue & cf, const std::array<double, 4> & w)
{
  Mat4 g = Mat4::Zero();
  for (int i = 0; i < 4; ++i) g += w[i] * cf.covectors[i] * cf.covectors[i].transpose();
  return g;
}

}  // namespace

double FrameFieldValue::volume() const
{
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.col(i) = vectors[i];
  return m.determinant();
}

FrameFieldValue frame_at(const GroupPoint & p)
{
  const Vec4 x = p.coords();
  const double s = kHalfSqrt2;
  return FrameFieldValue{p,
    {s * Vec4(-x[1], x[0], -x[3], x[2]), s * Vec4(x[1], x[0], x[3], x[2]), s * Vec4(x[0], -x[1], x[2], -x[3]),
      s * Vec4(x[0], x[1], x[2], x[3])}};
}

FrameFieldValue frame_pushforward(const GroupPoint & p)
{
  FrameFieldValue out{p, {}};
  for (int i = 0; i < 4; ++i) out.vectors[i] = coords_from_mat2(p.matrix() * AlgebraVector::basis(i).to_matrix());
  return out;
}

CoframeFieldValue coframe_at(const GroupPoint & p)
{
  const Vec4 x   = p.coords();
  const double f = 1.0 / (kSqrt2 * p.det());
  return CoframeFieldValue{p,
    {f * Vec4(x[2], x[3], -x[0], -x[1]), f * Vec4(-x[2], x[3], x[0], -x[1]), f * Vec4(x[3], x[2], -x[1], -x[0]),
      f * Vec4(x[3], -x[2], -x[1], x[0])}};
}

Mat4 pairing(const CoframeFieldValue & coframe, const FrameFieldValue & frame)
{
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = coframe.covectors[i].dot(frame.vectors[j]);
  return m;
}

Mat4 metric_at(const GroupPoint & p)
{
  const Vec4 x = p.coords();
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  Mat4 c = Mat4::Zero();
  c(0, 0) = 2 * x4 * x4;
  c(0, 1) = -4 * x3 * x4;
  c(0, 2) = -4 * x2 * x4;
  c(0, 3) = 4 * x2 * x3;
  c(1, 1) = 2 * x3 * x3;
  c(1, 2) = 4 * x1 * x4;
  c(1, 3) = -4 * x1 * x3;
  c(2, 2) = 2 * x2 * x2;
  c(2, 3) = -4 * x1 * x2;
  c(3, 3) = 2 * x1 * x1;
  const double d = p.det();
  return quadratic_form(c) / (2.0 * d * d);
}

Mat4 metric_frame_based(const GroupPoint & p) { return weighted_squares(coframe_at(p), kSignature); }

Mat4 metric_pullback(const GroupPoint & p)
{
  const Mat2 pinv = p.matrix().inverse();
  Mat4 g;
  for (int i = 0; i < 4; ++i) {
    const AlgebraVector u = AlgebraVector::from_matrix(pinv * mat2_from_coords(Vec4::Unit(i)));
    for (int j = 0; j < 4; ++j) {
      const AlgebraVector v = AlgebraVector::from_matrix(pinv * mat2_from_coords(Vec4::Unit(j)));
      g(i, j)               = k_form(u, v);
    }
  }
  return g;
}

Mat4 metric_e2e3_reading(const GroupPoint & p)
{
  const CoframeFieldValue cf = coframe_at(p);
  const auto & t             = cf.covectors;
  return -t[0] * t[0].transpose() + 0.5 * (t[1] * t[2].transpose() + t[2] * t[1].transpose())
         + t[2] * t[2].transpose() + t[3] * t[3].transpose();
}

KplusReadingAudit kplus_reading_audit(const GroupPoint & p)
{
  const Mat4 printed = metric_at(p);
  return KplusReadingAudit{(printed - metric_frame_based(p)).cwiseAbs().maxCoeff(),
    (printed - metric_e2e3_reading(p)).cwiseAbs().maxCoeff()};
}

Mat4 ricci_coord_printed(const GroupPoint & p)
{
  const Vec4 x = p.coords();
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double h  = kHalfSqrt2;
  Mat4 c          = Mat4::Zero();
  c(0, 0) = -x1 * x2 / 2 + x1 * x4 / 2 + x2 * x2 / 2;
  c(0, 1) = h * x1 + h * x2;
  c(0, 2) = h * x1 + h * x4;
  c(0, 3) = h * x1 + h * x3;
  c(1, 1) = kSqrt2 * x1;
  c(1, 2) = -h * x2 + h * x4;
  c(1, 3) = h * x2 + h * x3;
  c(2, 2) = kSqrt2 * x3;
  c(2, 3) = h * x3 - h * x4;
  c(3, 3) = kSqrt2 * x4;
  return quadratic_form(c);
}

Mat4 ricci_coord_frame(const GroupPoint & p)
{
  const Mat4 ric = ricci_matrix().to_matrix();
  const CoframeFieldValue cf = coframe_at(p);
  Mat4 theta;
  for (int i = 0; i < 4; ++i) theta.row(i) = cf.covectors[i].transpose();
  return theta.transpose() * ric * theta;
}

RicciCoordAudit ricci_coord_audit(const GroupPoint & p)
{
  RicciCoordAudit a{ricci_coord_printed(p), ricci_coord_frame(p), 0.0};
  a.max_gap = (a.printed - a.frame).cwiseAbs().maxCoeff();
  return a;
}

}  // namespace gl2
