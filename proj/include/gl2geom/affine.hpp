#pragma once

#include <vector>

#include "gl2geom/algebra.hpp"

namespace gl2 {

/// u o v, the matrix product in basis coefficients.
AlgebraVector flat_affine_product(const AlgebraVector & u, const AlgebraVector & v);

/// O_t = [cos t, -sin t; sin t, cos t].
Mat2 rotation(double t);
/// [0 1; -1 0].
Mat2 omega_matrix();

/// Closed form (T + sqrt(det) I) / sqrt(trace + 2 sqrt(det)), with an
/// eigendecomposition fallback. Throws InvalidInput unless T is SPD.
Mat2 spd_sqrt(const Mat2 & T);

/// A point (t, T) of R x SDP(2). The angle is never reduced mod 2 pi.
class CoverPoint
{
public:
  CoverPoint() : t_(0.0), T_(Mat2::Identity()) {}
  /// Throws InvalidInput unless T is symmetric (1e-12) and positive definite.
  CoverPoint(double t, const Mat2 & T);

  static CoverPoint identity() { return CoverPoint(); }

  double t() const noexcept { return t_; }
  const Mat2 & T() const noexcept { return T_; }

private:
  double t_;
  Mat2 T_;
};

/// (y1, y2, y3, y4) with T = [y2 y3; y3 y4].
struct CoverCoords
{
  Vec4 y;

  /// Throws InvalidInput unless y2 > 0, y4 > 0 and y2 y4 > y3^2.
  CoverPoint to_point() const;
  static CoverCoords from_point(const CoverPoint & p);
};

/// g = O_t T with T = (g^T g)^{1/2} and t in (-pi, pi].
CoverPoint polar_decompose(const GroupPoint & g);
/// O_t T.
GroupPoint cover_project(const CoverPoint & p);

/// With M = O_{-r} T O_r R and theta = tr(M omega) / tr(M):
///   (t,T).(r,R) = (arctan(theta) + t + r, O_{-arctan(theta) - r} T O_r R)
/// The result is symmetrized. Throws FormulaBreakdown when |tr M| <= 1e-12.
CoverPoint cover_multiply(const CoverPoint & p, const CoverPoint & q);
/// O_{-arctan(theta) - t - r} T O_r R exactly as printed.
Mat2 cover_multiply_printed_second(const CoverPoint & p, const CoverPoint & q);
/// (s, (R O_{-r} T^2 O_r R)^{1/2}) with O_s = O_t T O_r R S^{-1}, s lifted next to t + r.
CoverPoint cover_multiply_polar(const CoverPoint & p, const CoverPoint & q);

/// (y1, y2 - 1, y3, y4 - 1).
Vec4 developing_map(const CoverCoords & y);
/// Row i holds eta_i = dy_i in dy coordinates at y.
Mat4 eta_coefficients(const Vec4 & y);
/// Integral of eta = (dy1, dy2, dy3, dy4) along the polygon through the given
/// vertices, by composite Gauss-Legendre quadrature on each edge.
Vec4 eta_path_integral(const std::vector<Vec4> & vertices, int nodes_per_edge = 8);

/// 1/2 trace(p^2).
double hessian_potential(const GroupPoint & p);
/// (x1, x3, x2, x4).
Vec4 hessian_gradient(const GroupPoint & p);
/// The printed constant second-derivative matrix.
Mat4 hessian_matrix();
/// max |hessian_matrix - metric_at(p)| over entries.
double hessian_vs_metric_gap(const GroupPoint & p);

}  // namespace gl2
