#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "gl2geom/algebra.hpp"

namespace gl2 {

/// Threshold on |a^2 - b^2 - c^2| selecting the polynomial Jacobi branch.
inline constexpr double kJacobiDegenerateTol = 1e-8;

struct GeodesicSpec
{
  GroupPoint initial_point;
  AlgebraVector initial_velocity;
};

/**
 * @brief Time-stamped samples produced by the integrators.
 *
 * Any of points / vectors / rates may be empty; non-empty ones have one entry
 * per time.
 */
struct CurveSample
{
  std::vector<double> times;
  std::vector<Mat2> points;
  std::vector<Vec4> vectors;
  std::vector<Vec4> rates;

  /// Throws InvalidInput if times are not strictly increasing or a
  /// non-empty channel has the wrong length.
  void validate() const;
};

/// Classical RK4 step for y' = f(t, y).
template<typename State, typename F>
State rk4_step(const F & f, double t, const State & y, double h)
{
  const State k1 = f(t, y);
  const State k2 = f(t + h / 2, State(y + (h / 2) * k1));
  const State k3 = f(t + h / 2, State(y + (h / 2) * k2));
  const State k4 = f(t + h, State(y + h * k3));
  return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

/// 2x2 matrix exponential via m = mu I + N with N trace-free and N^2 = -det(N) I.
Mat2 expm2(const Mat2 & m);

/// e^{s u}.
GroupPoint exp_geodesic(const AlgebraVector & u, double s);

/// sqrt(2ad - 2bc); on the lightcone this equals |a + d|.
double lightlike_theta(const AlgebraVector & u);
/// Re(sqrt(2bc - 2ad)) exactly as printed; vanishes on the whole lightcone.
double lightlike_theta_printed(const AlgebraVector & u);

/**
 * Lightlike integral curve through the identity:
 *
 *   e^{(a+d)s/2} [ cos(th s/2) + (a-d)/th sin(th s/2)   2b/th sin(th s/2)                   ]
 *                [ 2c/th sin(th s/2)                    cos(th s/2) - (a-d)/th sin(th s/2)   ]
 *
 * with th = lightlike_theta(u); sin(x)/th uses its series when |th s| < 1e-6.
 * Throws NotLightlike.
 */
GroupPoint lightlike_curve(const AlgebraVector & u, double s);

struct LightlikeTraceDet
{
  double printed_trace;    // e^{(a+d)s/2} cos(th s/2)
  double printed_det;      // e^{(a+d)s} (cos(th s/2) + 2 (ad-bc)/th^2 sin(th s/2))
  double evaluated_trace;  // trace of lightlike_curve(u, s)
  double evaluated_det;    // det of lightlike_curve(u, s)
  /// Largest |p(lambda)| over the eigenvalues of the curve for the printed
  /// p(lambda) = lambda^2 + trace lambda + det (both from the evaluated matrix).
  double printed_charpoly_residual;
};

/// Throws NotLightlike.
LightlikeTraceDet curve_trace_det_check(const AlgebraVector & u, double s);

/// Reflected parallel-transport system along an exp-geodesic with reflected
/// velocity x:
///   y1' = s (y3 x2 - y2 x3),  y2' = s (y3 x1 - y1 x3),  y3' = s (y1 x2 - y2 x1),  y4' = 0
Vec4 parallel_transport_rhs(const AlgebraVector & x, const Vec4 & y);

/// RK4 over [0, t1]; points carry the geodesic, vectors the reflected y(t).
/// Throws OutOfScope unless the geodesic starts at the identity.
CurveSample parallel_transport(const GeodesicSpec & spec, const AlgebraVector & y0, double t1, std::size_t steps);

/// Second-order Jacobi system for velocity (a,b,c,d):
///   y1'' = -r2 c y2' + r2 b y3'
///   y2'' = -r2 c y1' + r2 a y3'
///   y3'' =  r2 b y1' - r2 a y2'
///   y4'' = 0
Vec4 jacobi_rhs(const Vec4 & velocity, const Vec4 & yprime);

/// RK4 on the first-order 8-dimensional system; vectors carry y, rates y'.
CurveSample jacobi_integrate(
  const Vec4 & velocity, const Vec4 & y0, const Vec4 & yprime0, double t1, std::size_t steps);

/**
 * @brief Closed-form Jacobi solution.
 *
 * Each component is a combination of four modes:
 *   Generic    1, t, S(t), (C(t) - 1)/alpha^2
 *   Degenerate 1, t, t^2, t^3
 * where alpha^2 = 2(-a^2 + b^2 + c^2), S = sinh(alpha t)/alpha and C = cosh(alpha t)
 * (their trigonometric continuations when alpha^2 < 0). S and C - 1 span the
 * same functions as e^{alpha t}, e^{-alpha t} modulo constants.
 */
class JacobiClosedForm
{
public:
  enum class Branch { Generic, Degenerate };

  JacobiClosedForm(Branch branch, double alpha_sq, const Vec4 & velocity, const Mat4 & coefficients)
      : branch_(branch), alpha_sq_(alpha_sq), velocity_(velocity), coeffs_(coefficients)
  {}

  Branch branch() const noexcept { return branch_; }
  double alpha_sq() const noexcept { return alpha_sq_; }
  const Vec4 & velocity() const noexcept { return velocity_; }
  /// Row = component y1..y4, column = mode.
  const Mat4 & coefficients() const noexcept { return coeffs_; }

  Vec4 modes(double t) const;
  Vec4 mode_rates(double t) const;
  Vec4 evaluate(double t) const { return coeffs_ * modes(t); }
  Vec4 derivative(double t) const { return coeffs_ * mode_rates(t); }

private:
  Branch branch_;
  double alpha_sq_;
  Vec4 velocity_;
  Mat4 coeffs_;
};

/// Mode-matching solve against the initial data. Throws Singular if the 8x8
/// system cannot be solved.
JacobiClosedForm jacobi_closed_form(const Vec4 & velocity, const Vec4 & y0, const Vec4 & yprime0);

/// Generic printed solution with y1'(0)=C1, y2'(0)=C2, y3'(0)=C3 and
/// y4 = C4 t + C5. Requires -a^2 + b^2 + c^2 > 0.
Vec4 printed_jacobi_generic(const Vec4 & velocity, double C1, double C2, double C3, double C4, double C5, double t);

/// Degenerate printed solution; `upper` picks the upper of the printed +-
/// signs. C holds C1..C8.
Vec4 printed_jacobi_degenerate(const Vec4 & velocity, const std::array<double, 8> & C, bool upper, double t);

/// Reflected Jacobi field of the geodesic variation s -> exp(s (u + eps w)),
/// differentiated in eps by central differences with step h.
AlgebraVector geodesic_variation_field(const AlgebraVector & u, const AlgebraVector & w, double s, double h = 1e-4);

/// sigma tau^{-1} sigma.
GroupPoint isometry_Isigma(const GroupPoint & sigma, const GroupPoint & tau);

/// y(t) = sigma(t)^{-1} Y(t) in basis coefficients.
std::vector<AlgebraVector> reflect(const std::vector<GroupPoint> & curve, const std::vector<Mat2> & vectors);
/// Y(t) = sigma(t) y(t).
std::vector<Mat2> unreflect(const std::vector<GroupPoint> & curve, const std::vector<AlgebraVector> & reflected);

}  // namespace gl2
