#include "gl2geom/dynamics.hpp"

#include <Eigen/Dense>

#include <complex>

namespace gl2 {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

// (cosh sqrt(z), sinh sqrt(z) / sqrt(z)) continued to z < 0.
std::pair<double, double> cosh_sinhc(double z)
{
  if (std::abs(z) < 1e-12) {
    double c = 1.0, s = 1.0, term_c = 1.0, term_s = 1.0;
    for (int k = 1; k <= 3; ++k) {
      term_c *= z / ((2 * k - 1) * (2 * k));
      term_s *= z / ((2 * k) * (2 * k + 1));
      c += term_c;
      s += term_s;
    }
    return {c, s};
  }
  if (z > 0) {
    const double r = std::sqrt(z);
    return {std::cosh(r), std::sinh(r) / r};
  }
  const double r = std::sqrt(-z);
  return {std::cos(r), std::sin(r) / r};
}

void require_lightlike(const AlgebraVector & u)
{
  if (classify(u) != CausalType::Lightlike) {
    throw GeometryError(ErrorKind::NotLightlike, "vector is not lightlike");
  }
}

}  // namespace

void CurveSample::validate() const
{
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw GeometryError(ErrorKind::InvalidInput, "curve sample times must be strictly increasing");
    }
  }
  auto check = [&](std::size_t n) {
    if (n != 0 && n != times.size()) {
      throw GeometryError(ErrorKind::InvalidInput, "curve sample channel length differs from times");
    }
  };
  check(points.size());
  check(vectors.size());
  check(rates.size());
}

Mat2 expm2(const Mat2 & m)
{
  const double mu    = m.trace() / 2.0;
  const Mat2 n       = m - mu * Mat2::Identity();
  const double delta = -n.determinant();
  const auto [c, sc] = cosh_sinhc(delta);
  return std::exp(mu) * (c * Mat2::Identity() + sc * n);
}

GroupPoint exp_geodesic(const AlgebraVector & u, double s) { return GroupPoint(expm2(s * u.to_matrix())); }

double lightlike_theta(const AlgebraVector & u)
{
  const Mat2 m = u.to_matrix();
  return std::sqrt(std::max(0.0, 2.0 * m(0, 0) * m(1, 1) - 2.0 * m(0, 1) * m(1, 0)));
}

double lightlike_theta_printed(const AlgebraVector & u)
{
  const Mat2 m = u.to_matrix();
  return std::sqrt(std::complex<double>(2.0 * m(0, 1) * m(1, 0) - 2.0 * m(0, 0) * m(1, 1), 0.0)).real();
}

GroupPoint lightlike_curve(const AlgebraVector & u, double s)
{
  require_lightlike(u);
  const Mat2 m   = u.to_matrix();
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double th = lightlike_theta(u);
  const double x  = th * s / 2.0;

  // sin(th s / 2) / th
  double sin_over_th;
  if (std::abs(th * s) < 1e-6) {
    sin_over_th = (s / 2.0) * (1.0 - x * x / 6.0);
  } else {
    sin_over_th = std::sin(x) / th;
  }
  const double cs = std::cos(x);

  Mat2 r;
  r << cs + (a - d) * sin_over_th, 2.0 * b * sin_over_th, 2.0 * c * sin_over_th, cs - (a - d) * sin_over_th;
  return GroupPoint(std::exp((a + d) * s / 2.0) * r);
}

LightlikeTraceDet curve_trace_det_check(const AlgebraVector & u, double s)
{
  require_lightlike(u);
  const Mat2 m   = u.to_matrix();
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double th = lightlike_theta(u);
  const double x  = th * s / 2.0;

  LightlikeTraceDet out{};
  out.printed_trace = std::exp((a + d) * s / 2.0) * std::cos(x);

  // 2 (ad - bc) / th^2 is 1 on the lightcone; its limit is used when th -> 0,
  // where the sine factor vanishes anyway.
  const double ratio = th * th > 1e-14 ? 2.0 * (a * d - b * c) / (th * th) : 1.0;
  out.printed_det    = std::exp((a + d) * s) * (std::cos(x) + ratio * std::sin(x));

  const Mat2 alpha    = lightlike_curve(u, s).matrix();
  out.evaluated_trace = alpha.trace();
  out.evaluated_det   = alpha.determinant();

  const Eigen::EigenSolver<Mat2> es(alpha);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const std::complex<double> lam = es.eigenvalues()[i];
    const std::complex<double> p   = lam * lam + out.evaluated_trace * lam + out.evaluated_det;
    worst                          = std::max(worst, std::abs(p));
  }
  out.printed_charpoly_residual = worst;
  return out;
}

Vec4 parallel_transport_rhs(const AlgebraVector & x, const Vec4 & y)
{
  const double s = kHalfSqrt2;
  return Vec4(s * (y[2] * x[1] - y[1] * x[2]), s * (y[2] * x[0] - y[0] * x[2]), s * (y[0] * x[1] - y[1] * x[0]), 0.0);
}

CurveSample parallel_transport(const GeodesicSpec & spec, const AlgebraVector & y0, double t1, std::size_t steps)
{
  if (steps < 1) { throw GeometryError(ErrorKind::InvalidInput, "steps must be >= 1"); }
  if ((spec.initial_point.matrix() - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
    throw GeometryError(ErrorKind::OutOfScope, "parallel transport is only defined from the identity");
  }
  const AlgebraVector & x = spec.initial_velocity;
  const auto f            = [&x](double, const Vec4 & y) -> Vec4 { return parallel_transport_rhs(x, y); };

  CurveSample out;
  const double h = t1 / static_cast<double>(steps);
  Vec4 y         = y0.coeffs();
  for (std::size_t n = 0; n <= steps; ++n) {
    const double t = h * static_cast<double>(n);
    out.times.push_back(t);
    out.points.push_back(exp_geodesic(x, t).matrix());
    out.vectors.push_back(y);
    if (n < steps) y = rk4_step<Vec4>(f, t, y, h);
  }
  return out;
}

Vec4 jacobi_rhs(const Vec4 & v, const Vec4 & yp)
{
  const double a = v[0], b = v[1], c = v[2];
  const double r2 = kSqrt2;
  return Vec4(-r2 * c * yp[1] + r2 * b * yp[2], -r2 * c * yp[0] + r2 * a * yp[2], r2 * b * yp[0] - r2 * a * yp[1], 0.0);
}

CurveSample jacobi_integrate(
  const Vec4 & velocity, const Vec4 & y0, const Vec4 & yprime0, double t1, std::size_t steps)
{
  if (steps < 1) { throw GeometryError(ErrorKind::InvalidInput, "steps must be >= 1"); }
  const auto f = [&velocity](double, const Vec8 & s) -> Vec8 {
    Vec8 r;
    r.head<4>() = s.tail<4>();
    r.tail<4>() = jacobi_rhs(velocity, s.tail<4>());
    return r;
  };

  CurveSample out;
  const double h = t1 / static_cast<double>(steps);
  Vec8 state;
  state << y0, yprime0;
  for (std::size_t n = 0; n <= steps; ++n) {
    const double t = h * static_cast<double>(n);
    out.times.push_back(t);
    out.vectors.push_back(state.head<4>());
    out.rates.push_back(state.tail<4>());
    if (n < steps) state = rk4_step<Vec8>(f, t, state, h);
  }
  return out;
}

Vec4 JacobiClosedForm::modes(double t) const
{
  if (branch_ == Branch::Degenerate) return Vec4(1.0, t, t * t, t * t * t);

  const double z = alpha_sq_ * t * t;
  const auto [c, sc] = cosh_sinhc(z);
  // (C - 1)/alpha^2 = 2 sinh^2(alpha t / 2)/alpha^2 = (t^2/2) sinhc^2(z/4)
  const auto [c_half, sc_half] = cosh_sinhc(z / 4.0);
  (void)c;
  (void)c_half;
  return Vec4(1.0, t, t * sc, 0.5 * t * t * sc_half * sc_half);
}

Vec4 JacobiClosedForm::mode_rates(double t) const
{
  if (branch_ == Branch::Degenerate) return Vec4(0.0, 1.0, 2.0 * t, 3.0 * t * t);

  const auto [c, sc] = cosh_sinhc(alpha_sq_ * t * t);
  return Vec4(0.0, 1.0, c, t * sc);
}

JacobiClosedForm jacobi_closed_form(const Vec4 & velocity, const Vec4 & y0, const Vec4 & yprime0)
{
  const double a = velocity[0], b = velocity[1], c = velocity[2];
  const double gap      = a * a - b * b - c * c;
  const double alpha_sq = 2.0 * (-a * a + b * b + c * c);

  // y'' = -A y' on the (e1,e2,e3) block, with A read off the Jacobi system.
  Eigen::Matrix3d A;
  for (int j = 0; j < 3; ++j) {
    Vec4 unit = Vec4::Zero();
    unit[j]   = 1.0;
    A.col(j)  = -jacobi_rhs(velocity, unit).head<3>();
  }

  Mat8 M = Mat8::Zero();
  Vec8 rhs;
  rhs << y0, yprime0;

  // Column-wise mode contributions to (y(0), y'(0)).
  // Unknowns: 0..2 constants, 3..5 branch-specific, 6 D0, 7 D1.
  for (int i = 0; i < 3; ++i) M(i, i) = 1.0;
  M(3, 6) = 1.0;
  M(7, 7) = 1.0;

  const bool degenerate = std::abs(gap) <= kJacobiDegenerateTol;
  Eigen::Vector3d n = Eigen::Vector3d(a, b, c);
  Eigen::Vector3d f1, f2;

  if (degenerate) {
    // y = P + t z0 - t^2/2 A z0 + t^3/6 A^2 z0
    for (int j = 0; j < 3; ++j) M(4 + j, 3 + j) = 1.0;
  } else {
    // y = P + q n t + S(t) w - (C(t)-1)/alpha^2 A w, w in image(A), A n = 0
    Eigen::ColPivHouseholderQR<Eigen::Matrix3d> qr(A);
    qr.setThreshold(1e-10);
    if (qr.rank() != 2 || n.norm() == 0.0) {
      throw GeometryError(ErrorKind::Singular, "Jacobi mode-matching basis is degenerate");
    }
    const Eigen::Matrix3d Q = qr.householderQ();
    f1                      = Q.col(0);
    f2                      = Q.col(1);
    for (int i = 0; i < 3; ++i) {
      M(4 + i, 3) = n[i];
      M(4 + i, 4) = f1[i];
      M(4 + i, 5) = f2[i];
    }
  }

  Eigen::FullPivLU<Mat8> lu(M);
  if (!lu.isInvertible()) {
    throw GeometryError(ErrorKind::Singular, "Jacobi mode-matching system is singular");
  }
  const Vec8 u = lu.solve(rhs);

  Mat4 coeffs = Mat4::Zero();
  for (int i = 0; i < 3; ++i) coeffs(i, 0) = u[i];
  coeffs(3, 0) = u[6];
  coeffs(3, 1) = u[7];

  if (degenerate) {
    const Eigen::Vector3d z0 = u.segment<3>(3);
    coeffs.block<3, 1>(0, 1) = z0;
    coeffs.block<3, 1>(0, 2) = -0.5 * A * z0;
    coeffs.block<3, 1>(0, 3) = (A * A * z0) / 6.0;
    return JacobiClosedForm(JacobiClosedForm::Branch::Degenerate, alpha_sq, velocity, coeffs);
  }

  const Eigen::Vector3d w   = u[4] * f1 + u[5] * f2;
  coeffs.block<3, 1>(0, 1) = u[3] * n;
  coeffs.block<3, 1>(0, 2) = w;
  coeffs.block<3, 1>(0, 3) = -A * w;
  return JacobiClosedForm(JacobiClosedForm::Branch::Generic, alpha_sq, velocity, coeffs);
}

Vec4 printed_jacobi_generic(const Vec4 & v, double C1, double C2, double C3, double C4, double C5, double t)
{
  const double a = v[0], b = v[1], c = v[2];
  const double kk = -a * a + b * b + c * c;
  if (!(kk > 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "printed generic solution needs -a^2+b^2+c^2 > 0");
  }
  const double s  = std::sqrt(kk);
  const double D  = a * a - b * b - c * c;
  const double q  = kSqrt2 * s;
  const double ep = std::exp(q * t), em = std::exp(-q * t);

  const double y1 = (2 * a * t * (a * C1 - b * C2 - c * C3)
                      + em / q * (b * b * C1 + c * c * C1 - a * b * C2 + c * s * C2 - a * c * C3 - b * s * C3)
                      + ep / q * (-b * b * C1 - c * c * C1 + a * b * C2 + c * s * C2 + a * c * C3 - b * s * C3))
                    / (2 * D);
  // The printed exponent of the first y2 term reads sqrt(-a^2+b^2+c^2 t); t is
  // taken outside the root as in y1 and y3.
  const double y2 = (-2 * b * t * (-a * C1 + b * C2 + c * C3)
                      + em / q * (a * b * C1 + c * s * C1 - a * a * C2 + c * c * C2 - b * c * C3 - a * s * C3)
                      + ep / q * (-a * b * C1 + c * s * C1 + a * a * C2 - c * c * C2 + b * c * C3 - a * s * C3))
                    / (2 * D);
  const double y3 = (-2 * c * t * (-a * C1 + b * C2 + c * C3)
                      + ep / q * (-a * c * C1 - b * s * C1 + b * c * C2 + a * s * C2 + a * a * C3 - b * b * C3)
                      + em / q * (a * c * C1 - b * s * C1 - b * c * C2 + a * s * C2 - a * a * C3 + b * b * C3))
                    / (2 * D);
  return Vec4(y1, y2, y3, C4 * t + C5);
}

Vec4 printed_jacobi_degenerate(const Vec4 & v, const std::array<double, 8> & C, bool upper, double t)
{
  const double b = v[1], c = v[2];
  const double q  = std::sqrt(b * b + c * c);
  const double pm = upper ? 1.0 : -1.0;  // the printed "+-"
  const double mp = -pm;                 // the printed "-+"
  const double r2 = kSqrt2;
  const double t2 = t * t, t3 = t2 * t;
  const auto & [C1, C2, C3, C4, C5, C6, C7, C8] = C;

  const double y1 = C1 + (3 * t + b * b * t3 + c * c * t3) / 3 * C2 + (-3 * r2 * c * t2 + pm * 2 * b * q * t3) / 6 * C4
                    + (3 * r2 * b * t2 + pm * 2 * c * q * t3) / 6 * C6;
  const double y2 = (-3 * r2 * c * t2 + mp * 2 * b * q * t3) / 6 * C2 + C3 + (3 * t - b * b * t3) / 3 * C4
                    + (mp * 3 * r2 * q * t2 - 2 * b * c * t3) / 6 * C6;
  const double y3 = (3 * r2 * b * t2 + mp * 2 * c * q * t3) / 6 * C2 + (mp * 3 * r2 * q * t2 - 2 * b * c * t3) / 6 * C4
                    + C5 + (3 * t - c * c * t3) / 3 * C6;
  return Vec4(y1, y2, y3, C7 * t + C8);
}

AlgebraVector geodesic_variation_field(const AlgebraVector & u, const AlgebraVector & w, double s, double h)
{
  const Mat2 plus  = expm2(s * (u + h * w).to_matrix());
  const Mat2 minus = expm2(s * (u - h * w).to_matrix());
  const Mat2 J     = (plus - minus) / (2.0 * h);
  return AlgebraVector::from_matrix(expm2(-s * u.to_matrix()) * J);
}

GroupPoint isometry_Isigma(const GroupPoint & sigma, const GroupPoint & tau)
{
  return GroupPoint(sigma.matrix() * tau.matrix().inverse() * sigma.matrix());
}

std::vector<AlgebraVector> reflect(const std::vector<GroupPoint> & curve, const std::vector<Mat2> & vectors)
{
  if (curve.size() != vectors.size()) {
    throw GeometryError(ErrorKind::InvalidInput, "one tangent vector per curve point is required");
  }
  std::vector<AlgebraVector> out;
  out.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out.push_back(AlgebraVector::from_matrix(curve[i].matrix().inverse() * vectors[i]));
  }
  return out;
}

std::vector<Mat2> unreflect(const std::vector<GroupPoint> & curve, const std::vector<AlgebraVector> & reflected)
{
  if (curve.size() != reflected.size()) {
    throw GeometryError(ErrorKind::InvalidInput, "one reflected vector per curve point is required");
  }
  std::vector<Mat2> out;
  out.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) out.push_back(curve[i].matrix() * reflected[i].to_matrix());
  return out;
}

}  // namespace gl2
