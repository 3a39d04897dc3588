#include "gl2geom/algebra.hpp"

#include <string>

namespace gl2 {

std::string_view error_name(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::DegeneratePlane: return "DegeneratePlane";
  case ErrorKind::DegenerateClassification: return "DegenerateClassification";
  case ErrorKind::NonSymmetric: return "NonSymmetric";
  case ErrorKind::NotKSymmetric: return "NotKSymmetric";
  case ErrorKind::Singular: return "Singular";
  case ErrorKind::NotLightlike: return "NotLightlike";
  case ErrorKind::NotOrthogonal: return "NotOrthogonal";
  case ErrorKind::OutOfScope: return "OutOfScope";
  case ErrorKind::FormulaBreakdown: return "FormulaBreakdown";
  }
  return "Unknown";
}

std::string_view to_string(CausalType t) noexcept
{
  switch (t) {
  case CausalType::Timelike: return "Timelike";
  case CausalType::Lightlike: return "Lightlike";
  case CausalType::Spacelike: return "Spacelike";
  }
  return "?";
}

std::string_view to_string(Timecone t) noexcept
{
  switch (t) {
  case Timecone::Forward: return "Forward";
  case Timecone::Backward: return "Backward";
  case Timecone::NotTimelike: return "NotTimelike";
  }
  return "?";
}

Mat2 mat2_from_coords(const Vec4 & x)
{
  Mat2 m;
  m << x[0], x[1], x[2], x[3];
  return m;
}

Vec4 coords_from_mat2(const Mat2 & m) { return Vec4(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }

AlgebraVector AlgebraVector::basis(int index)
{
  if (index < 0 || index > 3) {
    throw GeometryError(ErrorKind::InvalidInput, "basis index out of range: " + std::to_string(index));
  }
  Vec4 c = Vec4::Zero();
  c[index] = 1.0;
  return AlgebraVector(c);
}

AlgebraVector AlgebraVector::from_matrix(const Mat2 & m)
{
  // f_i = eps_i k(e_i, m); the basis is k-orthonormal.
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return AlgebraVector(kHalfSqrt2 * (b - c), kHalfSqrt2 * (b + c), kHalfSqrt2 * (a - d), kHalfSqrt2 * (a + d));
}

Mat2 AlgebraVector::to_matrix() const
{
  const double f1 = coeffs_[0], f2 = coeffs_[1], f3 = coeffs_[2], f4 = coeffs_[3];
  Mat2 m;
  m << f3 + f4, f1 + f2, f2 - f1, f4 - f3;
  return kHalfSqrt2 * m;
}

GroupPoint::GroupPoint(const Mat2 & m) : m_(m)
{
  if (!(m.determinant() > 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "group point must have positive determinant");
  }
}

AlgebraVector bracket(const AlgebraVector & u, const AlgebraVector & v)
{
  const Mat2 a = u.to_matrix(), b = v.to_matrix();
  return AlgebraVector::from_matrix(a * b - b * a);
}

double k_form(const AlgebraVector & u, const AlgebraVector & v)
{
  return (u.to_matrix() * v.to_matrix()).trace();
}

Mat4 ad_matrix(const AlgebraVector & u)
{
  Mat4 ad;
  for (int j = 0; j < 4; ++j) { ad.col(j) = bracket(u, AlgebraVector::basis(j)).coeffs(); }
  return ad;
}

double killing_form(const AlgebraVector & u, const AlgebraVector & v)
{
  return (ad_matrix(u) * ad_matrix(v)).trace();
}

Mat4 k_gram()
{
  Mat4 g = Mat4::Zero();
  for (int i = 0; i < 4; ++i) { g(i, i) = kSignature[i]; }
  return g;
}

double causal_quadratic(const AlgebraVector & u)
{
  const Mat2 m = u.to_matrix();
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return a * a + 2.0 * b * c + d * d;
}

CausalType classify(const AlgebraVector & u)
{
  const double q = causal_quadratic(u);
  if (std::abs(q) < kCausalTol) { return CausalType::Lightlike; }
  return q < 0.0 ? CausalType::Timelike : CausalType::Spacelike;
}

Timecone in_timecone_e1(const AlgebraVector & u)
{
  if (classify(u) != CausalType::Timelike) { return Timecone::NotTimelike; }
  const Mat2 m = u.to_matrix();
  const double b = m(0, 1), c = m(1, 0);
  // A timelike vector has a^2 + d^2 < -2bc, which rules out c == b.
  if (std::abs(c - b) <= 1e-12) {
    throw GeometryError(ErrorKind::DegenerateClassification, "timelike vector with c == b");
  }
  return c < b ? Timecone::Forward : Timecone::Backward;
}

bool timecone_convexity_check(const AlgebraVector & u, const AlgebraVector & v, double t)
{
  if (!(t >= 0.0 && t <= 1.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "convex weight must lie in [0,1]");
  }
  const Timecone cu = in_timecone_e1(u);
  const Timecone cv = in_timecone_e1(v);
  if (cu == Timecone::NotTimelike || cu != cv) {
    throw GeometryError(ErrorKind::InvalidInput, "both vectors must lie in the same timecone");
  }
  const AlgebraVector w = t * u + (1.0 - t) * v;
  return classify(w) == CausalType::Timelike && in_timecone_e1(w) == cu;
}

}  // namespace gl2
