#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/LU>

#include "gl2geom/error.hpp"

/**
 * @brief The Lie algebra gl(2,R) with the trace form k(u,v) = trace(uv).
 *
 * Basis (k-orthonormal, index 0 is the timelike direction)
 * --------------------------------------------------------
 *   e1 = s [ 0 1; -1 0 ]    k(e1,e1) = -1
 *   e2 = s [ 0 1;  1 0 ]    k(e2,e2) =  1
 *   e3 = s [ 1 0;  0 -1 ]   k(e3,e3) =  1
 *   e4 = s [ 1 0;  0 1 ]    k(e4,e4) =  1      with s = sqrt(2)/2
 *
 * Matrices are indexed row-major as (x1 x2; x3 x4) everywhere.
 */
namespace gl2 {

using Mat2 = Eigen::Matrix2d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

inline const double kSqrt2     = std::sqrt(2.0);
inline const double kHalfSqrt2 = std::sqrt(2.0) / 2.0;

/// Signature weights of k on the basis.
inline constexpr std::array<double, 4> kSignature{-1.0, 1.0, 1.0, 1.0};

/// Causal classification threshold on q(u) = a^2 + 2bc + d^2.
inline constexpr double kCausalTol = 1e-10;

class AlgebraVector
{
public:
  AlgebraVector() : coeffs_(Vec4::Zero()) {}
  explicit AlgebraVector(const Vec4 & coeffs) : coeffs_(coeffs) {}
  AlgebraVector(double f1, double f2, double f3, double f4) : coeffs_(f1, f2, f3, f4) {}

  /// Basis vector e_{index+1}.
  static AlgebraVector basis(int index);
  /// Total on gl(2,R): the basis spans all 2x2 matrices.
  static AlgebraVector from_matrix(const Mat2 & m);

  Mat2 to_matrix() const;
  const Vec4 & coeffs() const noexcept { return coeffs_; }
  double operator[](int i) const { return coeffs_[i]; }

  AlgebraVector operator+(const AlgebraVector & o) const { return AlgebraVector(coeffs_ + o.coeffs_); }
  AlgebraVector operator-(const AlgebraVector & o) const { return AlgebraVector(coeffs_ - o.coeffs_); }
  AlgebraVector operator-() const { return AlgebraVector(-coeffs_); }
  AlgebraVector operator*(double s) const { return AlgebraVector(coeffs_ * s); }
  friend AlgebraVector operator*(double s, const AlgebraVector & v) { return v * s; }

  double norm() const { return coeffs_.norm(); }

private:
  Vec4 coeffs_;
};

/// A point of the identity component: 2x2 real matrix with det > 0.
class GroupPoint
{
public:
  GroupPoint() : m_(Mat2::Identity()) {}
  /// Throws InvalidInput when det <= 0.
  explicit GroupPoint(const Mat2 & m);

  static GroupPoint identity() { return GroupPoint(); }

  const Mat2 & matrix() const noexcept { return m_; }
  double det() const { return m_.determinant(); }
  GroupPoint inverse() const { return GroupPoint(m_.inverse()); }
  GroupPoint operator*(const GroupPoint & o) const { return GroupPoint(m_ * o.m_); }

  /// Natural coordinates (x1, x2, x3, x4) = row-major entries.
  Vec4 coords() const { return Vec4(m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1)); }

private:
  Mat2 m_;
};

enum class CausalType { Timelike, Lightlike, Spacelike };
enum class Timecone { Forward, Backward, NotTimelike };

std::string_view to_string(CausalType t) noexcept;
std::string_view to_string(Timecone t) noexcept;

Mat2 mat2_from_coords(const Vec4 & x);
Vec4 coords_from_mat2(const Mat2 & m);

AlgebraVector bracket(const AlgebraVector & u, const AlgebraVector & v);
double k_form(const AlgebraVector & u, const AlgebraVector & v);
/// trace(ad_u o ad_v), with ad evaluated in the orthonormal basis.
double killing_form(const AlgebraVector & u, const AlgebraVector & v);
/// Matrix of ad_u acting on basis coefficients.
Mat4 ad_matrix(const AlgebraVector & u);
/// Gram matrix of k on the basis, diag(-1, 1, 1, 1).
Mat4 k_gram();

/// a^2 + 2bc + d^2 of the matrix (a b; c d); equals k(u,u) = trace(u^2).
double causal_quadratic(const AlgebraVector & u);
CausalType classify(const AlgebraVector & u);

/// Membership in C(e1) or -C(e1): Forward iff timelike and c < b.
/// Throws DegenerateClassification for a timelike vector with c == b.
Timecone in_timecone_e1(const AlgebraVector & u);

/// Whether t u + (1-t) v is timelike and in the common cone of u and v.
/// Throws InvalidInput unless u, v share a cone and t is in [0,1].
bool timecone_convexity_check(const AlgebraVector & u, const AlgebraVector & v, double t);

}  // namespace gl2
