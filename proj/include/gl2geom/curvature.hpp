#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2geom/algebra.hpp"
#include "gl2geom/tensor.hpp"

namespace gl2 {

/// Degenerate-plane threshold for sectional curvature.
inline constexpr double kPlaneTol = 1e-10;

/**
 * Sign relating the Ricci tensor -B/4 to the contraction of the covariant
 * curvature R_m(x,y,z,w) = k(R(x,y)z, w) built from R(x,y)z = 1/4 [[x,y],z]:
 *
 *   Ricci(u,v) = kRicciContractionSign * sum_i eps_i R_m(e_i, u, v, e_i).
 *
 * The same constant aligns R_m with Ricci inside the Weyl decomposition.
 */
inline constexpr double kRicciContractionSign = -1.0;

// ---------------------------------------------------------------------------
// Bi-invariant metric k+

/// D_u v = 1/2 [u,v].
AlgebraVector levi_civita_biinv(const AlgebraVector & u, const AlgebraVector & v);

/// R(u,v)w = 1/4 [[u,v],w].
AlgebraVector riemann(const AlgebraVector & u, const AlgebraVector & v, const AlgebraVector & w);
double riemann_covariant(
  const AlgebraVector & u, const AlgebraVector & v, const AlgebraVector & w, const AlgebraVector & z);
/// R_m on the frame.
FrameTensor4 riemann_tensor();

/// Throws DegeneratePlane when |k(u,u)k(v,v) - k(u,v)^2| <= kPlaneTol.
double sectional(const AlgebraVector & u, const AlgebraVector & v);
/// 2 * sum_{i<j} K(e_i, e_j), taken literally.
double scalar_curvature();

double ricci_tensor(const AlgebraVector & u, const AlgebraVector & v);
FrameTensor2 ricci_matrix();
/// kRicciContractionSign * sum_i eps_i R_m(e_i, u, v, e_i).
double ricci_by_contraction(const AlgebraVector & u, const AlgebraVector & v);
FrameTensor2 killing_matrix();
FrameTensor2 k_tensor();

/// (h (x) l)(w,x,y,z) = h(w,z)l(x,y) + h(x,y)l(w,z) - h(w,y)l(x,z) - h(x,z)l(w,y).
/// Throws NonSymmetric for asymmetric input.
FrameTensor4 kulkarni_nomizu(const FrameTensor2 & h, const FrameTensor2 & l);

/// W = s R_m - 1/2 Ricci (x) k + S/12 k (x) k with s = kRicciContractionSign,
/// so that the curvature entering the decomposition contracts to Ricci.
FrameTensor4 weyl_tensor();
/// The same decomposition with R_m entered unsigned.
FrameTensor4 weyl_tensor_unsigned();

/// Weyl component from the printed case table, 0-based indices. Empty where
/// the table does not cover the index pattern.
std::optional<double> weyl_printed_value(int i, int j, int k, int l);

/// F_v(y) = R(y,v)v. Throws NotOrthogonal unless k(v,y) = 0 (1e-10) and
/// InvalidInput for v = 0.
AlgebraVector tidal_force(const AlgebraVector & v, const AlgebraVector & y);
/// Trace of y -> R(y,v)v.
double tidal_trace(const AlgebraVector & v);
/// -f1^2 + f2^2 + f3^2.
double tidal_trace_formula(const AlgebraVector & v);

struct RiemannCell
{
  int i, j, k;          // 0-based
  AlgebraVector value;  // R(e_i, e_j) e_k
};

/// The twelve nonzero cells of the curvature lemma as printed.
std::vector<RiemannCell> printed_riemann_lemma();

struct RiemannDiscrepancy
{
  int i, j, k;
  AlgebraVector printed;
  AlgebraVector computed;
};

/// Cells of the full 4x4x4 table where the printed lemma and 1/4 [[u,v],w]
/// disagree (printed cells absent from the lemma count as zero).
std::vector<RiemannDiscrepancy> riemann_lemma_discrepancies(double tol = 1e-12);

// ---------------------------------------------------------------------------
// General left-invariant metrics <u,v>_phi = k(phi u, v)

class MetricOperator
{
public:
  /// Columns are phi(e_j) in basis coefficients. Throws NotKSymmetric or
  /// Singular.
  explicit MetricOperator(const Mat4 & phi);

  static MetricOperator phi0();
  static MetricOperator phi1();
  static MetricOperator phi2();

  const Mat4 & matrix() const noexcept { return phi_; }

private:
  Mat4 phi_;
};

/// Gram matrix phi^T Gram(k).
FrameTensor2 metric_from_phi(const MetricOperator & phi);
/// Number of negative eigenvalues.
int metric_index(const FrameTensor2 & metric);

FrameTensor2 metric_K0();
FrameTensor2 metric_K1();
FrameTensor2 metric_K2();

struct KSymmetricConstraint
{
  int row, col;              // unknown u_{row col}, 0-based
  int other_row, other_col;  // expressed through u_{other_row other_col}
  double factor;             // u_{row col} = factor * u_{other}
};

/// Linear constraints cutting out the k-symmetric operators, derived from
/// phi^T G - G phi = 0 with one entry per off-diagonal pair.
std::vector<KSymmetricConstraint> ksym_constraint_pattern();
/// "u12: -u21" style rendering, 1-based.
std::string to_string(const KSymmetricConstraint & c);

/// C(i,j,k) = C_{ij}^k with [e_i, e_j] = sum_k C_{ij}^k e_k.
FrameTensor3 structure_constants();

/// Gamma(i,j,k) = Gamma_{ij}^k,
///   Gamma_{ij}^k = sum_{l,m} 1/2 K^{kl} (-K_{jm} C_{il}^m - K_{lm} C_{ji}^m + K_{im} C_{lj}^m).
/// Throws Singular or NonSymmetric.
FrameTensor3 christoffel_left_invariant(const FrameTensor2 & metric);

/// Matrix of v -> nabla_{e_i} v, entry (k,j) = Gamma_{ij}^k.
Mat4 connection_matrix(const FrameTensor3 & gamma, int i);

/// nabla_i nabla_j - nabla_j nabla_i - nabla_{[e_i,e_j]}, 0-based indices.
Mat4 curvature_operator_nonflat(const FrameTensor2 & metric, int i, int j);
bool is_flat(const FrameTensor2 & metric, double tol = 1e-12);

/// One of the two curvature expressions printed in the computation listing,
/// evaluated from our Christoffel arrays.
struct ListingCell
{
  std::string metric;      // "K0" or "K2"
  std::string expression;  // as written in the listing, 1-based L's
  int i, j;                // 0-based pair the listing comment names
  Mat4 evaluated;          // the expression evaluated literally
  Mat4 printed;            // printed output matrix
  Mat4 proper;             // curvature_operator_nonflat(metric, i, j)
};

std::vector<ListingCell> listing_curvature_cells();

}  // namespace gl2
