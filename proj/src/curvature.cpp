#include "gl2geom/curvature.hpp"

#include <Eigen/Dense>

#include <cstdio>

namespace gl2 {

namespace {

AlgebraVector e(int i) { return AlgebraVector::basis(i); }

}  // namespace

AlgebraVector levi_civita_biinv(const AlgebraVector & u, const AlgebraVector & v) { return 0.5 * bracket(u, v); }

AlgebraVector riemann(const AlgebraVector & u, const AlgebraVector & v, const AlgebraVector & w)
{
  return 0.25 * bracket(bracket(u, v), w);
}

double riemann_covariant(
  const AlgebraVector & u, const AlgebraVector & v, const AlgebraVector & w, const AlgebraVector & z)
{
  return k_form(riemann(u, v, w), z);
}

FrameTensor4 riemann_tensor()
{
  FrameTensor4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const AlgebraVector rv = riemann(e(a), e(b), e(c));
        for (int d = 0; d < 4; ++d) r(a, b, c, d) = k_form(rv, e(d));
      }
  return r;
}

double sectional(const AlgebraVector & u, const AlgebraVector & v)
{
  const double q = k_form(u, u) * k_form(v, v) - k_form(u, v) * k_form(u, v);
  if (std::abs(q) <= kPlaneTol) {
    throw GeometryError(ErrorKind::DegeneratePlane, "span{u,v} is a degenerate plane");
  }
  const AlgebraVector b = bracket(u, v);
  return 0.25 * k_form(b, b) / q;
}

double scalar_curvature()
{
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += sectional(e(i), e(j));
  return 2.0 * s;
}

double ricci_tensor(const AlgebraVector & u, const AlgebraVector & v) { return -killing_form(u, v) / 4.0; }

FrameTensor2 ricci_matrix()
{
  FrameTensor2 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = ricci_tensor(e(i), e(j));
  return r;
}

double ricci_by_contraction(const AlgebraVector & u, const AlgebraVector & v)
{
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += kSignature[i] * riemann_covariant(e(i), u, v, e(i));
  return kRicciContractionSign * s;
}

FrameTensor2 killing_matrix()
{
  FrameTensor2 b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = killing_form(e(i), e(j));
  return b;
}

FrameTensor2 k_tensor() { return FrameTensor2::from_matrix(k_gram()); }

FrameTensor4 kulkarni_nomizu(const FrameTensor2 & h, const FrameTensor2 & l)
{
  if (!h.is_symmetric(1e-12) || !l.is_symmetric(1e-12)) {
    throw GeometryError(ErrorKind::NonSymmetric, "Kulkarni-Nomizu product needs symmetric 2-tensors");
  }
  FrameTensor4 t;
  for (int w = 0; w < 4; ++w)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z)
          t(w, x, y, z) = h(w, z) * l(x, y) + h(x, y) * l(w, z) - h(w, y) * l(x, z) - h(x, z) * l(w, y);
  return t;
}

namespace {

FrameTensor4 weyl_with_sign(double curvature_sign)
{
  const FrameTensor2 k   = k_tensor();
  const FrameTensor2 ric = ricci_matrix();
  const double s         = scalar_curvature();
  return curvature_sign * riemann_tensor() - 0.5 * kulkarni_nomizu(ric, k) + (s / 12.0) * kulkarni_nomizu(k, k);
}

}  // namespace

FrameTensor4 weyl_tensor() { return weyl_with_sign(kRicciContractionSign); }

FrameTensor4 weyl_tensor_unsigned() { return weyl_with_sign(1.0); }

std::optional<double> weyl_printed_value(int i0, int j0, int k0, int l0)
{
  const int i = i0 + 1, j = j0 + 1, k = k0 + 1, l = l0 + 1;
  auto is = [&](int a, int b, int c, int d) { return i == a && j == b && k == c && l == d; };

  if (i == j && j == k && k == l) return 0.0;
  if (i == j && j == k && k != l) return 0.0;
  if (i != j && i != k && i != l && j != k && j != l && k != l) return 0.0;

  if (is(1, 2, 1, 2) || is(1, 3, 1, 3) || is(2, 3, 3, 2)) return 1.5;
  if (is(1, 2, 2, 1) || is(1, 3, 3, 1) || is(2, 3, 2, 3)) return -1.5;
  if (is(2, 4, 4, 2) || is(3, 4, 4, 3) || is(4, 2, 2, 4) || is(4, 3, 3, 4) || is(1, 4, 1, 4) || is(4, 1, 4, 1))
    return 0.5;
  if (is(1, 4, 4, 1) || is(4, 1, 1, 4) || is(2, 4, 2, 4) || is(3, 4, 3, 4) || is(4, 2, 4, 2) || is(4, 3, 4, 3))
    return -0.5;
  return std::nullopt;
}

AlgebraVector tidal_force(const AlgebraVector & v, const AlgebraVector & y)
{
  if (v.norm() == 0.0) { throw GeometryError(ErrorKind::InvalidInput, "tidal force needs v != 0"); }
  if (std::abs(k_form(v, y)) > 1e-10) {
    throw GeometryError(ErrorKind::NotOrthogonal, "y must be k-orthogonal to v");
  }
  return riemann(y, v, v);
}

double tidal_trace(const AlgebraVector & v)
{
  double tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += riemann(e(i), v, v)[i];
  return tr;
}

double tidal_trace_formula(const AlgebraVector & v) { return -v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

std::vector<RiemannCell> printed_riemann_lemma()
{
  auto cell = [](int i, int j, int k, double s, int dir) {
    return RiemannCell{i - 1, j - 1, k - 1, s * e(dir - 1)};
  };
  return {
    cell(1, 2, 1, 0.5, 2),  cell(1, 2, 2, 0.5, 1),  cell(1, 3, 1, 0.5, 3),  cell(1, 3, 3, 0.5, 1),
    cell(2, 1, 1, -0.5, 2), cell(2, 1, 2, -0.5, 1), cell(2, 3, 2, -0.5, 3), cell(2, 3, 3, 0.5, 2),
    cell(3, 1, 1, -0.5, 3), cell(3, 1, 3, -0.5, 1), cell(3, 2, 2, 1.0, 3),  cell(3, 2, 3, -0.5, 2),
  };
}

std::vector<RiemannDiscrepancy> riemann_lemma_discrepancies(double tol)
{
  AlgebraVector printed[4][4][4];
  for (const auto & c : printed_riemann_lemma()) printed[c.i][c.j][c.k] = c.value;

  std::vector<RiemannDiscrepancy> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const AlgebraVector computed = riemann(e(i), e(j), e(k));
        if ((computed - printed[i][j][k]).coeffs().cwiseAbs().maxCoeff() > tol) {
          out.push_back({i, j, k, printed[i][j][k], computed});
        }
      }
  return out;
}

// ---------------------------------------------------------------------------

MetricOperator::MetricOperator(const Mat4 & phi) : phi_(phi)
{
  const Mat4 g = k_gram();
  if ((phi.transpose() * g - g * phi).cwiseAbs().maxCoeff() > 1e-12) {
    throw GeometryError(ErrorKind::NotKSymmetric, "operator is not k-symmetric");
  }
  if (std::abs(phi.determinant()) <= 1e-10) {
    throw GeometryError(ErrorKind::Singular, "metric operator is not invertible");
  }
}

MetricOperator MetricOperator::phi0() { return MetricOperator(Vec4(-1, 1, 1, 1).asDiagonal().toDenseMatrix()); }
MetricOperator MetricOperator::phi1() { return MetricOperator(Mat4::Identity()); }
MetricOperator MetricOperator::phi2() { return MetricOperator(Vec4(1, -1, 1, 1).asDiagonal().toDenseMatrix()); }

FrameTensor2 metric_from_phi(const MetricOperator & phi)
{
  const Mat4 gram = phi.matrix().transpose() * k_gram();
  FrameTensor2 m  = FrameTensor2::from_matrix(gram);
  if (!m.is_symmetric(1e-12)) { throw GeometryError(ErrorKind::NonSymmetric, "metric Gram matrix not symmetric"); }
  return m;
}

int metric_index(const FrameTensor2 & metric)
{
  Eigen::SelfAdjointEigenSolver<Mat4> es(metric.to_matrix());
  int neg = 0;
  for (int i = 0; i < 4; ++i)
    if (es.eigenvalues()[i] < 0.0) ++neg;
  return neg;
}

FrameTensor2 metric_K0() { return metric_from_phi(MetricOperator::phi0()); }
FrameTensor2 metric_K1() { return metric_from_phi(MetricOperator::phi1()); }
FrameTensor2 metric_K2() { return metric_from_phi(MetricOperator::phi2()); }

std::vector<KSymmetricConstraint> ksym_constraint_pattern()
{
  // Row (i,j) of the linear map u -> u^T G - G u, written over the 16
  // unknowns u_{ab}; each off-diagonal row couples exactly two unknowns.
  const Mat4 g = k_gram();
  std::vector<KSymmetricConstraint> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double coeff[4][4] = {};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          Mat4 unit = Mat4::Zero();
          unit(a, b) = 1.0;
          coeff[a][b] = (unit.transpose() * g - g * unit)(i, j);
        }
      // coeff[i][j] u_ij + coeff[j][i] u_ji = 0
      out.push_back({i, j, j, i, -coeff[j][i] / coeff[i][j]});
    }
  return out;
}

std::string to_string(const KSymmetricConstraint & c)
{
  char buf[128];
  const char * sign = c.factor < 0 ? "-" : "";
  const double mag  = std::abs(c.factor);
  if (mag == 1.0) {
    std::snprintf(buf, sizeof buf, "u%d%d: %su%d%d", c.row + 1, c.col + 1, sign, c.other_row + 1, c.other_col + 1);
  } else {
    std::snprintf(buf, sizeof buf, "u%d%d: %.17g*u%d%d", c.row + 1, c.col + 1, c.factor, c.other_row + 1,
      c.other_col + 1);
  }
  return buf;
}

FrameTensor3 structure_constants()
{
  FrameTensor3 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const AlgebraVector b = bracket(e(i), e(j));
      for (int k = 0; k < 4; ++k) c(i, j, k) = b[k];
    }
  return c;
}

FrameTensor3 christoffel_left_invariant(const FrameTensor2 & metric)
{
  if (!metric.is_symmetric(1e-12)) { throw GeometryError(ErrorKind::NonSymmetric, "metric must be symmetric"); }
  const Mat4 K = metric.to_matrix();
  if (std::abs(K.determinant()) <= 1e-10) { throw GeometryError(ErrorKind::Singular, "metric is singular"); }
  const Mat4 Kinv       = K.inverse();
  const FrameTensor3 C  = structure_constants();

  FrameTensor3 gamma;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l)
          for (int m = 0; m < 4; ++m)
            s += 0.5 * Kinv(k, l) * (-K(j, m) * C(i, l, m) - K(l, m) * C(j, i, m) + K(i, m) * C(l, j, m));
        gamma(i, j, k) = s;
      }
  return gamma;
}

Mat4 connection_matrix(const FrameTensor3 & gamma, int i)
{
  Mat4 L;
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) L(k, j) = gamma(i, j, k);
  return L;
}

Mat4 curvature_operator_nonflat(const FrameTensor2 & metric, int i, int j)
{
  const FrameTensor3 gamma = christoffel_left_invariant(metric);
  const FrameTensor3 C     = structure_constants();
  const Mat4 Li = connection_matrix(gamma, i), Lj = connection_matrix(gamma, j);
  Mat4 r = Li * Lj - Lj * Li;
  for (int m = 0; m < 4; ++m) r -= C(i, j, m) * connection_matrix(gamma, m);
  return r;
}

bool is_flat(const FrameTensor2 & metric, double tol)
{
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (curvature_operator_nonflat(metric, i, j).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

std::vector<ListingCell> listing_curvature_cells()
{
  std::vector<ListingCell> cells;
  {
    const FrameTensor2 K0 = metric_K0();
    const FrameTensor3 g  = christoffel_left_invariant(K0);
    const Mat4 L1 = connection_matrix(g, 0), L2 = connection_matrix(g, 1), L3 = connection_matrix(g, 2);
    Mat4 printed = Mat4::Zero();
    printed(0, 2) = -2.5;
    printed(2, 0) = 2.5;
    cells.push_back({"K0", "L3*L1-L1*L3+sqrt(2)*L2", 0, 2, L3 * L1 - L1 * L3 + kSqrt2 * L2, printed,
      curvature_operator_nonflat(K0, 0, 2)});
  }
  {
    const FrameTensor2 K2 = metric_K2();
    const FrameTensor3 g  = christoffel_left_invariant(K2);
    const Mat4 L1 = connection_matrix(g, 0), L2 = connection_matrix(g, 1), L3 = connection_matrix(g, 2);
    Mat4 printed = Mat4::Zero();
    printed(0, 1) = -0.5;
    printed(1, 0) = 0.5;
    cells.push_back({"K2", "L21*L22-L22*L21-sqrt(2)*L23", 0, 1, L1 * L2 - L2 * L1 - kSqrt2 * L3, printed,
      curvature_operator_nonflat(K2, 0, 1)});
  }
  return cells;
}

}  // namespace gl2
