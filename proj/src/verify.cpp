#include "gl2geom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Dense>

#include "gl2geom/coords.hpp"
#include "gl2geom/curvature.hpp"
#include "gl2geom/dynamics.hpp"

namespace gl2 {

std::string_view to_string(CheckStatus s) noexcept
{
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Warn: return "WARN";
  }
  return "?";
}

double uniform(Rng & rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

AlgebraVector random_algebra(Rng & rng, double scale)
{
  Vec4 f;
  for (int i = 0; i < 4; ++i) f[i] = uniform(rng, -scale, scale);
  return AlgebraVector(f);
}

AlgebraVector random_timelike(Rng & rng, bool forward)
{
  Vec4 f;
  for (int i = 1; i < 4; ++i) f[i] = uniform(rng, -1.0, 1.0);
  const double spatial = f.tail<3>().norm();
  f[0]                 = (spatial + uniform(rng, 0.1, 1.0)) * (forward ? 1.0 : -1.0);
  return AlgebraVector(f);
}

AlgebraVector random_lightlike(Rng & rng)
{
  const double a = uniform(rng, -1.0, 1.0);
  const double d = uniform(rng, -1.0, 1.0);
  const double b = uniform(rng, 0.5, 1.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
  Mat2 m;
  m << a, b, -(a * a + d * d) / (2.0 * b), d;
  return AlgebraVector::from_matrix(m);
}

GroupPoint random_group_point(Rng & rng)
{
  for (;;) {
    Mat2 m;
    m << uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2);
    const double d = m.determinant();
    if (d >= 0.1 && d <= 10.0) return GroupPoint(m);
    if (-d >= 0.1 && -d <= 10.0) {
      m.row(0).swap(m.row(1));
      return GroupPoint(m);
    }
  }
}

CoverPoint random_cover_point(Rng & rng)
{
  Mat2 a;
  a << uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1);
  Mat2 T = a * a.transpose() + 0.2 * Mat2::Identity();
  T(1, 0) = T(0, 1);
  return CoverPoint(uniform(rng, -4.0, 4.0), T);
}

bool all_passed(const std::vector<CheckResult> & results)
{
  return std::none_of(results.begin(), results.end(), [](const CheckResult & r) { return r.status == CheckStatus::Fail; });
}

namespace {

class Suite
{
public:
  Suite(std::vector<CheckResult> & out, std::string module) : out_(out), module_(std::move(module)) {}

  void check(const std::string & name, double tol, double observed, std::string detail = {})
  {
    const bool ok = std::isfinite(observed) && observed <= tol;
    out_.push_back({module_, name, tol, observed, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }

  void audit(const std::string & name, double tol, double observed, std::string detail = {})
  {
    const bool ok = std::isfinite(observed) && observed <= tol;
    out_.push_back({module_, name, tol, observed, ok ? CheckStatus::Pass : CheckStatus::Warn, std::move(detail)});
  }

private:
  std::vector<CheckResult> & out_;
  std::string module_;
};

AlgebraVector e(int i) { return AlgebraVector::basis(i); }

std::string short_number(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_abs(const Mat2 & m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Mat4 & m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec4 & v) { return v.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------------------

void algebra_suite(std::vector<CheckResult> & out, Rng & rng)
{
  Suite s(out, "algebra");

  double gap = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gap = std::max(gap, std::abs(k_form(e(i), e(j)) - (i == j ? kSignature[i] : 0.0)));
  s.check("k-table", 1e-12, gap);

  gap = std::max({(bracket(e(0), e(1)) - kSqrt2 * e(2)).norm(), (bracket(e(0), e(2)) + kSqrt2 * e(1)).norm(),
    (bracket(e(1), e(2)) + kSqrt2 * e(0)).norm()});
  for (int i = 0; i < 4; ++i) gap = std::max(gap, bracket(e(3), e(i)).norm());
  s.check("bracket-table", 1e-12, gap);

  double jac = 0.0, adj = 0.0, qk = 0.0, q2k = 0.0;
  for (int n = 0; n < 200; ++n) {
    const AlgebraVector u = random_algebra(rng), v = random_algebra(rng), w = random_algebra(rng);
    jac = std::max(jac, (bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).norm());
    adj = std::max(adj, std::abs(k_form(bracket(w, u), v) + k_form(u, bracket(w, v))));
    qk  = std::max(qk, std::abs(causal_quadratic(u) - k_form(u, u)));
    q2k = std::max(q2k, std::abs(causal_quadratic(u) - 2.0 * k_form(u, u)));
  }
  s.check("jacobi-identity", 1e-10, jac);
  s.check("ad-antisymmetry", 1e-10, adj);
  s.check("causal-quadratic-equals-k", 1e-12, qk);
  s.audit("causal-quadratic-equals-2k", 1e-12, q2k, "a^2 + 2bc + d^2 is trace(u^2) = k(u,u)");

  Eigen::SelfAdjointEigenSolver<Mat4> es(k_gram());
  s.check("k-signature", 1e-12, max_abs(Vec4(es.eigenvalues() - Vec4(-1, 1, 1, 1))));

  int mismatches = 0;
  for (int n = 0; n < 500; ++n) {
    const bool fu = uniform(rng, 0, 1) < 0.5, fv = uniform(rng, 0, 1) < 0.5;
    const AlgebraVector u = random_timelike(rng, fu), v = random_timelike(rng, fv);
    const bool same_cone  = in_timecone_e1(u) == in_timecone_e1(v);
    if (same_cone != (k_form(u, v) < 0.0)) ++mismatches;
  }
  s.check("same-timecone-criterion", 0.0, mismatches, "500 random timelike pairs");

  int failures = 0;
  for (int n = 0; n < 500; ++n) {
    const bool forward    = uniform(rng, 0, 1) < 0.5;
    const AlgebraVector u = random_timelike(rng, forward), v = random_timelike(rng, forward);
    if (!timecone_convexity_check(u, v, uniform(rng, 0, 1))) ++failures;
  }
  s.check("timecone-convexity", 0.0, failures, "500 random convex combinations");
}

// ---------------------------------------------------------------------------

void curvature_suite(std::vector<CheckResult> & out, Rng & rng)
{
  Suite s(out, "curvature");

  const FrameTensor4 R = riemann_tensor();
  double sym = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          sym = std::max({sym, std::abs(R(a, b, c, d) + R(b, a, c, d)), std::abs(R(a, b, c, d) + R(a, b, d, c)),
            std::abs(R(a, b, c, d) - R(c, d, a, b)), std::abs(R(a, b, c, d) + R(b, c, a, d) + R(c, a, b, d))});
        }
  s.check("riemann-symmetries", 1e-12, sym);

  double sec = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sec = std::max(sec, std::abs(sectional(e(i), e(j)) - (j == 3 ? 0.0 : -0.5)));
  s.check("sectional-values", 1e-12, sec);
  s.check("scalar-curvature", 1e-12, std::abs(scalar_curvature() + 3.0));

  const Mat4 B   = killing_matrix().to_matrix();
  const Mat4 Ric = ricci_matrix().to_matrix();
  s.check("killing-table", 1e-12, max_abs(Mat4(B - Vec4(-4, 4, 4, 0).asDiagonal().toDenseMatrix())));
  s.check("ricci-table", 1e-12, max_abs(Mat4(Ric - Vec4(1, -1, -1, 0).asDiagonal().toDenseMatrix())));

  double contraction = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      contraction = std::max(contraction, std::abs(ricci_by_contraction(e(i), e(j)) - ricci_tensor(e(i), e(j))));
  s.check("ricci-contraction", 1e-12, contraction);

  const FrameTensor4 W = weyl_tensor();
  double trace         = 0.0;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      double t1 = 0.0, t2 = 0.0;
      for (int i = 0; i < 4; ++i) {
        t1 += kSignature[i] * W(i, u, i, v);
        t2 += kSignature[i] * W(i, u, v, i);
      }
      trace = std::max({trace, std::abs(t1), std::abs(t2)});
    }
  s.check("weyl-trace-free", 1e-12, trace);

  double tidal = 0.0, formula = 0.0;
  for (int n = 0; n < 200; ++n) {
    const AlgebraVector v = random_algebra(rng);
    tidal                 = std::max(tidal, std::abs(tidal_trace(v) + ricci_tensor(v, v)));
    formula               = std::max(formula, std::abs(tidal_trace(v) - tidal_trace_formula(v)));
  }
  s.check("tidal-trace-is-minus-ricci", 1e-10, tidal);
  s.check("tidal-trace-formula", 1e-10, formula);

  const FrameTensor3 C      = structure_constants();
  const FrameTensor3 gamma1 = christoffel_left_invariant(metric_K1());
  double biinv              = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const AlgebraVector d = levi_civita_biinv(e(i), e(j));
      for (int k = 0; k < 4; ++k) biinv = std::max(biinv, std::abs(gamma1(i, j, k) - d[k]));
    }
  s.check("christoffel-biinvariant", 1e-12, biinv);

  double torsion = 0.0, compat = 0.0;
  for (const FrameTensor2 & g : {metric_K0(), metric_K1(), metric_K2()}) {
    const FrameTensor3 G = christoffel_left_invariant(g);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          torsion  = std::max(torsion, std::abs(G(i, j, k) - G(j, i, k) - C(i, j, k)));
          double m = 0.0;
          for (int l = 0; l < 4; ++l) m += G(i, j, l) * g(l, k) + G(i, k, l) * g(j, l);
          compat = std::max(compat, std::abs(m));
        }
  }
  s.check("christoffel-torsion-free", 1e-12, torsion);
  s.check("christoffel-metric-compatible", 1e-12, compat);

  const int idx[3] = {metric_index(metric_K0()), metric_index(metric_K1()), metric_index(metric_K2())};
  s.check("phi-metric-indices", 0.0, std::abs(idx[0] - 0) + std::abs(idx[1] - 1) + std::abs(idx[2] - 2));

  int flat = 0;
  for (const FrameTensor2 & g : {metric_K0(), metric_K1(), metric_K2()}) flat += is_flat(g) ? 1 : 0;
  s.check("left-invariant-metrics-not-flat", 0.0, flat);

  // Printed-versus-computed audits.
  const auto lemma = riemann_lemma_discrepancies();
  std::ostringstream cells;
  for (const auto & d : lemma) cells << "R(" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1 << ") ";
  s.audit("riemann-lemma-cells", 0.0, static_cast<double>(lemma.size()), cells.str());

  double table = 0.0;
  int covered  = 0;
  for (std::size_t f = 0; f < FrameTensor4::size; ++f) {
    const auto i = FrameTensor4::unflatten(f);
    if (const auto v = weyl_printed_value(i[0], i[1], i[2], i[3])) {
      ++covered;
      table = std::max(table, std::abs(*v - W.at_flat(f)));
    }
  }
  s.audit("weyl-printed-table", 1e-12, table, std::to_string(covered) + " of 256 components covered by the printed cases");

  for (const ListingCell & c : listing_curvature_cells()) {
    s.audit("listing-" + c.metric + "-expression", 1e-12, max_abs(Mat4(c.evaluated - c.printed)), c.expression);
    s.audit("listing-" + c.metric + "-proper-operator", 1e-12, max_abs(Mat4(c.proper - c.printed)),
      "nabla_i nabla_j - nabla_j nabla_i - nabla_[e_i,e_j] against the printed matrix");
  }
}

// ---------------------------------------------------------------------------

struct JacobiDraw
{
  Vec4 velocity, y0, yp0;
};

JacobiDraw random_jacobi_draw(Rng & rng, int regime)
{
  JacobiDraw d;
  Vec4 v = random_algebra(rng).coeffs();
  if (regime == 0) {
    v[1] = std::copysign(0.4 + std::abs(v[1]), v[1]);
    v[0] = uniform(rng, -0.8, 0.8) * std::hypot(v[1], v[2]);
  } else if (regime == 1) {
    v[0] = std::copysign(std::hypot(v[1], v[2]) + uniform(rng, 0.2, 1.0), v[0]);
  } else {
    v[0] = std::copysign(std::hypot(v[1], v[2]), v[0]);
  }
  d.velocity = v;
  d.y0       = random_algebra(rng).coeffs();
  d.yp0      = random_algebra(rng).coeffs();
  return d;
}

void dynamics_suite(std::vector<CheckResult> & out, Rng & rng, const VerifyOptions & opts)
{
  Suite s(out, "dynamics");

  double subgroup = 0.0;
  for (int n = 0; n < 100; ++n) {
    const AlgebraVector u = random_algebra(rng);
    const double a = uniform(rng, -2, 2), b = uniform(rng, -2, 2);
    subgroup = std::max(subgroup,
      max_abs(Mat2(exp_geodesic(u, a + b).matrix() - exp_geodesic(u, a).matrix() * exp_geodesic(u, b).matrix())));
  }
  s.check("exp-subgroup-law", opts.tol, subgroup);

  double lightlike = 0.0, trace_gap = 0.0, det_gap = 0.0, charpoly = 0.0;
  for (int n = 0; n < 50; ++n) {
    const AlgebraVector u = random_lightlike(rng);
    for (int k = 0; k <= 12; ++k) {
      const double sv = -3.0 + 0.5 * k;
      lightlike = std::max(lightlike, max_abs(Mat2(lightlike_curve(u, sv).matrix() - exp_geodesic(u, sv).matrix())));
      const LightlikeTraceDet td = curve_trace_det_check(u, sv);
      trace_gap                  = std::max(trace_gap, std::abs(td.printed_trace - td.evaluated_trace));
      det_gap                    = std::max(det_gap, std::abs(td.printed_det - td.evaluated_det));
      charpoly                   = std::max(charpoly, td.printed_charpoly_residual);
    }
  }
  s.check("lightlike-curve-vs-exp", opts.tol, lightlike);
  s.audit("lightlike-trace-formula", opts.tol, trace_gap, "e^{(a+d)s/2} cos(th s/2) against the trace of the curve");
  s.audit("lightlike-det-formula", opts.tol, det_gap, "printed determinant formula against the determinant of the curve");
  s.audit("char-poly-sign", opts.tol, charpoly, "lambda^2 + trace lambda + det at the eigenvalues of the curve");

  const AlgebraVector theta_probe = random_lightlike(rng);
  s.audit("lightlike-theta-printed", opts.tol,
    std::abs(lightlike_theta_printed(theta_probe) - lightlike_theta(theta_probe)),
    "Re(sqrt(2bc - 2ad)) against sqrt(2ad - 2bc)");

  double conserve = 0.0, linear = 0.0;
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector x = random_algebra(rng), y = random_algebra(rng), z = random_algebra(rng);
    const GeodesicSpec spec{GroupPoint::identity(), x};
    const CurveSample ty = parallel_transport(spec, y, opts.t1, opts.steps);
    const CurveSample tz = parallel_transport(spec, z, opts.t1, opts.steps);
    const double al = uniform(rng, -2, 2), be = uniform(rng, -2, 2);
    const CurveSample tl = parallel_transport(spec, al * y + be * z, opts.t1, opts.steps);
    const double kyy = k_form(y, y), kxy = k_form(x, y);
    for (std::size_t i = 0; i < ty.times.size(); ++i) {
      const AlgebraVector yt(ty.vectors[i]);
      conserve = std::max({conserve, std::abs(k_form(yt, yt) - kyy), std::abs(k_form(x, yt) - kxy)});
      linear   = std::max(linear, max_abs(Vec4(tl.vectors[i] - al * ty.vectors[i] - be * tz.vectors[i])));
    }
  }
  s.check("transport-conservation", 1e-8, conserve);
  s.check("transport-linearity", opts.tol, linear);

  const AlgebraVector y0 = random_algebra(rng);
  const CurveSample te4  = parallel_transport(GeodesicSpec{GroupPoint::identity(), e(3)}, y0, opts.t1, opts.steps);
  double constant        = 0.0;
  for (const Vec4 & v : te4.vectors) constant = std::max(constant, max_abs(Vec4(v - y0.coeffs())));
  s.check("transport-e4-constant", 0.0, constant);

  double jacobi = 0.0, affine_y4 = 0.0;
  int counts[3] = {0, 0, 0};
  for (int n = 0; n < 100; ++n) {
    const int regime            = n % 3;
    const JacobiDraw d          = random_jacobi_draw(rng, regime);
    const JacobiClosedForm form = jacobi_closed_form(d.velocity, d.y0, d.yp0);
    const CurveSample run       = jacobi_integrate(d.velocity, d.y0, d.yp0, opts.t1, opts.steps);
    ++counts[form.branch() == JacobiClosedForm::Branch::Degenerate ? 2 : (form.alpha_sq() > 0 ? 0 : 1)];
    for (std::size_t i = 0; i < run.times.size(); ++i) {
      jacobi    = std::max(jacobi, max_abs(Vec4(form.evaluate(run.times[i]) - run.vectors[i])));
      affine_y4 = std::max(affine_y4, std::abs(run.vectors[i][3] - d.y0[3] - d.yp0[3] * run.times[i]));
    }
  }
  std::ostringstream regimes;
  regimes << counts[0] << " real-alpha, " << counts[1] << " imaginary-alpha, " << counts[2] << " degenerate";
  s.check("jacobi-closed-form-vs-rk4", 1e-6, jacobi, regimes.str());
  s.check("jacobi-y4-affine", 1e-12, affine_y4);

  double variation = 0.0;
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector u = random_algebra(rng), w = random_algebra(rng);
    const double sv = uniform(rng, 0.2, 0.8), h = 1e-2;
    const Vec4 ym   = geodesic_variation_field(u, w, sv - h).coeffs();
    const Vec4 y    = geodesic_variation_field(u, w, sv).coeffs();
    const Vec4 yp   = geodesic_variation_field(u, w, sv + h).coeffs();
    const Vec4 d2   = (yp - 2.0 * y + ym) / (h * h);
    const Vec4 d1   = (yp - ym) / (2.0 * h);
    variation       = std::max(variation, max_abs(Vec4(d2 - jacobi_rhs(u.coeffs(), d1))));
  }
  s.check("jacobi-geodesic-variation", 1e-3, variation, "finite differences of exp(s(u + eps w))");

  // Printed closed forms, spot-checked against the integrator.
  double generic = 0.0;
  for (int n = 0; n < 10; ++n) {
    const JacobiDraw d = random_jacobi_draw(rng, 0);
    const Vec4 c       = random_algebra(rng).coeffs();
    const double c5    = uniform(rng, -1, 1);
    const Vec4 p0      = printed_jacobi_generic(d.velocity, c[0], c[1], c[2], c[3], c5, 0.0);
    const double h     = 1e-6;
    const Vec4 pd0     = (printed_jacobi_generic(d.velocity, c[0], c[1], c[2], c[3], c5, h)
                      - printed_jacobi_generic(d.velocity, c[0], c[1], c[2], c[3], c5, -h))
                     / (2 * h);
    const JacobiClosedForm form = jacobi_closed_form(d.velocity, p0, pd0);
    for (double t = 0.0; t <= 1.0; t += 0.125) {
      generic = std::max(generic,
        max_abs(Vec4(printed_jacobi_generic(d.velocity, c[0], c[1], c[2], c[3], c5, t) - form.evaluate(t))));
    }
  }
  s.audit("jacobi-generic-printed", 1e-6, generic);

  double upper = 0.0, lower = 0.0;
  for (int n = 0; n < 10; ++n) {
    const JacobiDraw d = random_jacobi_draw(rng, 2);
    std::array<double, 8> c{};
    for (double & ci : c) ci = uniform(rng, -1, 1);
    for (bool up : {true, false}) {
      const double h = 1e-5;
      double & gap   = up ? upper : lower;
      for (double t = 0.125; t <= 1.0; t += 0.125) {
        const Vec4 ym  = printed_jacobi_degenerate(d.velocity, c, up, t - h);
        const Vec4 y   = printed_jacobi_degenerate(d.velocity, c, up, t);
        const Vec4 yp  = printed_jacobi_degenerate(d.velocity, c, up, t + h);
        const Vec4 d2  = (yp - 2.0 * y + ym) / (h * h);
        const Vec4 d1  = (yp - ym) / (2.0 * h);
        gap            = std::max(gap, max_abs(Vec4(d2 - jacobi_rhs(d.velocity, d1))));
      }
    }
  }
  s.audit("jacobi-degenerate-printed", 1e-3, std::min(upper, lower),
    "residual of the printed polynomial solution in the Jacobi system, best sign choice");
}

// ---------------------------------------------------------------------------

void coords_suite(std::vector<CheckResult> & out, Rng & rng)
{
  Suite s(out, "coords");

  double push = 0.0, duality = 0.0, metric = 0.0, pullback = 0.0, ricci = 0.0, ricci_audit = 0.0;
  double squares = 0.0, e2e3 = 0.0;
  const Mat4 ric_table = ricci_matrix().to_matrix();
  for (int n = 0; n < 100; ++n) {
    const GroupPoint p      = random_group_point(rng);
    const FrameFieldValue f = frame_at(p);
    const FrameFieldValue g = frame_pushforward(p);
    for (int i = 0; i < 4; ++i) push = std::max(push, max_abs(Vec4(f.vectors[i] - g.vectors[i])));
    duality = std::max(duality, max_abs(Mat4(pairing(coframe_at(p), f) - Mat4::Identity())));
    metric  = std::max(metric, max_abs(Mat4(metric_at(p) - metric_frame_based(p))));
    pullback = std::max(pullback, max_abs(Mat4(metric_at(p) - metric_pullback(p))));

    Mat4 F;
    for (int i = 0; i < 4; ++i) F.col(i) = f.vectors[i];
    ricci = std::max(ricci, max_abs(Mat4(F.transpose() * ricci_coord_frame(p) * F - ric_table)));

    ricci_audit = std::max(ricci_audit, ricci_coord_audit(p).max_gap);
    const KplusReadingAudit a = kplus_reading_audit(p);
    squares = std::max(squares, a.gap_sum_of_squares);
    e2e3    = std::max(e2e3, a.gap_e2e3);
  }
  s.check("frame-equals-pushforward", 1e-12, push);
  s.check("coframe-duality", 1e-10, duality);
  s.check("metric-printed-vs-frame", 1e-10, metric);
  s.check("metric-printed-vs-pullback", 1e-10, pullback);
  s.check("ricci-frame-left-invariance", 1e-10, ricci);

  s.audit("ricci-coordinate-printed", 1e-10, ricci_audit, "printed coordinate Ricci against the coframe pullback");
  s.audit("kplus-e2e3-reading", 1e-10, e2e3,
    "gap of the (e2)*(e3)* reading; the eps-weighted squares reading gaps by " + short_number(squares));
}

// ---------------------------------------------------------------------------

void affine_suite(std::vector<CheckResult> & out, Rng & rng, const VerifyOptions & opts)
{
  Suite s(out, "affine");

  double assoc = 0.0, torsion = 0.0;
  for (int n = 0; n < 200; ++n) {
    const AlgebraVector u = random_algebra(rng), v = random_algebra(rng), w = random_algebra(rng);
    assoc   = std::max(assoc,
        (flat_affine_product(flat_affine_product(u, v), w) - flat_affine_product(u, flat_affine_product(v, w))).norm());
    torsion = std::max(torsion, (flat_affine_product(u, v) - flat_affine_product(v, u) - bracket(u, v)).norm());
  }
  s.check("flat-associativity", 1e-12, assoc);
  s.check("flat-torsion-free", 1e-12, torsion);

  double hom = 0.0, cover_assoc = 0.0, forms = 0.0, spd = 0.0, printed = 0.0;
  for (int n = 0; n < 100; ++n) {
    const CoverPoint p = random_cover_point(rng), q = random_cover_point(rng), r = random_cover_point(rng);
    const CoverPoint pq = cover_multiply(p, q);
    hom = std::max(hom,
      max_abs(Mat2(cover_project(pq).matrix() - cover_project(p).matrix() * cover_project(q).matrix())));
    const CoverPoint a = cover_multiply(pq, r), b = cover_multiply(p, cover_multiply(q, r));
    cover_assoc = std::max({cover_assoc, std::abs(a.t() - b.t()), max_abs(Mat2(a.T() - b.T()))});
    const CoverPoint pol = cover_multiply_polar(p, q);
    forms = std::max({forms, std::abs(pol.t() - pq.t()), max_abs(Mat2(pol.T() - pq.T()))});
    spd     = std::max(spd, std::abs(pq.T()(0, 1) - pq.T()(1, 0)));
    printed = std::max(printed, max_abs(Mat2(cover_multiply_printed_second(p, q) - pq.T())));
  }
  s.check("cover-homomorphism", 1e-10, hom);
  s.check("cover-associativity", opts.tol, cover_assoc);
  s.check("cover-product-forms-agree", opts.tol, forms);
  s.check("cover-product-symmetric", 1e-12, spd);
  s.audit("cover-product-printed-rotation", 1e-9, printed, "O_{-arctan(theta)-t-r} T O_r R as printed");

  double polar = 0.0;
  for (int n = 0; n < 100; ++n) {
    const GroupPoint g = random_group_point(rng);
    polar              = std::max(polar, max_abs(Mat2(cover_project(polar_decompose(g)).matrix() - g.matrix())));
  }
  s.check("polar-roundtrip", 1e-12, polar);

  const Vec4 base = developing_map(CoverCoords{Vec4(0, 1, 0, 1)});
  s.check("dev-basepoint", 0.0, max_abs(base));

  double path = 0.0;
  for (int n = 0; n < 20; ++n) {
    std::vector<Vec4> vertices{Vec4(0, 1, 0, 1)};
    const int legs = 2 + n % 4;
    for (int k = 0; k < legs; ++k) vertices.push_back(CoverCoords::from_point(random_cover_point(rng)).y);
    path = std::max(path, max_abs(Vec4(eta_path_integral(vertices) - developing_map(CoverCoords{vertices.back()}))));
  }
  s.check("dev-path-integral", 1e-8, path, "20 random polygonal paths from (0,1,0,1)");

  double grad = 0.0, hess = 0.0;
  for (int n = 0; n < 50; ++n) {
    const Vec4 x = random_group_point(rng).coords();
    const auto f = [](const Vec4 & y) { return hessian_potential(GroupPoint(mat2_from_coords(y))); };
    const double h = 1e-5, h2 = 1e-3;
    Vec4 fd;
    Mat4 H;
    for (int i = 0; i < 4; ++i) {
      const Vec4 di = h * Vec4::Unit(i);
      fd[i]         = (f(x + di) - f(x - di)) / (2 * h);
      for (int j = 0; j < 4; ++j) {
        const Vec4 a = h2 * Vec4::Unit(i), b = h2 * Vec4::Unit(j);
        H(i, j)      = (f(x + a + b) - f(x + a - b) - f(x - a + b) + f(x - a - b)) / (4 * h2 * h2);
      }
    }
    grad = std::max(grad, max_abs(Vec4(fd - hessian_gradient(GroupPoint(mat2_from_coords(x))))));
    hess = std::max(hess, max_abs(Mat4(H - hessian_matrix())));
  }
  s.check("hessian-gradient-fd", 1e-6, grad);
  s.check("hessian-matrix-fd", 1e-5, hess);

  Eigen::SelfAdjointEigenSolver<Mat4> es(hessian_matrix());
  s.check("hessian-eigenvalues", 1e-12, max_abs(Vec4(es.eigenvalues() - Vec4(-1, 1, 1, 1))));
  s.check("hessian-equals-kplus-at-identity", 1e-12, hessian_vs_metric_gap(GroupPoint::identity()));

  double gap = 0.0;
  for (int n = 0; n < 20; ++n) gap = std::max(gap, hessian_vs_metric_gap(random_group_point(rng)));
  s.audit("hessian-vs-kplus", 1e-10, gap, "constant Hessian against the coordinate form of k+ at random points");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions & opts)
{
  if (!(opts.tol > 0.0) || opts.steps < 1 || !(opts.t1 > 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "verification needs tol > 0, steps >= 1 and t1 > 0");
  }
  std::vector<CheckResult> out;
  Rng rng(opts.seed);
  algebra_suite(out, rng);
  curvature_suite(out, rng);
  dynamics_suite(out, rng, opts);
  coords_suite(out, rng);
  affine_suite(out, rng, opts);
  return out;
}

}  // namespace gl2
