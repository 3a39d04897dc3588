#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "gl2geom/affine.hpp"
#include "gl2geom/curvature.hpp"
#include "gl2geom/dynamics.hpp"
#include "gl2geom/verify.hpp"

namespace gl2::cli {

namespace {

std::string trim(const std::string & s)
{
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string & s, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Returns -1 if the text is not a basis symbol, else the 0-based index; sign
// receives +-1.
int parse_symbol(const std::string & text, double & sign)
{
  std::string t = trim(text);
  sign          = 1.0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    sign = t[0] == '-' ? -1.0 : 1.0;
    t    = t.substr(1);
  }
  if (t.size() == 2 && t[0] == 'e' && t[1] >= '1' && t[1] <= '4') return t[1] - '1';
  return -1;
}

std::string key(std::initializer_list<int> idx)
{
  std::string k;
  for (int i : idx) {
    if (!k.empty()) k += ",";
    k += std::to_string(i + 1);
  }
  return k;
}

Json vec_json(const Vec4 & v) { return Json::array({v[0], v[1], v[2], v[3]}); }
Json mat2_json(const Mat2 & m) { return Json::array({m(0, 0), m(0, 1), m(1, 0), m(1, 1)}); }

// Nonzero entries of a table as key -> value, with the radical form mirrored.
struct TableWriter
{
  Json & values;
  Json & exact;

  void put(const std::string & table, const std::string & k, double v, bool keep_zero = false)
  {
    if (!values.contains(table)) {
      values[table] = Json::object();
      exact[table]  = Json::object();
    }
    if (!keep_zero && std::abs(v) < 1e-14) return;
    values[table][k] = v;
    exact[table][k]  = to_radical(v);
  }

  void ensure(const std::string & table)
  {
    if (!values.contains(table)) {
      values[table] = Json::object();
      exact[table]  = Json::object();
    }
  }
};

Json base_config(const RunConfig & c)
{
  Json j = Json::object();
  j["format"] = c.format == Format::Json ? "json" : c.format == Format::Csv ? "csv" : "text";
  j["steps"]  = c.steps;
  j["t1"]     = c.t1;
  j["tol"]    = c.tol;
  return j;
}

const std::string & require(const std::string & value, const char * flag)
{
  if (value.empty()) throw InputError(std::string("missing required option ") + flag);
  return value;
}

}  // namespace

double parse_real(const std::string & text)
{
  const std::string t = trim(text);
  double v            = 0.0;
  const char * first  = t.data();
  const char * last   = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw InputError("not a finite real number: '" + text + "'");
  }
  return v;
}

Vec4 parse_four(const std::string & text)
{
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw InputError("expected four comma-separated numbers: '" + text + "'");
  return Vec4(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3]));
}

Mat2 parse_matrix(const std::string & text)
{
  double sign   = 1.0;
  const int sym = parse_symbol(text, sign);
  if (sym >= 0) return sign * AlgebraVector::basis(sym).to_matrix();
  return mat2_from_coords(parse_four(text));
}

Vec4 parse_coefficients(const std::string & text)
{
  double sign   = 1.0;
  const int sym = parse_symbol(text, sign);
  if (sym >= 0) return sign * Vec4::Unit(sym);
  return parse_four(text);
}

std::string to_radical(double x)
{
  if (std::abs(x) < 1e-14) return "0";
  for (int e = 0; e <= 1; ++e) {
    const double y = e == 0 ? x : x / kSqrt2;
    for (long q = 1; q <= 1000; ++q) {
      const double yq = y * static_cast<double>(q);
      const double p  = std::round(yq);
      if (p != 0.0 && std::abs(yq - p) <= 1e-9 * std::max(1.0, std::abs(yq))) {
        const long pl = static_cast<long>(p);
        const long g  = std::gcd(std::abs(pl), q);
        return std::to_string(pl / g) + "/" + std::to_string(q / g) + "·√2^" + std::to_string(e);
      }
    }
  }
  return format_number(x);
}

// ---------------------------------------------------------------------------

Report cmd_tables(const RunConfig & c)
{
  Report r{"tables", base_config(c), Json::object(), {}};
  Json values = Json::object(), exact = Json::object();
  TableWriter w{values, exact};
  const auto e = [](int i) { return AlgebraVector::basis(i); };

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w.put("k", key({i, j}), k_form(e(i), e(j)));

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const AlgebraVector b = bracket(e(i), e(j));
      for (int k = 0; k < 4; ++k) w.put("bracket", key({i, j, k}), b[k]);
    }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const AlgebraVector v = riemann(e(i), e(j), e(k));
        for (int l = 0; l < 4; ++l) w.put("riemann", key({i, j, k, l}), v[l]);
      }

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) w.put("sectional", key({i, j}), sectional(e(i), e(j)), true);

  values["scalar_curvature"] = scalar_curvature();
  exact["scalar_curvature"]  = to_radical(scalar_curvature());

  const FrameTensor2 B = killing_matrix(), Ric = ricci_matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      w.put("killing", key({i, j}), B(i, j));
      w.put("ricci", key({i, j}), Ric(i, j));
    }

  const FrameTensor4 W = weyl_tensor();
  w.ensure("weyl");
  w.ensure("weyl_printed");
  for (std::size_t f = 0; f < FrameTensor4::size; ++f) {
    const auto i = FrameTensor4::unflatten(f);
    const std::string k = key({i[0], i[1], i[2], i[3]});
    w.put("weyl", k, W.at_flat(f));
    if (const auto v = weyl_printed_value(i[0], i[1], i[2], i[3])) w.put("weyl_printed", k, *v);
  }
  if (W.max_abs() < 1e-12) {
    r.warnings.push_back(
      "weyl: the trace-free Weyl tensor vanishes identically; the printed case table is listed under weyl_printed");
  }

  const std::pair<const char *, FrameTensor2> metrics[] = {{"K0", metric_K0()}, {"K1", metric_K1()}, {"K2", metric_K2()}};
  Json indices = Json::object();
  for (const auto & [name, g] : metrics) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) w.put(std::string("metric_") + name, key({i, j}), g(i, j));
    indices[name] = metric_index(g);
    const FrameTensor3 G = christoffel_left_invariant(g);
    w.ensure(std::string("christoffel_") + name);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) w.put(std::string("christoffel_") + name, key({i, j, k}), G(i, j, k));
  }
  values["metric_index"] = indices;

  Json pattern = Json::array();
  for (const auto & k : ksym_constraint_pattern()) pattern.push_back(to_string(k));
  values["ksym_pattern"] = pattern;

  for (const ListingCell & cell : listing_curvature_cells()) {
    const std::string name = "listing_" + cell.metric;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        w.put(name + "_evaluated", key({i, j}), cell.evaluated(i, j));
        w.put(name + "_proper", key({i, j}), cell.proper(i, j));
      }
    w.ensure(name + "_proper");
    if ((cell.proper - cell.printed).cwiseAbs().maxCoeff() > 1e-12) {
      r.warnings.push_back(cell.metric + ": the printed curvature matrix follows the expression " + cell.expression
                           + "; the curvature operator at (" + std::to_string(cell.i + 1) + ","
                           + std::to_string(cell.j + 1) + ") differs");
    }
  }

  for (const auto & d : riemann_lemma_discrepancies()) {
    std::ostringstream os;
    os << "riemann: printed R(" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1 << ") differs from 1/4 [[u,v],w]";
    r.warnings.push_back(os.str());
  }

  values["exact"] = exact;
  r.results       = values;
  return r;
}

Report cmd_classify(const RunConfig & c)
{
  std::string text = c.u;
  if (text.empty()) {
    if (c.positional.size() != 1) throw InputError("classify expects one matrix or basis symbol");
    text = c.positional[0];
  }
  const Mat2 m = parse_matrix(text);
  const AlgebraVector u = AlgebraVector::from_matrix(m);

  Report r{"classify", base_config(c), Json::object(), {}};
  r.config["u"]           = text;
  r.results["matrix"]     = mat2_json(m);
  r.results["coefficients"] = vec_json(u.coeffs());
  r.results["q"]          = causal_quadratic(u);
  r.results["k_uu"]       = k_form(u, u);
  r.results["causal_type"] = std::string(to_string(classify(u)));
  r.results["timecone_e1"] = std::string(to_string(in_timecone_e1(u)));
  return r;
}

Report cmd_geodesic(const RunConfig & c)
{
  const std::string & text = require(c.u, "--u");
  const AlgebraVector u    = AlgebraVector::from_matrix(parse_matrix(text));

  Report r{"geodesic", base_config(c), Json::object(), {}};
  r.config["u"] = text;
  r.results["coefficients"] = vec_json(u.coeffs());
  r.results["causal_type"]  = std::string(to_string(classify(u)));

  const bool lightlike = classify(u) == CausalType::Lightlike;
  double closed_gap    = 0.0;
  Json samples         = Json::array();
  for (std::size_t n = 0; n <= c.steps; ++n) {
    const double t = c.t1 * static_cast<double>(n) / static_cast<double>(c.steps);
    const Mat2 g   = exp_geodesic(u, t).matrix();
    samples.push_back(Json{{"t", t}, {"x", mat2_json(g)}});
    if (lightlike) closed_gap = std::max(closed_gap, (lightlike_curve(u, t).matrix() - g).cwiseAbs().maxCoeff());
  }
  r.results["samples"] = samples;
  if (lightlike) {
    r.results["lightlike_closed_form_gap"] = closed_gap;
    if (closed_gap > c.tol) r.warnings.push_back("geodesic: lightlike closed form deviates beyond tol");
  }
  return r;
}

Report cmd_transport(const RunConfig & c)
{
  const AlgebraVector x(parse_coefficients(require(c.x0, "--x0")));
  const AlgebraVector y(parse_coefficients(require(c.y0, "--y0")));

  Report r{"transport", base_config(c), Json::object(), {}};
  r.config["x0"] = c.x0;
  r.config["y0"] = c.y0;

  const CurveSample s = parallel_transport(GeodesicSpec{GroupPoint::identity(), x}, y, c.t1, c.steps);
  const double kyy = k_form(y, y), kxy = k_form(x, y);
  double drift_yy = 0.0, drift_xy = 0.0;
  Json samples    = Json::array();
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    const AlgebraVector yt(s.vectors[i]);
    drift_yy = std::max(drift_yy, std::abs(k_form(yt, yt) - kyy));
    drift_xy = std::max(drift_xy, std::abs(k_form(x, yt) - kxy));
    samples.push_back(Json{{"t", s.times[i]}, {"y", vec_json(s.vectors[i])}});
  }
  r.results["samples"]  = samples;
  r.results["k_yy_drift"] = drift_yy;
  r.results["k_xy_drift"] = drift_xy;
  return r;
}

Report cmd_jacobi(const RunConfig & c)
{
  const Vec4 v   = parse_coefficients(require(c.velocity, "--velocity"));
  const Vec4 y0  = c.y0.empty() ? Vec4::Zero() : parse_coefficients(c.y0);
  const Vec4 yp0 = parse_coefficients(require(c.yp0, "--yp0"));

  Report r{"jacobi", base_config(c), Json::object(), {}};
  r.config["velocity"] = c.velocity;
  r.config["y0"]       = c.y0.empty() ? std::string("0,0,0,0") : c.y0;
  r.config["yp0"]      = c.yp0;

  const JacobiClosedForm form = jacobi_closed_form(v, y0, yp0);
  const CurveSample run       = jacobi_integrate(v, y0, yp0, c.t1, c.steps);
  const bool degenerate       = form.branch() == JacobiClosedForm::Branch::Degenerate;

  r.results["branch"]   = degenerate ? "degenerate" : "generic";
  r.results["alpha_sq"] = form.alpha_sq();
  r.results["modes"]    = degenerate ? Json::array({"1", "t", "t^2", "t^3"})
                                     : Json::array({"1", "t", "S(t)", "(C(t)-1)/alpha^2"});
  Json coeffs = Json::object();
  for (int i = 0; i < 4; ++i) {
    const Mat4 & m = form.coefficients();
    coeffs["y" + std::to_string(i + 1)] = Json::array({m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
  }
  r.results["coefficients"] = coeffs;

  double gap   = 0.0;
  Json samples = Json::array();
  for (std::size_t i = 0; i < run.times.size(); ++i) {
    const Vec4 closed = form.evaluate(run.times[i]);
    gap               = std::max(gap, (closed - run.vectors[i]).cwiseAbs().maxCoeff());
    samples.push_back(Json{{"t", run.times[i]}, {"closed_form", vec_json(closed)}, {"integrated", vec_json(run.vectors[i])}});
  }
  r.results["samples"] = samples;
  r.results["sup_gap"] = gap;
  if (gap > c.tol) r.warnings.push_back("jacobi: closed form and integration differ beyond tol");
  return r;
}

Report cmd_dev(const RunConfig & c)
{
  Vec4 y;
  if (c.positional.size() == 4) {
    for (int i = 0; i < 4; ++i) y[i] = parse_real(c.positional[static_cast<std::size_t>(i)]);
  } else if (c.positional.size() == 1) {
    y = parse_four(c.positional[0]);
  } else {
    throw InputError("dev expects y1 y2 y3 y4");
  }
  Report r{"dev", base_config(c), Json::object(), {}};
  r.config["y"]   = vec_json(y);
  r.results["dev"] = vec_json(developing_map(CoverCoords{y}));
  return r;
}

Report cmd_cover_mul(const RunConfig & c)
{
  const CoverPoint p = CoverCoords{parse_four(require(c.p, "--p"))}.to_point();
  const CoverPoint q = CoverCoords{parse_four(require(c.q, "--q"))}.to_point();

  Report r{"cover-mul", base_config(c), Json::object(), {}};
  r.config["p"] = c.p;
  r.config["q"] = c.q;

  const CoverPoint pq  = cover_multiply(p, q);
  const CoverPoint pol = cover_multiply_polar(p, q);
  const Mat2 proj_gap  = cover_project(pq).matrix() - cover_project(p).matrix() * cover_project(q).matrix();
  const double forms   = std::max(std::abs(pq.t() - pol.t()), (pq.T() - pol.T()).cwiseAbs().maxCoeff());

  r.results["product"]            = vec_json(CoverCoords::from_point(pq).y);
  r.results["product_polar"]      = vec_json(CoverCoords::from_point(pol).y);
  r.results["projection"]         = mat2_json(cover_project(pq).matrix());
  r.results["homomorphism_gap"]   = proj_gap.cwiseAbs().maxCoeff();
  r.results["product_forms_gap"]  = forms;
  if (forms > c.tol) r.warnings.push_back("cover-mul: the two product forms differ beyond tol");
  return r;
}

Report cmd_verify(const RunConfig & c, bool & failed)
{
  VerifyOptions opts;
  opts.tol   = c.tol;
  opts.steps = c.steps;
  opts.t1    = c.t1;

  Report r{"verify", base_config(c), Json::object(), {}};
  const auto checks = run_verification(opts);
  Json list         = Json::array();
  int counts[3]     = {0, 0, 0};
  for (const CheckResult & k : checks) {
    ++counts[static_cast<int>(k.status)];
    list.push_back(Json{{"module", k.module}, {"name", k.name}, {"status", std::string(to_string(k.status))},
      {"tolerance", k.tolerance}, {"observed", k.observed}, {"detail", k.detail}});
    if (k.status == CheckStatus::Warn) r.warnings.push_back(k.module + "/" + k.name + ": " + k.detail);
  }
  r.results["checks"]  = list;
  r.results["summary"] = Json{{"pass", counts[0]}, {"fail", counts[1]}, {"warn", counts[2]}};
  failed               = !all_passed(checks);
  return r;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Lorentzian and flat affine geometry of GL(2,R)_0", "gl2geom"};
  app.require_subcommand(1);

  RunConfig c;
  std::string format = "json";
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

  const auto common = [&](CLI::App * sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--steps", c.steps, "integration steps")->check(CLI::PositiveNumber);
    sub->add_option("--t1", c.t1, "final time");
    sub->add_option("--tol", c.tol, "tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "output file");
  };

  auto * tables = app.add_subcommand("tables", "closed-form tables");
  auto * classify_cmd = app.add_subcommand("classify", "causal type of a matrix");
  classify_cmd->add_option("matrix", c.positional, "a,b,c,d or e1..e4");
  classify_cmd->add_option("--u", c.u, "a,b,c,d or e1..e4");
  auto * geodesic = app.add_subcommand("geodesic", "samples of exp(t u)");
  geodesic->add_option("--u", c.u, "a,b,c,d or e1..e4");
  auto * transport = app.add_subcommand("transport", "parallel transport along exp(t x0)");
  transport->add_option("--x0", c.x0, "basis coefficients or e1..e4");
  transport->add_option("--y0", c.y0, "basis coefficients or e1..e4");
  auto * jacobi = app.add_subcommand("jacobi", "Jacobi fields, closed form and integrated");
  jacobi->add_option("--velocity", c.velocity, "a,b,c,d basis coefficients");
  jacobi->add_option("--y0", c.y0, "initial field");
  jacobi->add_option("--yp0", c.yp0, "initial derivative");
  auto * dev = app.add_subcommand("dev", "developing map");
  dev->add_option("y", c.positional, "y1 y2 y3 y4");
  auto * cover = app.add_subcommand("cover-mul", "product in the universal cover");
  cover->add_option("--p", c.p, "t,y2,y3,y4");
  cover->add_option("--q", c.q, "t,y2,y3,y4");
  auto * verify = app.add_subcommand("verify", "run every invariant suite");
  for (auto * sub : {tables, classify_cmd, geodesic, transport, jacobi, dev, cover, verify}) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  c.format  = formats.at(format);
  c.command = app.get_subcommands().front()->get_name();
  if (!std::isfinite(c.t1)) {
    err << "error: --t1 must be finite\n";
    return kExitInput;
  }

  Report report;
  bool failed = false;
  try {
    if (c.command == "tables") report = cmd_tables(c);
    else if (c.command == "classify") report = cmd_classify(c);
    else if (c.command == "geodesic") report = cmd_geodesic(c);
    else if (c.command == "transport") report = cmd_transport(c);
    else if (c.command == "jacobi") report = cmd_jacobi(c);
    else if (c.command == "dev") report = cmd_dev(c);
    else if (c.command == "cover-mul") report = cmd_cover_mul(c);
    else report = cmd_verify(c, failed);
  } catch (const InputError & e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GeometryError & e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitComputation;
  }

  const std::string text = render(report, c.format);
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << c.out << "\n";
      return kExitInput;
    }
    f << text;
  }
  if (failed) {
    err << "error: verification reported FAIL\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace gl2::cli
