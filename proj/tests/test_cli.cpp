#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace gl2;
using namespace gl2::cli;

namespace {

struct Outcome
{
  int code;
  std::string out, err;
};

Outcome run_cli(const std::vector<std::string> & args)
{
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string> & args)
{
  const Outcome o = run_cli(args);
  REQUIRE(o.code == kExitOk);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("argument parsers")
{
  const Mat2 m = parse_matrix("1,2,3,4");
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 3.0);
  CHECK((parse_matrix("e1") - AlgebraVector::basis(0).to_matrix()).norm() == 0.0);
  CHECK((parse_matrix("-e3") + AlgebraVector::basis(2).to_matrix()).norm() == 0.0);
  CHECK(parse_coefficients("e4") == Vec4(0, 0, 0, 1));
  CHECK(parse_coefficients("+e2") == Vec4(0, 1, 0, 0));
  CHECK(parse_coefficients("0.5, -1e-3,2,3") == Vec4(0.5, -1e-3, 2, 3));
  CHECK(parse_real("-2.5e1") == -25.0);

  CHECK_THROWS_AS(parse_matrix("1,2,3"), InputError);
  CHECK_THROWS_AS(parse_matrix("e5"), InputError);
  CHECK_THROWS_AS(parse_four("1,2,3,x"), InputError);
  CHECK_THROWS_AS(parse_four("1,2,3,4,5"), InputError);
  CHECK_THROWS_AS(parse_real("1.5abc"), InputError);
  CHECK_THROWS_AS(parse_real(""), InputError);
}

TEST_CASE("radical strings")
{
  CHECK(to_radical(0.0) == "0");
  CHECK(to_radical(1.5) == "3/2·√2^0");
  CHECK(to_radical(-3.0) == "-3/1·√2^0");
  CHECK(to_radical(std::sqrt(2.0) / 2) == "1/2·√2^1");
  CHECK(to_radical(-1.5 * std::sqrt(2.0)) == "-3/2·√2^1");
}

TEST_CASE("number formatting")
{
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.0) == "-2");
}

TEST_CASE("report schema")
{
  const Json j = run_json({"classify", "--u", "0,1,-1,0"});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "config", "results", "warnings"});
  CHECK(j["command"] == "classify");
  CHECK(j["config"]["steps"] == 1000);
  CHECK(j["config"]["t1"] == 1.0);
  CHECK(j["config"]["tol"] == 1e-9);
  CHECK(j["results"]["causal_type"] == "Timelike");
  CHECK(j["results"]["timecone_e1"] == "Forward");
  CHECK(j["warnings"].is_array());
}

TEST_CASE("subcommands")
{
  CHECK(run_json({"classify", "--u=-e1"})["results"]["timecone_e1"] == "Backward");
  CHECK(run_json({"classify", "1,1,-1,-1"})["results"]["causal_type"] == "Lightlike");
  CHECK(run_json({"classify", "e2"})["results"]["causal_type"] == "Spacelike");

  const Json t = run_json({"tables"});
  CHECK(t["results"]["weyl"].empty());
  CHECK(t["results"]["weyl_printed"]["1,2,1,2"] == 1.5);
  CHECK(t["results"]["scalar_curvature"] == doctest::Approx(-3.0));
  CHECK_FALSE(t["warnings"].empty());

  const Json d = run_json({"dev", "0", "1", "0", "1"});
  for (const auto & v : d["results"]["dev"]) CHECK(v == 0.0);

  const Json cm = run_json({"cover-mul", "--p", "3,1,0,1", "--q", "4,1,0,1"});
  CHECK(cm["results"]["product"][0] == doctest::Approx(7.0));

  const Json g = run_json({"geodesic", "--u", "e1", "--steps", "4", "--t1", "2"});
  CHECK(g["results"]["samples"].size() == 5);
  CHECK(g["config"]["t1"] == 2.0);

  const Json tr = run_json({"transport", "--x0", "e2", "--y0", "e1", "--steps", "100"});
  CHECK(std::abs(tr["results"]["k_yy_drift"].get<double>()) < 1e-9);

  const Json jc = run_json({"jacobi", "--velocity", "0.5,0.3,0.4,0.2", "--y0", "e1", "--yp0", "e2", "--steps", "200"});
  CHECK(jc["results"]["branch"] == "degenerate");
  CHECK(jc["results"]["sup_gap"].get<double>() < 1e-9);

  const Json v = run_json({"verify"});
  CHECK(v["results"]["summary"]["fail"] == 0);
  CHECK(v["results"]["summary"]["pass"].get<int>() > 20);
}

TEST_CASE("formats")
{
  const Outcome csv = run_cli({"dev", "0,1,0,1", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("section,key,value\n", 0) == 0);
  const Outcome text = run_cli({"classify", "e1", "--format", "text"});
  CHECK(text.out.find("causal_type = Timelike") != std::string::npos);
}

TEST_CASE("exit codes")
{
  CHECK(run_cli({}).code == kExitInput);
  CHECK(run_cli({"frobnicate"}).code == kExitInput);
  CHECK(run_cli({"classify", "1,2"}).code == kExitInput);
  CHECK(run_cli({"geodesic", "--u", "e1", "--steps", "0"}).code == kExitInput);
  CHECK(run_cli({"geodesic", "--u", "e1", "--tol", "-1"}).code == kExitInput);
  CHECK(run_cli({"classify", "e1", "--format", "xml"}).code == kExitInput);
  CHECK(run_cli({"jacobi", "--velocity", "e1", "--y0", "e1"}).code == kExitInput);

  const Outcome bad_cover = run_cli({"cover-mul", "--p", "0,1,2,1", "--q", "0,1,0,1"});
  CHECK(bad_cover.code == kExitComputation);
  CHECK(bad_cover.err.find("InvalidInput") != std::string::npos);
  const Outcome not_zero = run_cli({"classify", "0,0,0,0"});
  CHECK((not_zero.code == kExitOk || not_zero.code == kExitComputation));
}

TEST_CASE("byte determinism")
{
  for (const std::vector<std::string> & args :
       {std::vector<std::string>{"tables"}, {"verify"}, {"jacobi", "--velocity", "0.2,0.9,0.5,0.1", "--y0", "e1", "--yp0", "e3"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}
