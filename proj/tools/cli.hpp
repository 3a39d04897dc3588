#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2geom/algebra.hpp"
#include "report.hpp"

namespace gl2::cli {

/// Malformed command-line input; exit code 2.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk          = 0;
inline constexpr int kExitInput       = 2;
inline constexpr int kExitComputation = 3;

/// "a,b,c,d" row-major, or a basis symbol e1..e4 with an optional sign.
Mat2 parse_matrix(const std::string & text);
/// "f1,f2,f3,f4" basis coefficients, or a basis symbol.
Vec4 parse_coefficients(const std::string & text);
/// Exactly four comma-separated reals.
Vec4 parse_four(const std::string & text);
double parse_real(const std::string & text);

/// "p/q·√2^e" with e in {0, 1}; "0" for zero; a plain decimal when no small
/// denominator fits.
std::string to_radical(double x);

struct RunConfig
{
  std::string command;
  Format format     = Format::Json;
  std::size_t steps = 1000;
  double t1         = 1.0;
  double tol        = 1e-9;
  std::string out;

  std::string u, x0, y0, velocity, yp0, p, q;
  std::vector<std::string> positional;
};

Report cmd_tables(const RunConfig & c);
Report cmd_classify(const RunConfig & c);
Report cmd_geodesic(const RunConfig & c);
Report cmd_transport(const RunConfig & c);
Report cmd_jacobi(const RunConfig & c);
Report cmd_dev(const RunConfig & c);
Report cmd_cover_mul(const RunConfig & c);
/// Sets failed when any check reports FAIL.
Report cmd_verify(const RunConfig & c, bool & failed);

/// Full command line without the program name. Returns the exit code.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace gl2::cli
