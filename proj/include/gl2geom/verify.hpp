#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gl2geom/affine.hpp"
#include "gl2geom/algebra.hpp"

namespace gl2 {

enum class CheckStatus { Pass, Fail, Warn };

std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult
{
  std::string module;
  std::string name;
  double tolerance;
  double observed;
  CheckStatus status;
  std::string detail;
};

struct VerifyOptions
{
  /// Tolerance of the checks that compare two evaluations of the same map.
  double tol          = 1e-9;
  std::size_t steps   = 1000;
  double t1           = 1.0;
  std::uint64_t seed  = 0x5eed2024ULL;
};

/// Every invariant suite. Printed-versus-computed audits report Warn, never Fail.
std::vector<CheckResult> run_verification(const VerifyOptions & opts = {});
bool all_passed(const std::vector<CheckResult> & results);

// Samplers shared by the suites and the tests.
using Rng = std::mt19937_64;

double uniform(Rng & rng, double lo, double hi);
AlgebraVector random_algebra(Rng & rng, double scale = 1.0);
/// Timelike, in C(e1) when forward is true and in -C(e1) otherwise.
AlgebraVector random_timelike(Rng & rng, bool forward);
/// Exactly lightlike up to rounding: c = -(a^2 + d^2) / (2b).
AlgebraVector random_lightlike(Rng & rng);
/// det in [0.5, 2] roughly; always det > 0.
GroupPoint random_group_point(Rng & rng);
CoverPoint random_cover_point(Rng & rng);

}  // namespace gl2
