#pragma once

#include <array>

#include "gl2geom/algebra.hpp"

// Natural chart (x1, x2, x3, x4) = row-major entries of a point of G0.
namespace gl2 {

struct FrameFieldValue
{
  GroupPoint base;
  std::array<Vec4, 4> vectors;  // e_i^+ at base in d/dx coordinates

  /// det of the stacked vectors.
  double volume() const;
};

struct CoframeFieldValue
{
  GroupPoint base;
  std::array<Vec4, 4> covectors;  // (e_i^+)^* at base in dx coordinates
};

/// The four printed coordinate expressions of e_i^+.
FrameFieldValue frame_at(const GroupPoint & p);
/// p e_i flattened row-major.
FrameFieldValue frame_pushforward(const GroupPoint & p);

/// The printed coframe, prefactor 1 / (sqrt(2) det p).
CoframeFieldValue coframe_at(const GroupPoint & p);

/// Entry (i,j) = covector_i(vector_j).
Mat4 pairing(const CoframeFieldValue & coframe, const FrameFieldValue & frame);

/// Printed coordinate form of k+. Cross terms c dx_i dx_j enter as g_ij = g_ji = c/2.
Mat4 metric_at(const GroupPoint & p);
/// sum_i eps_i (e_i^+)^* (x) (e_i^+)^*.
Mat4 metric_frame_based(const GroupPoint & p);
/// k(p^{-1} U, p^{-1} V) for coordinate directions U, V.
Mat4 metric_pullback(const GroupPoint & p);
/// -(e1)^*(e1)^* + (e2)^*(e3)^* + (e3)^*(e3)^* + (e4)^*(e4)^*, the middle term symmetrized.
Mat4 metric_e2e3_reading(const GroupPoint & p);

struct KplusReadingAudit
{
  double gap_sum_of_squares;  // |printed dx form - eps-weighted squares|
  double gap_e2e3;            // |printed dx form - e2e3 reading|
};

KplusReadingAudit kplus_reading_audit(const GroupPoint & p);

/// Printed coordinate Ricci, same quadratic-form convention as metric_at.
Mat4 ricci_coord_printed(const GroupPoint & p);
/// Frame Ricci table diag(1,-1,-1,0) pulled back through coframe_at.
Mat4 ricci_coord_frame(const GroupPoint & p);

struct RicciCoordAudit
{
  Mat4 printed;
  Mat4 frame;
  double max_gap;
};

RicciCoordAudit ricci_coord_audit(const GroupPoint & p);

}  // namespace gl2
