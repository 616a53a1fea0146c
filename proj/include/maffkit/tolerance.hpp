#pragma once

#include <cfloat>

#include "maffkit/errors.hpp"

namespace maff {

/// Numeric policy shared by every operation: rank decisions and approximate
/// comparisons all derive from these three knobs.
struct Tolerance {
  double rank_scale = 128.0;
  double eq_abs = 1e-8;
  double eq_rel = 1e-8;

  void validate() const {
    if (!(rank_scale > 0.0) || !(eq_abs > 0.0) || !(eq_rel > 0.0))
      fail(errc::bad_input, "tolerance fields must be strictly positive");
  }

  /// Values at or below this, measured on the scale of `norm2`, count as
  /// zero in rank decisions.
  double rank_cutoff(int dim, double norm2) const {
    return rank_scale * DBL_EPSILON * static_cast<double>(dim) * norm2;
  }

  double eq_threshold(double scale) const { return eq_abs + eq_rel * scale; }
};

/// Slack for PSD certificates: min eigenvalue >= -psd_slack(dim, norm).
inline double psd_slack(int dim, double norm2) {
  return static_cast<double>(dim) * 1e-9 * (norm2 < 1.0 ? 1.0 : norm2);
}

}  // namespace maff
