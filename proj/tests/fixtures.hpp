#pragma once

// Random generators shared by the unit and acceptance suites.

#include <cmath>
#include <numbers>
#include <random>

#include "hsckit/curvature.hpp"
#include "hsckit/sphere.hpp"

namespace hsckit::testing {

/// Frame point with 2A - H - |B| = slack >= 0; H in [-3, 1], |B| in [0, 2],
/// slack in [0, 3].
inline EinsteinFramePoint random_frame_point(Rng& rng, double min_slack = 0.0) {
  std::uniform_real_distribution<double> h(-3.0, 1.0), b(0.0, 2.0), s(min_slack, 3.0),
      phase(0.0, 2 * std::numbers::pi);
  EinsteinFramePoint p;
  p.H = h(rng);
  const double mod = b(rng);
  p.B = std::polar(mod, phase(rng));
  p.A = 0.5 * (p.H + mod + s(rng));
  return p;
}

/// Frame point in the negative Einstein regime (gamma_1 = H + A < 0).
inline EinsteinFramePoint random_negative_frame_point(Rng& rng) {
  for (;;) {
    auto p = random_frame_point(rng);
    if (p.lambda() < 0)
      return p;
  }
}

/// Projection of an array with i.i.d. entries in [-1, 1] + i[-1, 1] onto the
/// Kahler-symmetric subspace, shifted by a constant-curvature block.
inline KahlerCurvatureTensor random_tensor(int n, Rng& rng, double shift = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CurvatureArray a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double re = u(rng);
          const double im = u(rng);
          a(i, j, k, l) = cplx(re, im);
        }
  const auto c = constant_hsc_tensor(n, shift);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          a(i, j, k, l) += c(i, j, k, l);
  return KahlerCurvatureTensor::canonicalize(a);
}

} // namespace hsckit::testing
