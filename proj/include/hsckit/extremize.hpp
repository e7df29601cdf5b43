#pragma once

// Extremes of the holomorphic sectional curvature over the unit sphere:
// a brute-force sampling oracle, multistart projected gradient ascent and
// descent, and recovery of the distinguished frame of an Einstein surface.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "hsckit/curvature.hpp"
#include "hsckit/sphere.hpp"

namespace hsckit {

struct ExtremizeConfig {
  int starts = 32;
  int max_iters = 20000;
  double step_tolerance = 1e-11;  // on the norm of the projected gradient
  double value_tolerance = 1e-12; // values closer than this count as ties
  std::uint64_t seed = 42;
  std::int64_t oracle_samples = 0; // 0 disables the sampling oracle
  int threads = 1;
};

struct SampleResult {
  double min;
  double max;
  Direction argmin;
  Direction argmax;
};

/// Extremes of hsc over m directions drawn uniformly from the unit sphere.
inline SampleResult sample_hsc(const KahlerCurvatureTensor& t, std::int64_t m,
                               std::uint64_t seed) {
  if (m < 1)
    throw DimensionMismatch("sample count must be positive");
  Rng rng(seed);
  SampleResult out{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity(), {}, {}};
  for (std::int64_t s = 0; s < m; ++s) {
    Direction v = random_direction(t.dim(), rng);
    const double h = hsc(t, v);
    if (h < out.min) {
      out.min = h;
      out.argmin = v;
    }
    if (h > out.max) {
      out.max = h;
      out.argmax = v;
    }
  }
  out.argmin = phase_normalized(out.argmin);
  out.argmax = phase_normalized(out.argmax);
  return out;
}

struct LocalSearch {
  double value;
  Direction point;
  int iterations;
  bool converged;
};

/// Projected gradient on the sphere with Armijo backtracking. `sign` = +1
/// ascends, -1 descends.
inline LocalSearch local_search(const KahlerCurvatureTensor& t, Direction v, int sign,
                                const ExtremizeConfig& cfg) {
  v /= v.norm();
  double f = hsc(t, v);
  double step = 0.1;
  int it = 0;
  bool converged = false;
  for (; it < cfg.max_iters; ++it) {
    const Direction g = quartic_gradient(t, v);
    const cplx radial = v.dot(g); // conj(v)^T g
    const Direction tangent = g - radial.real() * v;
    const double gnorm = tangent.norm();
    if (gnorm < cfg.step_tolerance) {
      converged = true;
      break;
    }
    const Direction d = static_cast<double>(sign) * tangent;
    double s = std::min(2 * step, 1.0);
    bool accepted = false;
    Direction w;
    double fw = f;
    while (s > 1e-18) {
      w = v + s * d;
      w /= w.norm();
      fw = hsc(t, w);
      if (sign * (fw - f) >= 1e-4 * s * gnorm * gnorm) {
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) {
      // No measurable progress: rounding dominates the gradient.
      converged = gnorm < 1e-6 * (1.0 + std::abs(f));
      break;
    }
    v = w;
    f = fw;
    step = s;
  }
  return {f, phase_normalized(v), it, converged};
}

struct ExtremizeResult {
  double min_value;
  double max_value;
  Direction argmin;
  Direction argmax;
  int iterations_used;
  bool converged;
  std::optional<double> oracle_min;
  std::optional<double> oracle_max;
};

/// Starting points: the 2n real coordinate directions of R^{2n}, then pairs
/// (v, conj v) of uniform samples from per-start streams.
inline Direction start_direction(int n, int index, std::uint64_t seed) {
  if (index < 2 * n) {
    Direction v = Direction::Zero(n);
    v[index / 2] = index % 2 == 0 ? cplx(1, 0) : cplx(0, 1);
    return v;
  }
  const int pair = (index - 2 * n) / 2;
  Rng rng = make_stream(seed, static_cast<std::uint64_t>(pair));
  Direction v = random_direction(n, rng);
  if ((index - 2 * n) % 2 == 1)
    v = v.conjugate();
  return v;
}

namespace detail {

/// Better value wins; near-ties go to the lexicographically smaller direction.
inline bool better(const LocalSearch& a, const LocalSearch& b, int sign, double tol) {
  if (std::abs(a.value - b.value) > tol)
    return sign * (a.value - b.value) > 0;
  return lex_less(a.point, b.point);
}

} // namespace detail

inline ExtremizeResult extremize_hsc(const KahlerCurvatureTensor& t,
                                     const ExtremizeConfig& cfg = {}) {
  if (cfg.starts < 1)
    throw DimensionMismatch("at least one start is required");
  const int n = t.dim();
  const auto count = static_cast<std::size_t>(cfg.starts);
  std::vector<LocalSearch> lows(count), highs(count);

  auto run = [&](std::size_t s) {
    const Direction v0 = start_direction(n, static_cast<int>(s), cfg.seed);
    lows[s] = local_search(t, v0, -1, cfg);
    highs[s] = local_search(t, v0, +1, cfg);
  };
  const int threads = std::clamp(cfg.threads, 1, cfg.starts);
  if (threads == 1) {
    for (std::size_t s = 0; s < count; ++s)
      run(s);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t s = static_cast<std::size_t>(w); s < count;
             s += static_cast<std::size_t>(threads))
          run(s);
      });
  }

  std::size_t lo = 0, hi = 0;
  int iters = 0;
  for (std::size_t s = 0; s < count; ++s) {
    iters += lows[s].iterations + highs[s].iterations;
    if (detail::better(lows[s], lows[lo], -1, cfg.value_tolerance))
      lo = s;
    if (detail::better(highs[s], highs[hi], +1, cfg.value_tolerance))
      hi = s;
  }

  ExtremizeResult out{lows[lo].value, highs[hi].value, lows[lo].point, highs[hi].point,
                      iters, lows[lo].converged && highs[hi].converged,
                      std::nullopt, std::nullopt};
  if (cfg.oracle_samples > 0) {
    const auto oracle = sample_hsc(t, cfg.oracle_samples, cfg.seed);
    out.oracle_min = oracle.min;
    out.oracle_max = oracle.max;
  }
  return out;
}

// ---------------------------------------------------------------------------

struct DistinguishedFrame {
  ComplexMatrix frame; // columns: e_1 = argmin, e_2 completion
  EinsteinFramePoint point;
  double residual; // largest component with three equal indices
  double min_value;
};

/// Largest |R_{abcd}| over components with exactly three equal indices.
inline double three_index_residual(const KahlerCurvatureTensor& t) {
  double r = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (a + b + c + d == 1 || a + b + c + d == 3)
            r = std::max(r, std::abs(t(a, b, c, d)));
  return r;
}

/// Rotates an Einstein surface tensor into the frame where e_1 minimizes
/// the holomorphic sectional curvature and R_{1212} is real and >= 0, then
/// reads off (H, A, B).
inline DistinguishedFrame distinguished_frame(const KahlerCurvatureTensor& t,
                                              double einstein_tolerance = 1e-6,
                                              const ExtremizeConfig& cfg = {}) {
  if (t.dim() != 2)
    throw NotSurface("distinguished frame needs a surface tensor, got dimension " +
                     std::to_string(t.dim()));
  const double aniso = einstein_anisotropy(t);
  if (aniso > einstein_tolerance)
    throw NotEinstein("Ricci eigenvalues differ by " + std::to_string(aniso), aniso);

  const ExtremizeResult ext = extremize_hsc(t, cfg);
  const Direction u = ext.argmin / ext.argmin.norm();
  ComplexMatrix frame(2, 2);
  frame << u[0], -std::conj(u[1]), u[1], std::conj(u[0]);

  // Scaling e_2 by e^{i theta} multiplies R_{1212} by e^{-2 i theta}.
  const cplx b = transform_frame(t, frame)(0, 1, 0, 1);
  if (std::abs(b) > 0)
    frame.col(1) *= std::polar(1.0, std::arg(b) / 2);

  const KahlerCurvatureTensor rotated = transform_frame(t, frame);
  EinsteinFramePoint p{rotated(0, 0, 0, 0).real(), rotated(0, 0, 1, 1).real(),
                       rotated(0, 1, 0, 1)};
  return {frame, p, three_index_residual(rotated), ext.min_value};
}

} // namespace hsckit
