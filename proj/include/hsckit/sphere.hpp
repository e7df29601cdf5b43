#pragma once

// Random directions and frames on C^n.

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "hsckit/curvature.hpp"

namespace hsckit {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream index).
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/// Uniform on the unit sphere of C^n = R^{2n}.
inline Direction random_direction(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Direction v(n);
  do {
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v[i] = cplx(re, im);
    }
  } while (v.squaredNorm() == 0.0);
  return v / v.norm();
}

/// Haar-distributed unitary matrix (QR of a complex Ginibre matrix with the
/// phases of R's diagonal removed).
inline ComplexMatrix random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = cplx(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0)
      q.col(j) *= r(j, j) / mag;
  }
  return q;
}

/// Rotates the phase so the first component with magnitude above `eps` is
/// real and positive. HSC is invariant under this.
inline Direction phase_normalized(Direction v, double eps = 1e-12) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > eps) {
      v *= std::conj(v[i]) / mag;
      v[i] = cplx(v[i].real(), 0.0);
      break;
    }
  }
  return v;
}

/// Lexicographic order on (-re, -im) of each component, so that among
/// phase-normalized directions e_1 comes before e_2.
inline bool lex_less(const Direction& a, const Direction& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real())
      return a[i].real() > b[i].real();
    if (a[i].imag() != b[i].imag())
      return a[i].imag() > b[i].imag();
  }
  return false;
}

} // namespace hsckit
