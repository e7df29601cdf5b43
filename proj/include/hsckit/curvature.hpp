#pragma once

// Pointwise Kahler curvature tensors R_{i jbar k lbar} in a unitary frame
// (metric = identity), the holomorphic sectional curvature functional, and
// closed forms for Kahler-Einstein surfaces in the frame where the minimal
// holomorphic sectional curvature is attained along e_1.

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hsckit/error.hpp"

namespace hsckit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Direction = Eigen::VectorXcd;

inline constexpr double kSymmetryTolerance = 1e-9;

struct TensorIndex {
  int i, j, k, l;

  friend bool operator==(const TensorIndex&, const TensorIndex&) = default;
  friend auto operator<=>(const TensorIndex&, const TensorIndex&) = default;
};

/// Dense n^4 complex array with no symmetry guarantees.
class CurvatureArray {
public:
  explicit CurvatureArray(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, cplx{}) {
    if (n < 1)
      throw DimensionMismatch("tensor dimension must be positive");
  }

  int dim() const { return n_; }

  std::size_t offset(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  cplx& operator()(int i, int j, int k, int l) { return data_[offset(i, j, k, l)]; }
  const cplx& operator()(int i, int j, int k, int l) const {
    return data_[offset(i, j, k, l)];
  }
  cplx& operator[](TensorIndex x) { return (*this)(x.i, x.j, x.k, x.l); }
  const cplx& operator[](TensorIndex x) const { return (*this)(x.i, x.j, x.k, x.l); }

  const std::vector<cplx>& data() const { return data_; }

private:
  int n_;
  std::vector<cplx> data_;
};

/// The eight images of an index under the Kahler symmetries. Entries with
/// `conjugate` set relate by R_x = conj(R_image).
struct SymmetryImage {
  TensorIndex index;
  bool conjugate;
};

inline std::array<SymmetryImage, 8> symmetry_images(TensorIndex x) {
  const auto [i, j, k, l] = x;
  return {{{{i, j, k, l}, false},
           {{k, j, i, l}, false},
           {{i, l, k, j}, false},
           {{k, l, i, j}, false},
           {{j, i, l, k}, true},
           {{j, k, l, i}, true},
           {{l, i, j, k}, true},
           {{l, k, j, i}, true}}};
}

/// Lexicographically smallest member of the symmetry orbit.
inline TensorIndex orbit_representative(TensorIndex x) {
  TensorIndex best = x;
  for (const auto& img : symmetry_images(x))
    best = std::min(best, img.index);
  return best;
}

/// Assigns `value` to x and every symmetry image of x.
inline void set_orbit(CurvatureArray& a, TensorIndex x, cplx value) {
  for (const auto& img : symmetry_images(x))
    a[img.index] = img.conjugate ? std::conj(value) : value;
}

/// Orbit average: the orthogonal projection onto tensors with Kahler
/// symmetries.
inline CurvatureArray symmetrize(const CurvatureArray& a) {
  const int n = a.dim();
  CurvatureArray out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx sum{};
          for (const auto& img : symmetry_images({i, j, k, l}))
            sum += img.conjugate ? std::conj(a[img.index]) : a[img.index];
          out(i, j, k, l) = sum / 8.0;
        }
  return out;
}

struct SymmetryViolation {
  TensorIndex orbit; // representative
  double magnitude;
};

struct ValidationReport {
  double max_violation = 0.0;
  std::vector<SymmetryViolation> violations; // sorted by orbit representative

  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const CurvatureArray& a,
                                 double tolerance = kSymmetryTolerance) {
  const int n = a.dim();
  const CurvatureArray sym = symmetrize(a);
  std::vector<SymmetryViolation> per_orbit;
  ValidationReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const TensorIndex x{i, j, k, l};
          const double d = std::abs(a[x] - sym[x]);
          report.max_violation = std::max(report.max_violation, d);
          if (d <= tolerance)
            continue;
          const TensorIndex rep = orbit_representative(x);
          auto it = std::find_if(per_orbit.begin(), per_orbit.end(),
                                 [&](const auto& v) { return v.orbit == rep; });
          if (it == per_orbit.end())
            per_orbit.push_back({rep, d});
          else
            it->magnitude = std::max(it->magnitude, d);
        }
  std::sort(per_orbit.begin(), per_orbit.end(),
            [](const auto& a, const auto& b) { return a.orbit < b.orbit; });
  report.violations = std::move(per_orbit);
  return report;
}

/// Curvature tensor with Kahler symmetries. Built only through
/// `canonicalize`, which projects onto the symmetric subspace and records
/// how far the input was from it.
class KahlerCurvatureTensor {
public:
  static KahlerCurvatureTensor canonicalize(const CurvatureArray& raw) {
    CurvatureArray sym = symmetrize(raw);
    double asym = 0.0;
    for (std::size_t p = 0; p < raw.data().size(); ++p)
      asym = std::max(asym, std::abs(raw.data()[p] - sym.data()[p]));
    return KahlerCurvatureTensor(std::move(sym), asym);
  }

  static KahlerCurvatureTensor zero(int n) {
    return KahlerCurvatureTensor(CurvatureArray(n), 0.0);
  }

  int dim() const { return entries_.dim(); }
  cplx operator()(int i, int j, int k, int l) const { return entries_(i, j, k, l); }
  const CurvatureArray& entries() const { return entries_; }

  /// Largest entrywise change made by canonicalization.
  double asymmetry() const { return asymmetry_; }

private:
  KahlerCurvatureTensor(CurvatureArray e, double asym)
      : entries_(std::move(e)), asymmetry_(asym) {}

  CurvatureArray entries_;
  double asymmetry_;
};

inline ValidationReport validate(const KahlerCurvatureTensor& t,
                                 double tolerance = kSymmetryTolerance) {
  return validate(t.entries(), tolerance);
}

inline void require_dim(const KahlerCurvatureTensor& t, Eigen::Index n) {
  if (t.dim() != n)
    throw DimensionMismatch("tensor has dimension " + std::to_string(t.dim()) +
                            ", argument has " + std::to_string(n));
}

/// R(v, vbar, v, vbar) without normalization.
inline cplx quartic_form(const KahlerCurvatureTensor& t, const Direction& v) {
  const int n = t.dim();
  const auto& r = t.entries().data();
  cplx sum{};
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx ij = v[i] * std::conj(v[j]);
      for (int k = 0; k < n; ++k) {
        const cplx ijk = ij * v[k];
        for (int l = 0; l < n; ++l, ++p)
          sum += r[p] * ijk * std::conj(v[l]);
      }
    }
  return sum;
}

/// Holomorphic sectional curvature in direction v; v need not be unit.
inline double hsc(const KahlerCurvatureTensor& t, const Direction& v) {
  require_dim(t, v.size());
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0)
    throw DimensionMismatch("zero direction");
  const cplx q = quartic_form(t, v);
  assert(std::abs(q.imag()) <= 1e-9 * std::max(1.0, std::abs(q.real())) * norm2 * norm2);
  return q.real() / (norm2 * norm2);
}

/// Euclidean gradient of v -> R(v, vbar, v, vbar) on R^{2n} = C^n, written
/// as a complex vector: 4 sum_{ikl} R_{i m k l} v_i v_k conj(v_l).
inline Direction quartic_gradient(const KahlerCurvatureTensor& t, const Direction& v) {
  const int n = t.dim();
  Direction g = Direction::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      cplx acc{};
      for (int k = 0; k < n; ++k) {
        const cplx ik = v[i] * v[k];
        for (int l = 0; l < n; ++l)
          acc += t(i, m, k, l) * ik * std::conj(v[l]);
      }
      g[m] += acc;
    }
  return 4.0 * g;
}

inline ComplexMatrix ricci(const KahlerCurvatureTensor& t) {
  const int n = t.dim();
  ComplexMatrix ric = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        ric(i, j) += t(i, j, k, k);
  return ric;
}

inline double scalar(const KahlerCurvatureTensor& t) {
  return ricci(t).trace().real();
}

inline Eigen::VectorXd ricci_eigenvalues(const KahlerCurvatureTensor& t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ricci(t), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Spread of the Ricci eigenvalues; zero exactly for Einstein tensors.
inline double einstein_anisotropy(const KahlerCurvatureTensor& t) {
  const Eigen::VectorXd ev = ricci_eigenvalues(t);
  return ev.maxCoeff() - ev.minCoeff();
}

/// Components in the frame e'_a = sum_i U_{ia} e_i.
inline KahlerCurvatureTensor transform_frame(const KahlerCurvatureTensor& t,
                                             const ComplexMatrix& u,
                                             double tolerance = kSymmetryTolerance) {
  const int n = t.dim();
  if (u.rows() != n || u.cols() != n)
    throw DimensionMismatch("frame change must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tolerance)
    throw NotUnitary("frame change deviates from unitary by " + std::to_string(defect));

  // One slot at a time; slots 1 and 3 take U, slots 2 and 4 take conj(U).
  CurvatureArray cur = t.entries();
  for (int slot = 0; slot < 4; ++slot) {
    const bool conj_slot = slot % 2 == 1;
    CurvatureArray next(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            std::array<int, 4> out{a, b, c, d};
            cplx acc{};
            for (int s = 0; s < n; ++s) {
              std::array<int, 4> in = out;
              in[slot] = s;
              const cplx w = conj_slot ? std::conj(u(s, out[slot])) : u(s, out[slot]);
              acc += w * cur(in[0], in[1], in[2], in[3]);
            }
            next(a, b, c, d) = acc;
          }
    cur = std::move(next);
  }
  return KahlerCurvatureTensor::canonicalize(cur);
}

/// Constant holomorphic sectional curvature c:
/// R = (c/2)(delta_ij delta_kl + delta_il delta_kj).
inline KahlerCurvatureTensor constant_hsc_tensor(int n, double c) {
  CurvatureArray a(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      a(i, i, k, k) += c / 2;
      a(i, k, k, i) += c / 2;
    }
  return KahlerCurvatureTensor::canonicalize(a);
}

/// Curvature of the product metric: block diagonal, zero on mixed indices.
inline KahlerCurvatureTensor product_tensor(const KahlerCurvatureTensor& first,
                                            const KahlerCurvatureTensor& second) {
  const int n1 = first.dim(), n2 = second.dim();
  CurvatureArray a(n1 + n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k)
        for (int l = 0; l < n1; ++l)
          a(i, j, k, l) = first(i, j, k, l);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n2; ++k)
        for (int l = 0; l < n2; ++l)
          a(n1 + i, n1 + j, n1 + k, n1 + l) = second(i, j, k, l);
  return KahlerCurvatureTensor::canonicalize(a);
}

// ---------------------------------------------------------------------------
// Kahler-Einstein surfaces in the distinguished frame.

/// (H, A, B) = (R_{1111}, R_{1122}, R_{1212}) in a frame where e_1 minimizes
/// the holomorphic sectional curvature.
struct EinsteinFramePoint {
  double H = 0.0;
  double A = 0.0;
  cplx B{};

  /// Einstein constant; equals gamma_1.
  double lambda() const { return H + A; }

  /// 2A - H - |B| >= 0 is the condition that e_1 is a minimizer.
  double frame_slack() const { return 2 * A - H - std::abs(B); }
};

inline void require_frame(const EinsteinFramePoint& p) {
  const double scale = 1.0 + std::abs(p.H) + std::abs(p.A) + std::abs(p.B);
  if (p.frame_slack() < -1e-12 * scale)
    throw FrameConstraintViolated("2A < H + |B|: e_1 is not a minimizing direction "
                                  "(slack " + std::to_string(p.frame_slack()) + ")");
}

/// Surface tensor with R_{1111} = R_{2222} = H, R_{1122} orbit = A,
/// R_{1212} = B, and every other orbit zero. R_{2222} = H is what the
/// Einstein condition Ric_{11} = Ric_{22} forces.
inline KahlerCurvatureTensor assemble_einstein_surface(const EinsteinFramePoint& p) {
  require_frame(p);
  CurvatureArray a(2);
  set_orbit(a, {0, 0, 0, 0}, p.H);
  set_orbit(a, {1, 1, 1, 1}, p.H);
  set_orbit(a, {0, 0, 1, 1}, p.A);
  set_orbit(a, {0, 1, 0, 1}, p.B);
  return KahlerCurvatureTensor::canonicalize(a);
}

/// H + 2(2A - H)|v1 conj(v2)|^2 + 2 Re(B (v1 conj(v2))^2) for unit v.
inline double hsc_surface_closed_form(const EinsteinFramePoint& p, const Direction& v) {
  if (v.size() != 2)
    throw DimensionMismatch("surface directions have two components");
  const cplx z = v[0] * std::conj(v[1]);
  return p.H + 2 * (2 * p.A - p.H) * std::norm(z) + 2 * (p.B * z * z).real();
}

struct SurfaceExtremes {
  double min;
  double max;
  bool negative; // max < 0
};

/// Extremes of the holomorphic sectional curvature at the point. The
/// minimum is H by the frame condition; the maximum is
/// H + (2A - H + |B|)/2.
inline SurfaceExtremes max_hsc_surface(const EinsteinFramePoint& p) {
  require_frame(p);
  const double max = p.H + 0.5 * (2 * p.A - p.H + std::abs(p.B));
  return {p.H, max, max < 0};
}

struct ChernWeil {
  double gamma1;
  double gamma2;
};

inline ChernWeil chern_weil(const EinsteinFramePoint& p) {
  return {p.H + p.A, 0.5 * (p.H * p.H + 2 * p.A * p.A + std::norm(p.B))};
}

/// gamma_2 < gamma_1^2, a sufficient condition for negative holomorphic
/// sectional curvature at the point. Only meaningful for gamma_1 < 0.
inline bool sufficient_negativity(const EinsteinFramePoint& p) {
  const auto [g1, g2] = chern_weil(p);
  if (!(g1 < 0))
    throw RegimeViolation("gamma_1 = " + std::to_string(g1) +
                          " is not negative; the condition applies only to "
                          "negative Einstein constant");
  return g2 < g1 * g1;
}

} // namespace hsckit
