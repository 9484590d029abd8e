#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "irs/errors.hpp"
#include "irs/imgproc.hpp"
#include "irs/types.hpp"

namespace irs {

// Gray levels and pixel-pair offsets used by measure_vector(). The four
// unit-distance directions, counted symmetrically, make the GLCM measures
// invariant under quarter-turn rotations.
inline constexpr int kGlcmLevels = 64;

struct Offset {
  int dx;  // column step
  int dy;  // row step
};

inline constexpr std::array<Offset, 4> kGlcmOffsets = {{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};

struct LevelImage {
  Plane<int> values;  // each value in [0, levels)
  int levels = 0;
};

// GLCM joint probabilities; symmetric, entries sum to 1.
using GlcmMatrix = Eigen::MatrixXd;

using EdgeMask = Plane<bool>;

inline LevelImage quantize(const GrayImage& img, int levels) {
  if (levels < 2 || levels > 256) throw InvalidLevels("quantize: levels must be in [2,256]");
  LevelImage out;
  out.levels = levels;
  out.values = img.unaryExpr([levels](double v) {
    return std::min(static_cast<int>(std::floor(v * levels)), levels - 1);
  });
  return out;
}

// Pair counts for every offset, taken in both directions, summed across
// offsets and normalized. Throws NoValidPairs if any offset yields no pair.
inline GlcmMatrix glcm(const LevelImage& img, std::span<const Offset> offsets) {
  if (offsets.empty()) throw NoValidPairs("glcm: no offsets given");
  const Eigen::Index rows = img.values.rows(), cols = img.values.cols();
  GlcmMatrix counts = GlcmMatrix::Zero(img.levels, img.levels);
  double total = 0;
  for (const Offset& o : offsets) {
    const Eigen::Index r_lo = std::max(0, -o.dy), r_hi = rows - std::max(0, o.dy);
    const Eigen::Index c_lo = std::max(0, -o.dx), c_hi = cols - std::max(0, o.dx);
    if (r_lo >= r_hi || c_lo >= c_hi)
      throw NoValidPairs("glcm: image too small for offset");
    for (Eigen::Index c = c_lo; c < c_hi; ++c) {
      for (Eigen::Index r = r_lo; r < r_hi; ++r) {
        const int a = img.values(r, c);
        const int b = img.values(r + o.dy, c + o.dx);
        counts(a, b) += 1;
        counts(b, a) += 1;
        total += 2;
      }
    }
  }
  return counts / total;
}

// Angular second moment, in (0,1].
template <typename Derived>
double glcm_energy(const Eigen::MatrixBase<Derived>& p) {
  return p.array().square().sum();
}

// Intensity-difference weighted sum, >= 0.
template <typename Derived>
double glcm_contrast(const Eigen::MatrixBase<Derived>& p) {
  double acc = 0;
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      acc += static_cast<double>((i - j) * (i - j)) * p(i, j);
  return acc;
}

struct CannyResult {
  EdgeMask mask;
  double density = 0.0;  // edge pixels / total pixels
};

// Full Canny pipeline: Gaussian smoothing, Sobel gradients, non-maximum
// suppression over 4 quantized directions, double-threshold hysteresis with
// 8-connected weak-edge promotion. Thresholds are fractions of the maximum
// gradient magnitude so the detector adapts to image contrast.
inline CannyResult canny_edge_density(const GrayImage& img, double sigma = 1.4,
                                      double low_frac = 0.10, double high_frac = 0.20) {
  const Eigen::Index rows = img.rows(), cols = img.cols();
  CannyResult result;
  result.mask = EdgeMask::Constant(rows, cols, false);

  const GrayImage smoothed = gaussian_blur(img, sigma);

  FloatField gx(rows, cols), gy(rows, cols);
  auto at = [&](Eigen::Index r, Eigen::Index c) {
    return smoothed(std::clamp<Eigen::Index>(r, 0, rows - 1),
                    std::clamp<Eigen::Index>(c, 0, cols - 1));
  };
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      // Sobel, replicate border.
      const double tl = at(r - 1, c - 1), tc = at(r - 1, c), tr = at(r - 1, c + 1);
      const double ml = at(r, c - 1), mr = at(r, c + 1);
      const double bl = at(r + 1, c - 1), bc = at(r + 1, c), br = at(r + 1, c + 1);
      gx(r, c) = (tr + 2 * mr + br) - (tl + 2 * ml + bl);
      gy(r, c) = (bl + 2 * bc + br) - (tl + 2 * tc + tr);
    }
  }
  const FloatField mag = (gx.square() + gy.square()).sqrt();
  const double max_mag = mag.maxCoeff();
  if (!(max_mag > 0)) return result;  // flat image, no edges

  // Non-maximum suppression. Direction quantized to 4 bins; a pixel survives
  // if its magnitude strictly exceeds the backward neighbor and is >= the
  // forward neighbor, which keeps exactly one pixel across an even plateau.
  FloatField thin = FloatField::Zero(rows, cols);
  auto mat = [&](Eigen::Index r, Eigen::Index c) {
    return mag(std::clamp<Eigen::Index>(r, 0, rows - 1),
               std::clamp<Eigen::Index>(c, 0, cols - 1));
  };
  constexpr double kPi = 3.14159265358979323846;
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double m = mag(r, c);
      if (m <= 0) continue;
      double angle = std::atan2(gy(r, c), gx(r, c));
      if (angle < 0) angle += kPi;  // fold to [0, pi)
      const int bin = static_cast<int>(std::floor(angle / (kPi / 4.0) + 0.5)) % 4;
      double back, fwd;
      switch (bin) {
        case 0:  // horizontal gradient: compare along x
          back = mat(r, c - 1), fwd = mat(r, c + 1);
          break;
        case 1:  // 45 degrees
          back = mat(r - 1, c - 1), fwd = mat(r + 1, c + 1);
          break;
        case 2:  // vertical gradient: compare along y
          back = mat(r - 1, c), fwd = mat(r + 1, c);
          break;
        default:  // 135 degrees
          back = mat(r + 1, c - 1), fwd = mat(r - 1, c + 1);
          break;
      }
      if (m > back && m >= fwd) thin(r, c) = m;
    }
  }

  // Hysteresis: seed from strong pixels, grow through weak ones.
  const double high = high_frac * max_mag;
  const double low = low_frac * max_mag;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> stack;
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r)
      if (thin(r, c) >= high) {
        result.mask(r, c) = true;
        stack.emplace_back(r, c);
      }
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    for (Eigen::Index dr = -1; dr <= 1; ++dr) {
      for (Eigen::Index dc = -1; dc <= 1; ++dc) {
        const Eigen::Index rr = r + dr, cc = c + dc;
        if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) continue;
        if (result.mask(rr, cc) || thin(rr, cc) < low) continue;
        result.mask(rr, cc) = true;
        stack.emplace_back(rr, cc);
      }
    }
  }

  result.density = static_cast<double>(result.mask.count()) / static_cast<double>(rows * cols);
  return result;
}

// Population variance of the Laplacian response.
inline double variance_blur_measure(const GrayImage& img) {
  const FloatField lap = laplacian_filter(img);
  const double mean = lap.mean();
  return (lap - mean).square().mean();
}

// Mean magnitude of the full (DC-inclusive) spectrum.
inline double mean_spectrum(const GrayImage& img) {
  return dft2_magnitude(img).mean();
}

// The five raw statistics of one standardized image.
inline MeasureVector measure_vector(const GrayImage& img) {
  const GlcmMatrix p = glcm(quantize(img, kGlcmLevels), kGlcmOffsets);
  MeasureVector v;
  v[kGlcmContrast] = glcm_contrast(p);
  v[kGlcmEnergy] = glcm_energy(p);
  v[kCed] = canny_edge_density(img).density;
  v[kVbm] = variance_blur_measure(img);
  v[kMs] = mean_spectrum(img);
  return v;
}

}  // namespace irs
