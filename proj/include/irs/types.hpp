#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace irs {

template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Luminance raster with values in [0,1]. Indexed (row, col) = (y, x).
using GrayImage = Plane<double>;

// Unbounded real raster (filter responses, spectra). Same indexing.
using FloatField = Plane<double>;

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

// The five raw statistics of one image, indexed by Measure.
using MeasureVector = Vec5;

// Calibrated pentagon radii in profile slot order.
using RadiiVector = Vec5;

enum Measure : int {
  kGlcmContrast = 0,
  kGlcmEnergy = 1,
  kCed = 2,
  kVbm = 3,
  kMs = 4,
};

inline constexpr int kMeasureCount = 5;

inline constexpr std::array<std::string_view, 5> kMeasureNames = {
    "glcm_contrast", "glcm_energy", "ced", "vbm", "ms"};

// Short labels used on plot axes and in tables.
inline constexpr std::array<std::string_view, 5> kMeasureLabels = {
    "GLCM_C", "GLCM_E", "CED", "VBM", "MS"};

inline int measure_from_name(std::string_view name) {
  for (int i = 0; i < kMeasureCount; ++i)
    if (kMeasureNames[i] == name) return i;
  return -1;
}

// Decoded 8-bit image, interleaved RGB, rows from the top.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height bytes

  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
  std::uint8_t* at(int x, int y) {
    return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
};

}  // namespace irs
