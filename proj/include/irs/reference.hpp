#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "irs/calibration.hpp"
#include "irs/types.hpp"

namespace irs::reference {

// Published reference statistics for the IRS metric. The bundled profile
// pins its re-scaling weights and pentagon ordering to these values; the
// selfcheck fixtures verify the pipeline reproduces them.

// Pairwise Pearson correlations of the five raw measures over a large
// natural-photo corpus. Indexed by Measure.
inline const Mat5 correlation = [] {
  Mat5 m = Mat5::Identity();
  auto set = [&m](int a, int b, double v) { m(a, b) = m(b, a) = v; };
  set(kCed, kGlcmContrast, 0.76);
  set(kCed, kGlcmEnergy, -0.28);
  set(kCed, kVbm, 0.05);
  set(kCed, kMs, 0.21);
  set(kGlcmContrast, kGlcmEnergy, -0.13);
  set(kGlcmContrast, kVbm, 0.20);
  set(kGlcmContrast, kMs, 0.14);
  set(kGlcmEnergy, kVbm, 0.21);
  set(kGlcmEnergy, kMs, -0.35);
  set(kVbm, kMs, -0.07);
  return m;
}();

// Calibrated (normalized + inverted, unweighted) generated-image means.
// Their reciprocals are the re-scaling weights.
inline const Vec5 fake_calibrated_means = [] {
  Vec5 v;
  v[kGlcmContrast] = 0.43;
  v[kGlcmEnergy] = 0.97;
  v[kCed] = 0.64;
  v[kVbm] = 0.90;
  v[kMs] = 0.98;
  return v;
}();

// Re-scaled natural-image means, published to two decimals.
inline const Vec5 real_rescaled_means = [] {
  Vec5 v;
  v[kGlcmContrast] = 2.31;
  v[kGlcmEnergy] = 1.02;
  v[kCed] = 1.57;
  v[kVbm] = 1.11;
  v[kMs] = 1.02;
  return v;
}();

// Reported mean IRS values (rounded to two decimals).
inline constexpr double fake_irs_before_rescaling = 1.50;
inline constexpr double fake_irs_after_rescaling = 2.38;
inline constexpr double real_irs_after_rescaling = 4.68;

// The adjacency-sum-maximizing cycle for `correlation`:
// GLCM_C - CED - MS - GLCM_E - VBM.
inline const Ordering ordering = {{kGlcmContrast, kCed, kMs, kGlcmEnergy, kVbm}};
inline constexpr double ordering_adjacency_sum = 1.03;

// Published mean IRS per source, for context rows in benchmark output.
inline constexpr std::array<std::pair<std::string_view, double>, 5> model_means = {{
    {"Real", 4.68},
    {"SDM", 2.29},
    {"Midjourney", 2.03},
    {"BigGAN", 1.74},
    {"Dalle2", 1.58},
}};

}  // namespace irs::reference
