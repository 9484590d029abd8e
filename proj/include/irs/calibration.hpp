#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "irs/errors.hpp"
#include "irs/types.hpp"

namespace irs {

// Pearson coefficients over the five raw measures; symmetric, unit diagonal.
using CorrelationMatrix = Mat5;

// Cyclic assignment of measures to pentagon slots m1..m5. Canonical form:
// slot 0 holds GLCM_C and the lower-indexed of its two neighbors sits in
// slot 1, so rotations/reflections of the same cycle compare equal.
struct Ordering {
  std::array<int, 5> slots{0, 1, 2, 3, 4};

  bool operator==(const Ordering&) const = default;

  bool is_canonical() const {
    std::array<bool, 5> seen{};
    for (int s : slots) {
      if (s < 0 || s >= kMeasureCount || seen[static_cast<std::size_t>(s)]) return false;
      seen[static_cast<std::size_t>(s)] = true;
    }
    return slots[0] == kGlcmContrast && slots[1] < slots[4];
  }
};

// The 12 distinct cyclic arrangements of five labeled radii, canonicalized,
// in lexicographic order.
inline std::array<Ordering, 12> enumerate_cyclic_orders() {
  std::array<Ordering, 12> out;
  std::array<int, 4> rest{1, 2, 3, 4};
  std::size_t n = 0;
  do {
    if (rest[0] < rest[3]) out[n++] = Ordering{{0, rest[0], rest[1], rest[2], rest[3]}};
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline double adjacency_sum(const Ordering& ord, const CorrelationMatrix& corr) {
  double sum = 0;
  for (int k = 0; k < 5; ++k) sum += corr(ord.slots[static_cast<std::size_t>(k)],
                                           ord.slots[static_cast<std::size_t>((k + 1) % 5)]);
  return sum;
}

// Pairwise Pearson coefficients of the raw (pre-inversion) measures.
inline CorrelationMatrix correlation_matrix(const std::vector<MeasureVector>& samples) {
  const auto n = static_cast<double>(samples.size());
  if (samples.size() < 3) throw TooFewSamples("correlation_matrix: need >= 3 samples");

  Vec5 mean = Vec5::Zero();
  for (const auto& s : samples) mean += s;
  mean /= n;

  Mat5 cov = Mat5::Zero();
  for (const auto& s : samples) {
    const Vec5 d = s - mean;
    cov += d * d.transpose();
  }
  cov /= n;

  Vec5 sd = cov.diagonal().array().sqrt();
  for (int i = 0; i < 5; ++i)
    if (!(sd[i] > 0))
      throw DegenerateColumn(std::string("correlation_matrix: zero variance in ") +
                             std::string(kMeasureNames[static_cast<std::size_t>(i)]));

  CorrelationMatrix corr;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) corr(i, j) = i == j ? 1.0 : cov(i, j) / (sd[i] * sd[j]);
  return corr;
}

// Among the 12 cyclic orders, the one maximizing the sum of signed
// adjacent-pair correlations; ties resolve to the first canonical order.
inline Ordering select_ordering(const CorrelationMatrix& corr) {
  const auto orders = enumerate_cyclic_orders();
  const Ordering* best = &orders[0];
  double best_sum = adjacency_sum(orders[0], corr);
  for (const Ordering& ord : orders) {
    const double s = adjacency_sum(ord, corr);
    if (s > best_sum) {
      best_sum = s;
      best = &ord;
    }
  }
  return *best;
}

// Everything needed to turn a MeasureVector into pentagon radii and a
// verdict. Weights are the componentwise reciprocals of the calibrated
// fake-corpus means, so the fake calibration corpus maps to the unit
// pentagon by construction.
struct CalibrationProfile {
  Vec5 real_means = Vec5::Ones();
  std::array<bool, 5> inversion_mask{false, true, false, true, true};  // GLCM_E, VBM, MS
  Vec5 fake_calibrated_means = Vec5::Ones();
  Vec5 weights = Vec5::Ones();
  Ordering ordering;
  double threshold = 3.0;
  double radius_clamp = 3.0;
  std::string version = "irs-profile/1";

  bool operator==(const CalibrationProfile&) const = default;
};

inline constexpr double kInversionFloor = 1e-9;
inline constexpr double kDefaultThreshold = 3.0;
inline constexpr double kDefaultRadiusClamp = 3.0;

namespace detail {

// Normalize by the real-corpus means, then invert the masked components.
inline Vec5 calibrated_components(const MeasureVector& v, const Vec5& real_means,
                                  const std::array<bool, 5>& mask) {
  Vec5 out;
  for (int i = 0; i < 5; ++i) {
    double x = v[i] / real_means[i];
    if (mask[static_cast<std::size_t>(i)]) x = 1.0 / std::max(x, kInversionFloor);
    out[i] = x;
  }
  return out;
}

}  // namespace detail

// Builds a profile from corpora of raw measure vectors. The fake corpus is
// calibrated per vector and its mean fixes the re-scaling weights; the
// ordering comes from the real-corpus correlations.
inline CalibrationProfile compute_profile(const std::vector<MeasureVector>& real,
                                          const std::vector<MeasureVector>& fake,
                                          double delta = kDefaultThreshold) {
  if (real.empty() || fake.empty()) throw EmptyCorpus("compute_profile: empty corpus");

  CalibrationProfile profile;
  profile.threshold = delta;

  profile.real_means = Vec5::Zero();
  for (const auto& v : real) profile.real_means += v;
  profile.real_means /= static_cast<double>(real.size());
  for (int i = 0; i < 5; ++i)
    if (!(profile.real_means[i] > 0))
      throw ZeroRealMean(std::string("compute_profile: real mean of ") +
                         std::string(kMeasureNames[static_cast<std::size_t>(i)]) +
                         " is not positive");

  profile.fake_calibrated_means = Vec5::Zero();
  for (const auto& v : fake)
    profile.fake_calibrated_means +=
        detail::calibrated_components(v, profile.real_means, profile.inversion_mask);
  profile.fake_calibrated_means /= static_cast<double>(fake.size());
  profile.weights = profile.fake_calibrated_means.cwiseInverse();

  profile.ordering = select_ordering(correlation_matrix(real));
  return profile;
}

// Raw measures -> pentagon radii: normalize, invert masked components,
// re-scale by the profile weights, clamp, and emit in slot order.
inline RadiiVector calibrate_vector(const MeasureVector& v, const CalibrationProfile& profile) {
  const Vec5 calibrated = detail::calibrated_components(v, profile.real_means,
                                                        profile.inversion_mask);
  RadiiVector radii;
  for (int k = 0; k < 5; ++k) {
    const int m = profile.ordering.slots[static_cast<std::size_t>(k)];
    radii[k] = std::clamp(calibrated[m] * profile.weights[m], 0.0, profile.radius_clamp);
  }
  return radii;
}

}  // namespace irs
