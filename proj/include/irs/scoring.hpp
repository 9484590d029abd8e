#pragma once

#include <array>
#include <cmath>

#include "irs/calibration.hpp"
#include "irs/errors.hpp"
#include "irs/types.hpp"

namespace irs {

enum class Label { Unlabeled, Real, Fake };

inline const char* label_name(Label l) {
  switch (l) {
    case Label::Real: return "Real";
    case Label::Fake: return "Fake";
    default: return "Unlabeled";
  }
}

struct IrsScore {
  double value = 0.0;
  RadiiVector radii = RadiiVector::Zero();
  std::array<double, 5> triangle_areas{};  // value is their sum
};

struct Verdict {
  Label label = Label::Unlabeled;
  IrsScore score;
  double threshold = 0.0;
};

// sin(72 degrees), the pentagon's central-angle sine.
inline const double kSinCentralAngle = std::sin(2.0 * 3.14159265358979323846 / 5.0);

// Area of the pentagon with the given radii: five adjacent-pair triangles
// of (m_a * m_b / 2) sin(72deg) each.
inline IrsScore pentagon_area(const RadiiVector& radii) {
  IrsScore score;
  score.radii = radii;
  for (int k = 0; k < 5; ++k) {
    const double a = radii[k], b = radii[(k + 1) % 5];
    if (!std::isfinite(a)) throw NonFiniteRadius("pentagon_area: non-finite radius");
    if (a < 0) throw NegativeRadius("pentagon_area: negative radius");
    score.triangle_areas[static_cast<std::size_t>(k)] = 0.5 * a * b * kSinCentralAngle;
    score.value += score.triangle_areas[static_cast<std::size_t>(k)];
  }
  return score;
}

// IRS of a raw measure vector. Weights are folded into the radii before the
// area computation; per-triangle weighting w_a*w_b*A(m_a,m_b) equals
// A(w_a*m_a, w_b*m_b), so the two formulations agree exactly.
inline IrsScore irs_score(const MeasureVector& v, const CalibrationProfile& profile) {
  return pentagon_area(calibrate_vector(v, profile));
}

// Fake iff value < delta; the boundary value classifies as Real.
inline Verdict classify(const IrsScore& score, double delta) {
  if (!(delta > 0)) throw InvalidThreshold("classify: threshold must be > 0");
  Verdict v;
  v.score = score;
  v.threshold = delta;
  v.label = score.value < delta ? Label::Fake : Label::Real;
  return v;
}

}  // namespace irs
