#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irs/calibration.hpp"
#include "irs/scoring.hpp"
#include "irs/types.hpp"

namespace irs {

struct CorpusEntry {
  std::string path;
  Label label = Label::Unlabeled;
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // unique paths, sorted
  std::string source_tag;
  std::size_t skipped_files = 0;  // non-image files seen during ingest
};

// Recursively collects supported image files (PNG/JPEG/BMP by extension),
// sorted by path. Throws NoImagesFound if the directory holds none.
Corpus ingest_corpus(const std::filesystem::path& dir, Label label,
                     std::string source_tag = {});

struct MeasureRecord {
  std::string path;
  Label label = Label::Unlabeled;
  bool ok = false;
  std::string error;  // set when !ok
  MeasureVector measures = MeasureVector::Zero();
};

// Decodes, standardizes and measures every entry; entry order preserved.
std::vector<MeasureRecord> measure_corpus(const Corpus& corpus, int workers = 1);

struct ScoreRecord {
  std::string path;
  Label label = Label::Unlabeled;  // ground truth from the corpus
  bool ok = false;
  std::string error;  // set when !ok
  MeasureVector measures = MeasureVector::Zero();
  RadiiVector radii = RadiiVector::Zero();
  double irs = 0.0;
  Label verdict = Label::Unlabeled;
};

// Scores every entry; output order equals entry order regardless of worker
// count. Per-file failures produce records with ok == false.
std::vector<ScoreRecord> score_corpus(const Corpus& corpus, const CalibrationProfile& profile,
                                      int workers = 1);

// Confusion counts and derived metrics with Fake as the positive class.
// Metrics with a zero denominator are reported as absent, not as 0.
struct EvalSummary {
  long tp = 0, fp = 0, tn = 0, fn = 0;
  double accuracy = 0.0;
  std::optional<double> precision, recall, f1;
};

EvalSummary detection_metrics(const std::vector<ScoreRecord>& records);

struct ModelBenchmark {
  std::string source_tag;
  double mean_irs = 0.0;
  double stddev_irs = 0.0;  // population standard deviation
  std::size_t count = 0;
};

// Per-source mean IRS, sorted descending by mean.
std::vector<ModelBenchmark> benchmark_models(const std::vector<Corpus>& corpora,
                                             const CalibrationProfile& profile, int workers = 1);

struct OrderingFrequency {
  Ordering ordering;
  double frequency = 0.0;
};

// For each sample, evaluates the pentagon area under all 12 cyclic orders of
// its calibrated radii and tallies which ordering attains the maximum; ties
// split fractionally. Frequencies sum to 1.
std::vector<OrderingFrequency> ordering_frequency(const std::vector<MeasureVector>& samples,
                                                  const CalibrationProfile& profile);

struct RotationReport {
  double max_relative_deviation = 0.0;
  double mean_relative_deviation = 0.0;
  std::size_t images = 0;
  std::size_t failures = 0;
};

// IRS deviation between each standardized image and its quarter-turn
// rotations, over k in {1,2,3}.
RotationReport rotation_check(const Corpus& corpus, const CalibrationProfile& profile,
                              int workers = 1);

}  // namespace irs
