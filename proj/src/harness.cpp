#include "irs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <thread>

#include "irs/decode.hpp"
#include "irs/errors.hpp"
#include "irs/imgproc.hpp"
#include "irs/measures.hpp"

namespace irs {
namespace {

bool has_supported_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

// Runs fn(i) for i in [0, n) on `workers` threads. Results must be written
// to pre-sized slots so output order is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

GrayImage load_standardized(const std::string& path) {
  return standardize(to_grayscale(load_image(path)));
}

}  // namespace

Corpus ingest_corpus(const std::filesystem::path& dir, Label label, std::string source_tag) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec) || ec)
    throw IoError("ingest_corpus: not a directory: " + dir.string());

  Corpus corpus;
  corpus.source_tag = std::move(source_tag);
  for (auto it = std::filesystem::recursive_directory_iterator(
           dir, std::filesystem::directory_options::skip_permission_denied, ec);
       it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) throw IoError("ingest_corpus: " + ec.message());
    if (!it->is_regular_file(ec) || ec) continue;
    if (has_supported_extension(it->path()))
      corpus.entries.push_back({it->path().string(), label});
    else
      ++corpus.skipped_files;
  }
  if (corpus.entries.empty()) throw NoImagesFound("ingest_corpus: no images under " + dir.string());
  std::sort(corpus.entries.begin(), corpus.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.path < b.path; });
  return corpus;
}

std::vector<MeasureRecord> measure_corpus(const Corpus& corpus, int workers) {
  std::vector<MeasureRecord> records(corpus.entries.size());
  parallel_for(corpus.entries.size(), workers, [&](std::size_t i) {
    MeasureRecord& rec = records[i];
    rec.path = corpus.entries[i].path;
    rec.label = corpus.entries[i].label;
    try {
      rec.measures = measure_vector(load_standardized(rec.path));
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
  });
  return records;
}

std::vector<ScoreRecord> score_corpus(const Corpus& corpus, const CalibrationProfile& profile,
                                      int workers) {
  const auto measured = measure_corpus(corpus, workers);
  std::vector<ScoreRecord> records(measured.size());
  for (std::size_t i = 0; i < measured.size(); ++i) {
    ScoreRecord& rec = records[i];
    rec.path = measured[i].path;
    rec.label = measured[i].label;
    rec.ok = measured[i].ok;
    rec.error = measured[i].error;
    if (!rec.ok) continue;
    rec.measures = measured[i].measures;
    const IrsScore score = irs_score(rec.measures, profile);
    rec.radii = score.radii;
    rec.irs = score.value;
    rec.verdict = classify(score, profile.threshold).label;
  }
  return records;
}

EvalSummary detection_metrics(const std::vector<ScoreRecord>& records) {
  EvalSummary s;
  long total = 0;
  for (const auto& rec : records) {
    if (!rec.ok) continue;
    if (rec.label != Label::Real && rec.label != Label::Fake)
      throw Error("detection_metrics: unlabeled record " + rec.path);
    const bool truth_fake = rec.label == Label::Fake;
    const bool predicted_fake = rec.verdict == Label::Fake;
    if (truth_fake && predicted_fake) ++s.tp;
    else if (!truth_fake && predicted_fake) ++s.fp;
    else if (!truth_fake && !predicted_fake) ++s.tn;
    else ++s.fn;
    ++total;
  }
  if (total == 0) throw EmptyCorpus("detection_metrics: no scored records");
  s.accuracy = static_cast<double>(s.tp + s.tn) / static_cast<double>(total);
  if (s.tp + s.fp > 0) s.precision = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fp);
  if (s.tp + s.fn > 0) s.recall = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fn);
  if (s.precision && s.recall && *s.precision + *s.recall > 0)
    s.f1 = 2.0 * *s.precision * *s.recall / (*s.precision + *s.recall);
  return s;
}

std::vector<ModelBenchmark> benchmark_models(const std::vector<Corpus>& corpora,
                                             const CalibrationProfile& profile, int workers) {
  if (corpora.empty()) throw EmptyCorpus("benchmark_models: no corpora");
  std::vector<ModelBenchmark> table;
  for (const Corpus& corpus : corpora) {
    const auto records = score_corpus(corpus, profile, workers);
    ModelBenchmark row;
    row.source_tag = corpus.source_tag;
    double sum = 0, sumsq = 0;
    for (const auto& rec : records) {
      if (!rec.ok) continue;
      sum += rec.irs;
      sumsq += rec.irs * rec.irs;
      ++row.count;
    }
    if (row.count == 0) throw EmptyCorpus("benchmark_models: no scorable images in " + corpus.source_tag);
    row.mean_irs = sum / static_cast<double>(row.count);
    const double var = std::max(0.0, sumsq / static_cast<double>(row.count) - row.mean_irs * row.mean_irs);
    row.stddev_irs = std::sqrt(var);
    table.push_back(row);
  }
  std::stable_sort(table.begin(), table.end(),
                   [](const ModelBenchmark& a, const ModelBenchmark& b) {
                     return a.mean_irs > b.mean_irs;
                   });
  return table;
}

std::vector<OrderingFrequency> ordering_frequency(const std::vector<MeasureVector>& samples,
                                                  const CalibrationProfile& profile) {
  if (samples.empty()) throw EmptyCorpus("ordering_frequency: no samples");
  const auto orders = enumerate_cyclic_orders();

  std::vector<OrderingFrequency> out(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) out[i].ordering = orders[i];

  for (const MeasureVector& v : samples) {
    // Per-measure calibrated radii, independent of slot assignment.
    CalibrationProfile identity_order = profile;
    identity_order.ordering = Ordering{};
    const RadiiVector radii = calibrate_vector(v, identity_order);

    std::array<double, 12> areas{};
    double max_area = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      double sum = 0;
      for (int k = 0; k < 5; ++k)
        sum += radii[orders[i].slots[static_cast<std::size_t>(k)]] *
               radii[orders[i].slots[static_cast<std::size_t>((k + 1) % 5)]];
      areas[i] = sum;  // common factor sin(72)/2 dropped; argmax unchanged
      max_area = std::max(max_area, sum);
    }
    const double tie_eps = 1e-12 * std::max(max_area, 1.0);
    std::size_t ties = 0;
    for (double a : areas)
      if (max_area - a <= tie_eps) ++ties;
    for (std::size_t i = 0; i < orders.size(); ++i)
      if (max_area - areas[i] <= tie_eps)
        out[i].frequency += 1.0 / (static_cast<double>(ties) * static_cast<double>(samples.size()));
  }
  return out;
}

RotationReport rotation_check(const Corpus& corpus, const CalibrationProfile& profile,
                              int workers) {
  RotationReport report;
  std::vector<double> deviation(corpus.entries.size(), -1.0);
  parallel_for(corpus.entries.size(), workers, [&](std::size_t i) {
    try {
      const GrayImage base = load_standardized(corpus.entries[i].path);
      const double irs0 = irs_score(measure_vector(base), profile).value;
      double worst = 0;
      for (int k = 1; k <= 3; ++k) {
        const double irsk = irs_score(measure_vector(rotate90(base, k)), profile).value;
        worst = std::max(worst, std::abs(irsk - irs0) / std::max(std::abs(irs0), 1e-12));
      }
      deviation[i] = worst;
    } catch (const std::exception&) {
      deviation[i] = -1.0;
    }
  });
  double sum = 0;
  for (double d : deviation) {
    if (d < 0) {
      ++report.failures;
      continue;
    }
    report.max_relative_deviation = std::max(report.max_relative_deviation, d);
    sum += d;
    ++report.images;
  }
  if (report.images > 0) report.mean_relative_deviation = sum / static_cast<double>(report.images);
  return report;
}

}  // namespace irs
