// irs — Image Realism Score toolkit.
//
// Exit codes: 0 success, 1 analysis failure (e.g. nothing scorable),
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "irs/calibration.hpp"
#include "irs/decode.hpp"
#include "irs/errors.hpp"
#include "irs/harness.hpp"
#include "irs/imgproc.hpp"
#include "irs/measures.hpp"
#include "irs/profile_io.hpp"
#include "irs/reference.hpp"
#include "irs/report.hpp"
#include "irs/scoring.hpp"
#include "irs/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

struct UsageError : irs::Error {
  using irs::Error::Error;
};

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// --profile flag beats the IRS_PROFILE environment variable beats the
// profile compiled into the binary.
irs::StoredProfile resolve_profile(const std::string& flag) {
  try {
    if (!flag.empty()) return irs::load_profile(flag);
    if (const char* env = std::getenv("IRS_PROFILE"); env && *env)
      return irs::load_profile(env);
    return irs::default_profile();
  } catch (const irs::Error& e) {
    throw UsageError(std::string("profile: ") + e.what());
  }
}

void apply_threshold_override(irs::CalibrationProfile& profile, double threshold) {
  if (threshold != 0.0) {
    if (!(threshold > 0)) throw UsageError("threshold override must be > 0");
    profile.threshold = threshold;
  }
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw irs::IoError("cannot open output file " + output_path);
  out << text;
  if (!out) throw irs::IoError("write failure on " + output_path);
}

irs::Corpus ingest_checked(const std::string& dir, irs::Label label,
                           const std::string& tag = {}) {
  if (!fs::exists(dir)) throw UsageError("no such directory: " + dir);
  if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);
  return irs::ingest_corpus(dir, label, tag);
}

std::vector<irs::MeasureVector> ok_measures(const std::vector<irs::MeasureRecord>& records,
                                            const std::string& what) {
  std::vector<irs::MeasureVector> out;
  for (const auto& rec : records) {
    if (rec.ok)
      out.push_back(rec.measures);
    else
      std::cerr << "irs: skipping " << rec.path << ": " << rec.error << "\n";
  }
  if (out.empty()) throw irs::EmptyCorpus("no scorable images in " + what);
  return out;
}

// ---------------------------------------------------------------------------
// score

struct ScoreOptions {
  std::vector<std::string> paths;
  std::string profile_path;
  double threshold = 0.0;
  bool csv = false;
  bool json = false;
  int workers = default_workers();
  std::string output;
};

int run_score(const ScoreOptions& opt) {
  irs::StoredProfile stored = resolve_profile(opt.profile_path);
  apply_threshold_override(stored.profile, opt.threshold);

  irs::Corpus corpus;
  for (const std::string& path : opt.paths) {
    if (!fs::exists(path)) throw UsageError("no such file: " + path);
    if (fs::is_directory(path)) {
      const irs::Corpus sub = irs::ingest_corpus(path, irs::Label::Unlabeled);
      corpus.entries.insert(corpus.entries.end(), sub.entries.begin(), sub.entries.end());
    } else {
      corpus.entries.push_back({path, irs::Label::Unlabeled});
    }
  }

  const auto records = irs::score_corpus(corpus, stored.profile, opt.workers);
  std::size_t scored = 0;
  for (const auto& rec : records) {
    if (rec.ok)
      ++scored;
    else
      std::cerr << "irs: " << rec.path << ": " << rec.error << "\n";
  }

  if (opt.csv)
    emit(irs::report_csv(records), opt.output);
  else if (records.size() == 1)
    emit(irs::record_json(records.front()), opt.output);
  else
    emit(irs::report_json(records), opt.output);
  return scored > 0 ? kExitOk : kExitAnalysis;
}

// ---------------------------------------------------------------------------
// calibrate

struct CalibrateOptions {
  std::string real_dir;
  std::string fake_dir;
  std::string output;
  double threshold = irs::kDefaultThreshold;
  int workers = default_workers();
};

void print_calibration_table(const irs::CalibrationProfile& profile,
                             const std::vector<irs::MeasureVector>& real_measures) {
  // Mean calibrated (normalized + inverted) real vector, before re-scaling.
  irs::Vec5 real_before = irs::Vec5::Zero();
  for (const auto& v : real_measures)
    real_before += irs::detail::calibrated_components(v, profile.real_means,
                                                      profile.inversion_mask);
  real_before /= static_cast<double>(real_measures.size());

  const irs::Vec5 fake_before = profile.fake_calibrated_means;
  const irs::Vec5 real_after = real_before.cwiseProduct(profile.weights);
  const irs::Vec5 fake_after = irs::Vec5::Ones();

  auto slot_radii = [&profile](const irs::Vec5& by_measure) {
    irs::RadiiVector r;
    for (int k = 0; k < 5; ++k) r[k] = by_measure[profile.ordering.slots[static_cast<std::size_t>(k)]];
    return r;
  };
  auto row = [&](const char* name, const irs::Vec5& v) {
    std::printf("%-12s", name);
    for (int i = 0; i < 5; ++i) std::printf("  %6.2f", v[i]);
    std::printf("  %6.2f\n", irs::pentagon_area(slot_radii(v)).value);
  };

  std::printf("%-12s", "Metrics");
  for (int i = 0; i < 5; ++i) std::printf("  %6s", std::string(irs::kMeasureLabels[static_cast<std::size_t>(i)]).c_str());
  std::printf("  %6s\n", "IRS");
  std::printf("Before calibration\n");
  row("  Real", real_before);
  row("  Fake", fake_before);
  std::printf("After calibration\n");
  row("  Real", real_after);
  row("  Fake", fake_after);
}

int run_calibrate(const CalibrateOptions& opt) {
  const irs::Corpus real_corpus = ingest_checked(opt.real_dir, irs::Label::Real);
  const irs::Corpus fake_corpus = ingest_checked(opt.fake_dir, irs::Label::Fake);

  const auto real = ok_measures(irs::measure_corpus(real_corpus, opt.workers), opt.real_dir);
  const auto fake = ok_measures(irs::measure_corpus(fake_corpus, opt.workers), opt.fake_dir);

  irs::StoredProfile stored;
  stored.profile = irs::compute_profile(real, fake, opt.threshold);
  stored.provenance = std::string("{\"tool\":\"irs calibrate\",\"real_corpus\":") +
                      nlohmann::json(opt.real_dir).dump() + ",\"fake_corpus\":" +
                      nlohmann::json(opt.fake_dir).dump() +
                      ",\"real_images\":" + std::to_string(real.size()) +
                      ",\"fake_images\":" + std::to_string(fake.size()) + "}";

  irs::save_profile(stored, opt.output);
  print_calibration_table(stored.profile, real);
  std::cerr << "irs: profile written to " << opt.output << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
  std::string real_dir;
  std::string fake_dir;
  std::string profile_path;
  double threshold = 0.0;
  bool table = false;
  int workers = default_workers();
  std::string output;
};

int run_evaluate(const EvaluateOptions& opt) {
  irs::StoredProfile stored = resolve_profile(opt.profile_path);
  apply_threshold_override(stored.profile, opt.threshold);

  const irs::Corpus real_corpus = ingest_checked(opt.real_dir, irs::Label::Real);
  const irs::Corpus fake_corpus = ingest_checked(opt.fake_dir, irs::Label::Fake);

  auto records = irs::score_corpus(real_corpus, stored.profile, opt.workers);
  const auto fake_records = irs::score_corpus(fake_corpus, stored.profile, opt.workers);
  records.insert(records.end(), fake_records.begin(), fake_records.end());
  for (const auto& rec : records)
    if (!rec.ok) std::cerr << "irs: skipping " << rec.path << ": " << rec.error << "\n";

  const irs::EvalSummary summary = irs::detection_metrics(records);
  if (opt.table) {
    auto value = [](const std::optional<double>& v) {
      return v ? std::to_string(*v).substr(0, 6) : std::string("n/a");
    };
    std::string text;
    text += "Metric      Value\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "Accuracy    %6.2f\n", summary.accuracy);
    text += buf;
    text += "F1 Score    " + value(summary.f1) + "\n";
    text += "Recall      " + value(summary.recall) + "\n";
    text += "Precision   " + value(summary.precision) + "\n";
    emit(text, opt.output);
  } else {
    emit(irs::eval_summary_json(summary), opt.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkOptions {
  std::vector<std::string> corpus_specs;  // TAG=DIR
  std::string profile_path;
  bool json = false;
  int workers = default_workers();
  std::string output;
};

int run_benchmark(const BenchmarkOptions& opt) {
  const irs::StoredProfile stored = resolve_profile(opt.profile_path);

  std::vector<irs::Corpus> corpora;
  for (const std::string& spec : opt.corpus_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
      throw UsageError("--corpus expects TAG=DIR, got '" + spec + "'");
    corpora.push_back(
        ingest_checked(spec.substr(eq + 1), irs::Label::Unlabeled, spec.substr(0, eq)));
  }

  const auto table = irs::benchmark_models(corpora, stored.profile, opt.workers);
  std::string text;
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table)
      arr.push_back({{"source_tag", row.source_tag},
                     {"mean_irs", row.mean_irs},
                     {"stddev_irs", row.stddev_irs},
                     {"count", row.count}});
    text = arr.dump(2) + "\n";
  } else {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-20s  %9s  %8s  %6s\n", "Model", "Mean IRS", "Std", "Count");
    text += buf;
    for (const auto& row : table) {
      std::snprintf(buf, sizeof buf, "%-20s  %9.3f  %8.3f  %6zu\n", row.source_tag.c_str(),
                    row.mean_irs, row.stddev_irs, row.count);
      text += buf;
    }
    text += "\nPublished reference means:";
    for (const auto& [name, mean] : irs::reference::model_means) {
      std::snprintf(buf, sizeof buf, " %s %.2f", std::string(name).c_str(), mean);
      text += buf;
    }
    text += "\n";
  }
  emit(text, opt.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// plot

struct PlotOptions {
  std::string input;
  std::string output;
  std::string compare_profile;
};

int run_plot(const PlotOptions& opt) {
  if (!fs::exists(opt.input)) throw UsageError("no such file: " + opt.input);
  std::ifstream in(opt.input, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto records = irs::parse_report_json(text);

  // Group by truth label when present, otherwise by verdict.
  bool labeled = false;
  for (const auto& rec : records)
    if (rec.ok && rec.label != irs::Label::Unlabeled) labeled = true;

  auto group_of = [labeled](const irs::ScoreRecord& rec) {
    return labeled ? rec.label : rec.verdict;
  };
  std::vector<irs::PentagonSeries> series;
  for (const irs::Label group : {irs::Label::Real, irs::Label::Fake}) {
    irs::Vec5 sum = irs::Vec5::Zero();
    std::size_t n = 0;
    for (const auto& rec : records) {
      if (!rec.ok || group_of(rec) != group) continue;
      sum += rec.radii;
      ++n;
    }
    if (n == 0) continue;
    series.push_back({std::string(irs::label_name(group)) + " mean (n=" + std::to_string(n) + ")",
                      sum / static_cast<double>(n),
                      group == irs::Label::Real ? "#1f77b4" : "#d62728"});
  }
  if (series.empty()) throw irs::EmptyCorpus("plot: no scored records in " + opt.input);

  irs::StoredProfile stored;
  if (!opt.compare_profile.empty()) {
    stored = resolve_profile(opt.compare_profile);
    series.push_back({"calibrated fake reference", irs::Vec5::Ones(), "#888888"});
  } else {
    stored = resolve_profile("");
  }

  std::array<std::string, 5> axis_labels;
  for (int k = 0; k < 5; ++k)
    axis_labels[static_cast<std::size_t>(k)] = std::string(
        irs::kMeasureLabels[static_cast<std::size_t>(
            stored.profile.ordering.slots[static_cast<std::size_t>(k)])]);

  emit(irs::render_pentagon_svg(series, axis_labels), opt.output);
  if (!opt.output.empty()) std::cerr << "irs: figure written to " << opt.output << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rotcheck

struct RotcheckOptions {
  std::string dir;
  std::string profile_path;
  int workers = default_workers();
  std::string output;
};

int run_rotcheck(const RotcheckOptions& opt) {
  const irs::StoredProfile stored = resolve_profile(opt.profile_path);
  const irs::Corpus corpus = ingest_checked(opt.dir, irs::Label::Unlabeled);
  const irs::RotationReport report = irs::rotation_check(corpus, stored.profile, opt.workers);

  nlohmann::json j;
  j["images"] = report.images;
  j["failures"] = report.failures;
  j["max_relative_deviation"] = report.max_relative_deviation;
  j["mean_relative_deviation"] = report.mean_relative_deviation;
  emit(j.dump(2) + "\n", opt.output);
  return report.images > 0 ? kExitOk : kExitAnalysis;
}

// ---------------------------------------------------------------------------
// selfcheck

int run_selfcheck() {
  int failures = 0;
  auto check = [&failures](bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s — %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) ++failures;
  };
  char buf[160];

  {
    const double area = irs::pentagon_area(irs::Vec5::Ones()).value;
    const double expected = 2.5 * irs::kSinCentralAngle;
    std::snprintf(buf, sizeof buf, "area=%.6f expected=%.6f", area, expected);
    check(std::abs(area - expected) < 1e-6 && std::abs(area - 2.377641) < 1e-5,
          "regular unit pentagon area", buf);
  }
  {
    auto slot_radii = [](const irs::Vec5& by_measure) {
      irs::RadiiVector r;
      for (int k = 0; k < 5; ++k)
        r[k] = by_measure[irs::reference::ordering.slots[static_cast<std::size_t>(k)]];
      return r;
    };
    const double fake_area =
        irs::pentagon_area(slot_radii(irs::reference::fake_calibrated_means)).value;
    std::snprintf(buf, sizeof buf, "area=%.4f published=%.2f", fake_area,
                  irs::reference::fake_irs_before_rescaling);
    check(std::abs(fake_area - 1.48) <= 0.03, "published fake row area, pre-rescaling", buf);

    const double real_area =
        irs::pentagon_area(slot_radii(irs::reference::real_rescaled_means)).value;
    std::snprintf(buf, sizeof buf, "area=%.4f published=%.2f", real_area,
                  irs::reference::real_irs_after_rescaling);
    check(std::abs(real_area - irs::reference::real_irs_after_rescaling) <= 0.10,
          "published real row IRS, post-rescaling", buf);
  }
  {
    const auto orders = irs::enumerate_cyclic_orders();
    bool distinct = true;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (!orders[i].is_canonical()) distinct = false;
      for (std::size_t j = i + 1; j < orders.size(); ++j)
        if (orders[i] == orders[j]) distinct = false;
    }
    check(distinct, "cyclic order enumeration", "12 canonical distinct cycles");
  }
  {
    const irs::Ordering selected = irs::select_ordering(irs::reference::correlation);
    const double sum = irs::adjacency_sum(selected, irs::reference::correlation);
    std::snprintf(buf, sizeof buf, "adjacency sum=%.4f expected=%.4f", sum,
                  irs::reference::ordering_adjacency_sum);
    check(selected == irs::reference::ordering && std::abs(sum - 1.03) < 1e-9,
          "ordering selection on reference correlations", buf);
  }
  {
    const bool boundary =
        irs::classify(irs::IrsScore{3.0, irs::Vec5::Ones(), {}}, 3.0).label == irs::Label::Real &&
        irs::classify(irs::IrsScore{2.38, irs::Vec5::Ones(), {}}, 3.0).label == irs::Label::Fake &&
        irs::classify(irs::IrsScore{4.68, irs::Vec5::Ones(), {}}, 3.0).label == irs::Label::Real;
    check(boundary, "threshold rule", "IRS<delta => Fake, boundary Real");
  }
  {
    bool ok = true;
    std::string detail = "weights invert fake means; ordering and threshold pinned";
    try {
      const irs::StoredProfile stored = irs::default_profile();
      const irs::Vec5 product =
          stored.profile.weights.cwiseProduct(stored.profile.fake_calibrated_means);
      ok = (product - irs::Vec5::Ones()).cwiseAbs().maxCoeff() < 1e-9 &&
           stored.profile.ordering == irs::reference::ordering &&
           stored.profile.threshold == 3.0;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "bundled profile consistency", detail);
  }
  {
    const irs::GrayImage half = irs::GrayImage::Constant(4, 4, 0.5);
    const auto q = irs::quantize(half, 8);
    const bool ok = q.values(0, 0) == 4 &&
                    irs::quantize(irs::GrayImage::Zero(2, 2), 8).values(0, 0) == 0 &&
                    irs::quantize(irs::GrayImage::Ones(2, 2), 8).values(0, 0) == 7;
    check(ok, "quantizer fixpoints", "0 -> 0, 0.5 -> 4, 1 -> 7 at 8 levels");
  }

  return failures == 0 ? kExitOk : kExitAnalysis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Image Realism Score (IRS) toolkit"};
  app.require_subcommand(1);

  ScoreOptions score_opt;
  CLI::App* score = app.add_subcommand("score", "Score images and classify real/fake");
  score->add_option("paths", score_opt.paths, "Image files or directories")->required();
  score->add_option("--profile", score_opt.profile_path, "Calibration profile JSON");
  score->add_option("--threshold", score_opt.threshold, "Override the decision threshold");
  auto* csv_flag = score->add_flag("--csv", score_opt.csv, "CSV report output");
  score->add_flag("--json", score_opt.json, "JSON output (default)")->excludes(csv_flag);
  score->add_option("--workers", score_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  score->add_option("-o,--output", score_opt.output, "Write output to file");

  CalibrateOptions cal_opt;
  CLI::App* calibrate = app.add_subcommand("calibrate", "Build a calibration profile");
  calibrate->add_option("--real", cal_opt.real_dir, "Directory of real images")->required();
  calibrate->add_option("--fake", cal_opt.fake_dir, "Directory of generated images")->required();
  calibrate->add_option("-o,--output", cal_opt.output, "Profile output path")->required();
  calibrate->add_option("--threshold", cal_opt.threshold, "Decision threshold stored in the profile");
  calibrate->add_option("--workers", cal_opt.workers, "Worker threads")->check(CLI::PositiveNumber);

  EvaluateOptions eval_opt;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Detection metrics on labeled corpora");
  evaluate->add_option("--real", eval_opt.real_dir, "Directory of real images")->required();
  evaluate->add_option("--fake", eval_opt.fake_dir, "Directory of generated images")->required();
  evaluate->add_option("--profile", eval_opt.profile_path, "Calibration profile JSON");
  evaluate->add_option("--threshold", eval_opt.threshold, "Override the decision threshold");
  evaluate->add_flag("--table", eval_opt.table, "Print a metric table instead of JSON");
  evaluate->add_option("--workers", eval_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  evaluate->add_option("-o,--output", eval_opt.output, "Write output to file");

  BenchmarkOptions bench_opt;
  CLI::App* benchmark = app.add_subcommand("benchmark", "Mean IRS per image source");
  benchmark->add_option("--corpus", bench_opt.corpus_specs, "TAG=DIR (repeatable)")->required();
  benchmark->add_option("--profile", bench_opt.profile_path, "Calibration profile JSON");
  benchmark->add_flag("--json", bench_opt.json, "JSON output");
  benchmark->add_option("--workers", bench_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  benchmark->add_option("-o,--output", bench_opt.output, "Write output to file");

  PlotOptions plot_opt;
  CLI::App* plot = app.add_subcommand("plot", "Render pentagon figures from a JSON report");
  plot->add_option("--input", plot_opt.input, "Report JSON from `irs score`")->required();
  plot->add_option("-o,--output", plot_opt.output, "SVG output path")->required();
  plot->add_option("--compare", plot_opt.compare_profile,
                   "Profile whose unit pentagon is overlaid for reference");

  RotcheckOptions rot_opt;
  CLI::App* rotcheck = app.add_subcommand("rotcheck", "Quarter-turn rotation invariance report");
  rotcheck->add_option("dir", rot_opt.dir, "Directory of images")->required();
  rotcheck->add_option("--profile", rot_opt.profile_path, "Calibration profile JSON");
  rotcheck->add_option("--workers", rot_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  rotcheck->add_option("-o,--output", rot_opt.output, "Write output to file");

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run embedded analytic fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*score) return run_score(score_opt);
    if (*calibrate) return run_calibrate(cal_opt);
    if (*evaluate) return run_evaluate(eval_opt);
    if (*benchmark) return run_benchmark(bench_opt);
    if (*plot) return run_plot(plot_opt);
    if (*rotcheck) return run_rotcheck(rot_opt);
    if (*selfcheck) return run_selfcheck();
  } catch (const UsageError& e) {
    std::cerr << "irs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "irs: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitUsage;
}
