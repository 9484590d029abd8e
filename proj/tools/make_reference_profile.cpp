// Regenerates data/default_profile.json. The bundled profile combines
// measured real-corpus means with the published re-scaling weights and
// pentagon ordering, so only the real_means depend on the local corpus.
//
// Usage: make_reference_profile <real-photo-dir> <output.json> [provenance.json]

#include <fstream>
#include <iostream>

#include "irs/harness.hpp"
#include "irs/profile_io.hpp"
#include "irs/reference.hpp"

int main(int argc, char** argv) {
  if (argc < 3 || argc > 4) {
    std::cerr << "usage: make_reference_profile <real-photo-dir> <output.json> [provenance.json]\n";
    return 2;
  }
  try {
    const irs::Corpus corpus = irs::ingest_corpus(argv[1], irs::Label::Real);
    const auto records = irs::measure_corpus(corpus, 8);

    irs::Vec5 means = irs::Vec5::Zero();
    std::size_t n = 0;
    for (const auto& rec : records) {
      if (!rec.ok) {
        std::cerr << "skipping " << rec.path << ": " << rec.error << "\n";
        continue;
      }
      means += rec.measures;
      ++n;
    }
    if (n == 0) {
      std::cerr << "no measurable images\n";
      return 1;
    }
    means /= static_cast<double>(n);

    irs::StoredProfile stored;
    stored.profile.real_means = means;
    stored.profile.fake_calibrated_means = irs::reference::fake_calibrated_means;
    stored.profile.weights = irs::reference::fake_calibrated_means.cwiseInverse();
    stored.profile.ordering = irs::reference::ordering;
    stored.profile.threshold = irs::kDefaultThreshold;
    stored.profile.radius_clamp = irs::kDefaultRadiusClamp;
    if (argc == 4) {
      std::ifstream in(argv[3]);
      stored.provenance.assign((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    }

    irs::save_profile(stored, argv[2]);
    std::cerr << "wrote " << argv[2] << " (real_means over " << n << " images)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "make_reference_profile: " << e.what() << "\n";
    return 1;
  }
}
