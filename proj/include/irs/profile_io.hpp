#pragma once

#include <filesystem>
#include <string>

#include "irs/calibration.hpp"

namespace irs {

// Optional free-form note carried alongside a profile on disk (corpus
// source, date, image count). Kept as raw JSON text of the "provenance"
// field; empty when absent.
struct StoredProfile {
  CalibrationProfile profile;
  std::string provenance;

  bool operator==(const StoredProfile&) const = default;
};

// Serialization of the versioned profile document ("irs-profile/1").
// Parsing is strict: unknown fields are rejected, all invariants checked.
std::string profile_to_json(const StoredProfile& stored);
StoredProfile profile_from_json(const std::string& text);

StoredProfile load_profile(const std::filesystem::path& path);
void save_profile(const StoredProfile& stored, const std::filesystem::path& path);

// The reference profile compiled into the library.
StoredProfile default_profile();

}  // namespace irs
