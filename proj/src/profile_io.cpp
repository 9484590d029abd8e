#include "irs/profile_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>

#include "irs/errors.hpp"

namespace irs {
namespace detail {
const char* embedded_default_profile_json();  // generated at build time
}

namespace {

using nlohmann::json;

json vec_to_json(const Vec5& v) {
  json out = json::object();
  for (int i = 0; i < 5; ++i) out[std::string(kMeasureNames[static_cast<std::size_t>(i)])] = v[i];
  return out;
}

Vec5 vec_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw ProfileFormatError("profile: " + field + " must be an object");
  Vec5 out;
  std::array<bool, 5> seen{};
  for (const auto& [key, value] : j.items()) {
    const int m = measure_from_name(key);
    if (m < 0) throw ProfileFormatError("profile: unknown measure '" + key + "' in " + field);
    if (!value.is_number()) throw ProfileFormatError("profile: " + field + "." + key + " must be a number");
    out[m] = value.get<double>();
    seen[static_cast<std::size_t>(m)] = true;
  }
  for (int i = 0; i < 5; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw ProfileFormatError("profile: " + field + " missing measure '" +
                               std::string(kMeasureNames[static_cast<std::size_t>(i)]) + "'");
  return out;
}

void validate(const CalibrationProfile& p) {
  if (p.version != "irs-profile/1")
    throw ProfileFormatError("profile: unsupported version '" + p.version + "'");
  for (int i = 0; i < 5; ++i) {
    if (!std::isfinite(p.real_means[i]) || !(p.real_means[i] > 0))
      throw ProfileFormatError("profile: real_means must be positive and finite");
    if (!std::isfinite(p.fake_calibrated_means[i]) || !(p.fake_calibrated_means[i] > 0))
      throw ProfileFormatError("profile: fake_calibrated_means must be positive and finite");
    if (std::abs(p.weights[i] * p.fake_calibrated_means[i] - 1.0) > 1e-9)
      throw ProfileFormatError("profile: weights must be reciprocals of fake_calibrated_means");
  }
  if (p.inversion_mask != std::array<bool, 5>{false, true, false, true, true})
    throw ProfileFormatError("profile: inverted_measures must be glcm_energy, vbm, ms");
  if (!p.ordering.is_canonical())
    throw ProfileFormatError("profile: ordering is not a canonical cycle");
  if (!(p.threshold > 0)) throw ProfileFormatError("profile: threshold must be > 0");
  if (!(p.radius_clamp > 0)) throw ProfileFormatError("profile: radius_clamp must be > 0");
}

}  // namespace

std::string profile_to_json(const StoredProfile& stored) {
  const CalibrationProfile& p = stored.profile;
  json j;
  j["version"] = p.version;
  j["real_means"] = vec_to_json(p.real_means);
  json inverted = json::array();
  for (int i = 0; i < 5; ++i)
    if (p.inversion_mask[static_cast<std::size_t>(i)])
      inverted.push_back(std::string(kMeasureNames[static_cast<std::size_t>(i)]));
  j["inverted_measures"] = inverted;
  j["fake_calibrated_means"] = vec_to_json(p.fake_calibrated_means);
  j["weights"] = vec_to_json(p.weights);
  json ordering = json::array();
  for (int slot : p.ordering.slots) ordering.push_back(std::string(kMeasureNames[static_cast<std::size_t>(slot)]));
  j["ordering"] = ordering;
  j["threshold"] = p.threshold;
  j["radius_clamp"] = p.radius_clamp;
  if (!stored.provenance.empty()) j["provenance"] = json::parse(stored.provenance);
  return j.dump(2) + "\n";
}

StoredProfile profile_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProfileFormatError(std::string("profile: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ProfileFormatError("profile: document must be a JSON object");

  static const std::set<std::string> known = {
      "version",  "real_means", "inverted_measures", "fake_calibrated_means",
      "weights",  "ordering",   "threshold",         "radius_clamp",
      "provenance"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) throw ProfileFormatError("profile: unknown field '" + key + "'");
  }
  static const std::set<std::string> required = {
      "version", "real_means", "inverted_measures", "fake_calibrated_means",
      "weights", "ordering",   "threshold",         "radius_clamp"};
  for (const auto& field : required)
    if (!j.contains(field)) throw ProfileFormatError("profile: missing field '" + field + "'");

  StoredProfile stored;
  CalibrationProfile& p = stored.profile;
  if (!j["version"].is_string()) throw ProfileFormatError("profile: version must be a string");
  p.version = j["version"].get<std::string>();
  p.real_means = vec_from_json(j["real_means"], "real_means");
  p.fake_calibrated_means = vec_from_json(j["fake_calibrated_means"], "fake_calibrated_means");
  p.weights = vec_from_json(j["weights"], "weights");

  if (!j["inverted_measures"].is_array())
    throw ProfileFormatError("profile: inverted_measures must be an array");
  p.inversion_mask = {};
  for (const auto& name : j["inverted_measures"]) {
    if (!name.is_string()) throw ProfileFormatError("profile: inverted_measures entries must be strings");
    const int m = measure_from_name(name.get<std::string>());
    if (m < 0) throw ProfileFormatError("profile: unknown measure in inverted_measures");
    p.inversion_mask[static_cast<std::size_t>(m)] = true;
  }

  if (!j["ordering"].is_array() || j["ordering"].size() != 5)
    throw ProfileFormatError("profile: ordering must list the five measures");
  for (int k = 0; k < 5; ++k) {
    const auto& name = j["ordering"][static_cast<std::size_t>(k)];
    if (!name.is_string()) throw ProfileFormatError("profile: ordering entries must be strings");
    const int m = measure_from_name(name.get<std::string>());
    if (m < 0) throw ProfileFormatError("profile: unknown measure in ordering");
    p.ordering.slots[static_cast<std::size_t>(k)] = m;
  }

  if (!j["threshold"].is_number()) throw ProfileFormatError("profile: threshold must be a number");
  p.threshold = j["threshold"].get<double>();
  if (!j["radius_clamp"].is_number())
    throw ProfileFormatError("profile: radius_clamp must be a number");
  p.radius_clamp = j["radius_clamp"].get<double>();

  if (j.contains("provenance")) stored.provenance = j["provenance"].dump();

  validate(p);
  return stored;
}

StoredProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingReferenceFile("load_profile: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("load_profile: read failure on " + path.string());
  return profile_from_json(text);
}

void save_profile(const StoredProfile& stored, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("save_profile: cannot open " + path.string());
  out << profile_to_json(stored);
  if (!out) throw IoError("save_profile: write failure on " + path.string());
}

StoredProfile default_profile() {
  return profile_from_json(detail::embedded_default_profile_json());
}

}  // namespace irs
