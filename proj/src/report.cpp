#include "irs/report.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>

#include "irs/errors.hpp"

namespace irs {
namespace {

using nlohmann::json;

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Label label_from_name(const std::string& name) {
  if (name == "Real") return Label::Real;
  if (name == "Fake") return Label::Fake;
  if (name == "Unlabeled") return Label::Unlabeled;
  throw Error("report: unknown label '" + name + "'");
}

json record_to_json(const ScoreRecord& rec) {
  json j;
  j["path"] = rec.path;
  j["label"] = label_name(rec.label);
  j["ok"] = rec.ok;
  if (!rec.ok) {
    j["error"] = rec.error;
    return j;
  }
  json measures = json::object();
  for (int i = 0; i < 5; ++i)
    measures[std::string(kMeasureNames[static_cast<std::size_t>(i)])] = rec.measures[i];
  j["measures"] = measures;
  json radii = json::array();
  for (int k = 0; k < 5; ++k) radii.push_back(rec.radii[k]);
  j["radii"] = radii;
  j["irs"] = rec.irs;
  j["verdict"] = label_name(rec.verdict);
  return j;
}

ScoreRecord record_from_json(const json& j) {
  ScoreRecord rec;
  rec.path = j.at("path").get<std::string>();
  rec.label = label_from_name(j.at("label").get<std::string>());
  rec.ok = j.at("ok").get<bool>();
  if (!rec.ok) {
    rec.error = j.value("error", std::string{});
    return rec;
  }
  const json& measures = j.at("measures");
  for (int i = 0; i < 5; ++i)
    rec.measures[i] = measures.at(std::string(kMeasureNames[static_cast<std::size_t>(i)])).get<double>();
  const json& radii = j.at("radii");
  if (!radii.is_array() || radii.size() != 5) throw Error("report: radii must have 5 entries");
  for (int k = 0; k < 5; ++k) rec.radii[k] = radii[static_cast<std::size_t>(k)].get<double>();
  rec.irs = j.at("irs").get<double>();
  rec.verdict = label_from_name(j.at("verdict").get<std::string>());
  return rec;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string report_csv(const std::vector<ScoreRecord>& records) {
  std::string out = "path,glcm_contrast,glcm_energy,ced,vbm,ms,r1,r2,r3,r4,r5,irs,verdict\n";
  for (const auto& rec : records) {
    if (!rec.ok) continue;
    out += csv_escape(rec.path);
    for (int i = 0; i < 5; ++i) out += "," + format_double(rec.measures[i]);
    for (int k = 0; k < 5; ++k) out += "," + format_double(rec.radii[k]);
    out += "," + format_double(rec.irs);
    out += ",";
    out += label_name(rec.verdict);
    out += "\n";
  }
  return out;
}

std::string report_json(const std::vector<ScoreRecord>& records) {
  json arr = json::array();
  for (const auto& rec : records) arr.push_back(record_to_json(rec));
  return arr.dump(2) + "\n";
}

std::string record_json(const ScoreRecord& record) {
  return record_to_json(record).dump(2) + "\n";
}

std::vector<ScoreRecord> parse_report_json(const std::string& text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("report: invalid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw Error("report: expected a JSON array of records");
  std::vector<ScoreRecord> records;
  records.reserve(arr.size());
  for (const auto& j : arr) records.push_back(record_from_json(j));
  return records;
}

void write_report(const std::vector<ScoreRecord>& records, const std::filesystem::path& path,
                  ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_report: cannot open " + path.string());
  out << (format == ReportFormat::Csv ? report_csv(records) : report_json(records));
  if (!out) throw IoError("write_report: write failure on " + path.string());
}

std::string eval_summary_json(const EvalSummary& s) {
  json j;
  j["tp"] = s.tp;
  j["fp"] = s.fp;
  j["tn"] = s.tn;
  j["fn"] = s.fn;
  j["accuracy"] = s.accuracy;
  j["precision"] = s.precision ? json(*s.precision) : json(nullptr);
  j["recall"] = s.recall ? json(*s.recall) : json(nullptr);
  j["f1"] = s.f1 ? json(*s.f1) : json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace irs
