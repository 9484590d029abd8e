#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "irs/harness.hpp"

namespace irs {

enum class ReportFormat { Csv, Json };

// CSV columns: path, glcm_contrast, glcm_energy, ced, vbm, ms, r1..r5, irs,
// verdict. Records that failed to score are omitted (the schema has no error
// column); they stay visible in the JSON form.
std::string report_csv(const std::vector<ScoreRecord>& records);

// JSON array mirroring ScoreRecord, including failed records.
std::string report_json(const std::vector<ScoreRecord>& records);

// Single record as one JSON object.
std::string record_json(const ScoreRecord& record);

std::vector<ScoreRecord> parse_report_json(const std::string& text);

void write_report(const std::vector<ScoreRecord>& records, const std::filesystem::path& path,
                  ReportFormat format);

std::string eval_summary_json(const EvalSummary& summary);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace irs
