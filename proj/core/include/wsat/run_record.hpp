#pragma once

// Line-delimited run records: one JSON object per completed command or
// search level, appended to a results log so long searches can resume at
// the edge-count level.

#include <map>
#include <string>
#include <vector>

namespace wsat {

inline constexpr const char* kEngineVersion = "0.1.0";

struct RunRecord {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<std::string> outputs;
  double wall_time_s = 0.0;
  std::string engine_version = kEngineVersion;

  bool operator==(const RunRecord&) const = default;
};

std::string run_record_to_json(const RunRecord& r);
RunRecord run_record_from_json(const std::string& line);

// Parses a log file; unreadable files yield an empty list.
std::vector<RunRecord> read_run_records(const std::string& path);
void append_run_record(const std::string& path, const RunRecord& r);

}  // namespace wsat
