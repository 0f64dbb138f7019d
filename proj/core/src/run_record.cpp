#include "wsat/run_record.hpp"

#include <fstream>

#include <json.hpp>

namespace wsat {

std::string run_record_to_json(const RunRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["outputs"] = r.outputs;
  j["wall_time_s"] = r.wall_time_s;
  j["engine_version"] = r.engine_version;
  return j.dump();
}

RunRecord run_record_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.outputs = j.at("outputs").get<std::vector<std::string>>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.engine_version = j.at("engine_version").get<std::string>();
  return r;
}

std::vector<RunRecord> read_run_records(const std::string& path) {
  std::vector<RunRecord> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(run_record_from_json(line));
  }
  return out;
}

void append_run_record(const std::string& path, const RunRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open results log: " + path);
  out << run_record_to_json(r) << '\n';
}

}  // namespace wsat
