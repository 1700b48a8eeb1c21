#pragma once

// Output assembly for the CLI: CSV (header row then records) or a JSON
// object {config, records, summary}.  Exact values travel as decimal or
// "p/q" strings so they round-trip bit-exactly.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::json;

class Emitter {
 public:
  // columns fixes the CSV header and the per-record field order.
  Emitter(std::string format, Json config, std::vector<std::string> columns);

  // record must carry every column; values may be strings or numbers.
  void add(const Json& record);

  void count_status(const std::string& status);

  long failed() const { return failed_; }

  // Writes the assembled output; returns the process exit code
  // (0 unless a FAIL was counted).
  int write(std::ostream& os) const;

 private:
  std::string format_;
  Json config_;
  std::vector<std::string> columns_;
  Json records_ = Json::array();
  long passed_ = 0, failed_ = 0, skipped_ = 0;
};

std::string csv_cell(const Json& value);

}  // namespace cli
