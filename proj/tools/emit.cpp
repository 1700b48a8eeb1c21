#include "emit.hpp"

#include <sstream>
#include <utility>

namespace cli {

Emitter::Emitter(std::string format, Json config, std::vector<std::string> columns)
    : format_(std::move(format)), config_(std::move(config)), columns_(std::move(columns)) {}

void Emitter::add(const Json& record) { records_.push_back(record); }

void Emitter::count_status(const std::string& status) {
  if (status == "PASS") ++passed_;
  else if (status == "FAIL") ++failed_;
  else ++skipped_;
}

std::string csv_cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  std::ostringstream os;
  if (value.is_number_float()) {
    os.precision(17);
    os << value.get<double>();
  } else {
    os << value;
  }
  return os.str();
}

int Emitter::write(std::ostream& os) const {
  if (format_ == "json") {
    Json out;
    out["config"] = config_;
    out["records"] = records_;
    out["summary"] = Json{{"passed", passed_}, {"failed", failed_}, {"skipped", skipped_}};
    os << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0) os << ",";
      os << columns_[i];
    }
    os << "\n";
    for (const auto& record : records_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i > 0) os << ",";
        os << csv_cell(record.contains(columns_[i]) ? record[columns_[i]] : Json());
      }
      os << "\n";
    }
  }
  return failed_ == 0 ? 0 : 1;
}

}  // namespace cli
