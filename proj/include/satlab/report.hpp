#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "satlab/types.hpp"

namespace satlab {

// Shortest decimal round-trip representation (printf %.17g).
std::string g17(double value);

// Minimal comma-separated table with a fixed header. Values are emitted as
// given; numeric columns should be formatted with g17 by the caller.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<std::string>& values);
  std::string str() const { return out_.str(); }

 private:
  std::size_t columns_;
  std::ostringstream out_;
};

void write_text_file(const std::string& path, const std::string& data);

std::string divergence_csv(const std::vector<DivergenceRow>& rows);
std::string limb_csv(const std::vector<LimbRecord>& records);
std::string corollary_csv(const std::vector<CorollaryRow>& rows);

}  // namespace satlab
