#include "satlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace satlab {

std::string g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& values) {
  if (values.size() != columns_)
    throw std::runtime_error("csv row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << values[i];
  }
  out_ << '\n';
}

void write_text_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string divergence_csv(const std::vector<DivergenceRow>& rows) {
  CsvWriter csv({"t", "re_lambda", "im_lambda", "re_m", "im_m", "dist", "bound"});
  for (const DivergenceRow& r : rows) {
    csv.row({g17(r.t), g17(r.lambda_first.real()), g17(r.lambda_first.imag()),
             g17(r.lambda_second.real()), g17(r.lambda_second.imag()),
             g17(r.dist), g17(r.bound)});
  }
  return csv.str();
}

std::string limb_csv(const std::vector<LimbRecord>& records) {
  CsvWriter csv({"n", "inner_p", "inner_q", "re_root", "im_root",
                 "re_big_lambda", "im_big_lambda", "re_lower_bound",
                 "euclid_diam", "hyp_diam"});
  for (const LimbRecord& r : records) {
    csv.row({std::to_string(r.n), std::to_string(r.inner.p),
             std::to_string(r.inner.q), g17(r.lambda_root.real()),
             g17(r.lambda_root.imag()), g17(r.big_lambda_root.real()),
             g17(r.big_lambda_root.imag()), g17(r.re_lower_bound),
             g17(r.euclid_diam), g17(r.hyp_diam)});
  }
  return csv.str();
}

std::string corollary_csv(const std::vector<CorollaryRow>& rows) {
  CsvWriter csv({"n", "dist"});
  for (const CorollaryRow& r : rows)
    csv.row({std::to_string(r.n), g17(r.dist)});
  return csv.str();
}

}  // namespace satlab
