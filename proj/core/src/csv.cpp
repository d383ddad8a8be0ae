#include "gdec/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace gdec {

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> columns)
    : path_(path), columns_(std::move(columns)) {
  if (columns_.empty())
    throw std::invalid_argument("CsvWriter: need at least one column");
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += columns_[i];
  }
  buffer_ += '\n';
}

CsvWriter::~CsvWriter() {
  try {
    close();
  } catch (...) {
    // destructor must not throw; an explicit close() surfaces errors
  }
}

std::string CsvWriter::format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void CsvWriter::write_row(std::span<const double> values) {
  if (closed_) throw std::logic_error("CsvWriter: writer already closed");
  if (values.size() != columns_.size())
    throw std::invalid_argument("CsvWriter: row width does not match header");
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw std::runtime_error("CsvWriter: non-finite value in column '" +
                               columns_[i] + "'");
    if (i) buffer_ += ',';
    buffer_ += format_value(values[i]);
  }
  buffer_ += '\n';
}

void CsvWriter::close() {
  if (closed_) return;
  closed_ = true;
  std::ofstream out(path_, std::ios::binary);
  if (!out) throw std::runtime_error("CsvWriter: cannot open '" + path_ + "'");
  out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  if (!out) throw std::runtime_error("CsvWriter: write failed for '" + path_ + "'");
}

std::string resolve_output_path(const std::string& configured,
                                const std::string& default_name) {
  std::string name = configured.empty() ? default_name : configured;
  if (!name.empty() && name.front() == '/') return name;
  if (const char* dir = std::getenv("GDEC_OUTPUT_DIR"); dir && *dir)
    return std::string(dir) + "/" + name;
  return name;
}

}  // namespace gdec
