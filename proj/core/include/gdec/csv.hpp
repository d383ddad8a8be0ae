#pragma once

#include <span>
#include <string>
#include <vector>

namespace gdec {

/// CSV emission with the pinned dialect: comma separators, '.' decimal
/// point, scientific notation with 17 significant digits, LF line endings,
/// a single header row. Any non-finite value aborts the run with a
/// diagnostic naming the column.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> columns);
  ~CsvWriter();

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void write_row(std::span<const double> values);
  void close();

  static std::string format_value(double v);

 private:
  std::string path_;
  std::vector<std::string> columns_;
  std::string buffer_;
  bool closed_{false};
};

/// Output path resolution: explicit config value wins; otherwise
/// "<mode>.csv" inside GDEC_OUTPUT_DIR (or the working directory).
std::string resolve_output_path(const std::string& configured,
                                const std::string& default_name);

}  // namespace gdec
