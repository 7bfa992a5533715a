#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace phononet::csv {

// CSV file with a commented header block (resolved parameters, code version)
// followed by one header row and fixed-precision data rows. Deterministic:
// identical inputs produce byte-identical files.
class Writer {
 public:
  Writer(const std::string& path, const std::vector<std::string>& columns,
         const std::vector<std::pair<std::string, std::string>>& metadata,
         int precision = 12);

  void row(const std::vector<double>& values);
  // mixed rows (e.g. partition labels alongside values)
  void row_strings(const std::vector<std::string>& cells);

  const std::string& path() const { return path_; }

 private:
  std::ofstream out_;
  std::string path_;
  size_t n_columns_;
  int precision_;
};

std::string format_double(double v, int precision = 12);

}  // namespace phononet::csv
