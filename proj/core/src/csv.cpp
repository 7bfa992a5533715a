#include "phononet/csv.hpp"

#include <sstream>
#include <stdexcept>

#include "phononet/constants.hpp"

namespace phononet::csv {

std::string format_double(double v, int precision) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

Writer::Writer(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::pair<std::string, std::string>>& metadata,
               int precision)
    : out_(path), path_(path), n_columns_(columns.size()), precision_(precision) {
  if (!out_) throw std::runtime_error("csv: cannot open " + path);
  out_ << "# version = " << kVersion << "\n";
  for (const auto& [key, value] : metadata) out_ << "# " << key << " = " << value << "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void Writer::row(const std::vector<double>& values) {
  if (values.size() != n_columns_)
    throw std::invalid_argument("csv: row width mismatch in " + path_);
  for (size_t i = 0; i < values.size(); ++i)
    out_ << format_double(values[i], precision_) << (i + 1 < values.size() ? "," : "\n");
}

void Writer::row_strings(const std::vector<std::string>& cells) {
  if (cells.size() != n_columns_)
    throw std::invalid_argument("csv: row width mismatch in " + path_);
  for (size_t i = 0; i < cells.size(); ++i)
    out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

}  // namespace phononet::csv
