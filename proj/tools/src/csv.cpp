// Copyright 2026 The casimir-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace casimir::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // drop the sign of negative zero
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::logic_error("to_chars failed");
  return std::string(buf.data(), end);
}

void CsvDocument::comment(const std::string& line) { comments_.push_back(line); }

void CsvDocument::set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }

void CsvDocument::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("CSV row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvDocument::render() const {
  std::string out;
  for (const auto& c : comments_) out += "# " + c + "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
  out += "\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      if (i) out += ",";
      if (const double* x = std::get_if<double>(&rows_[r][i])) {
        if (!std::isfinite(*x)) {
          throw NumericalError("non-finite value in row " + std::to_string(r + 1) + ", column '" +
                               columns_[i] + "'");
        }
        out += format_number(*x);
      } else {
        out += std::get<std::string>(rows_[r][i]);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace casimir::cli
