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
#ifndef CASIMIR_TOOLS_CSV_HPP_
#define CASIMIR_TOOLS_CSV_HPP_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace casimir::cli {

/// A computed value was NaN or infinite, or a numerical routine failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that reads back to the same double. Zero prints as "0"
/// whatever its sign; non-finite values print as "nan", "inf" or "-inf".
std::string format_number(double x);

using Cell = std::variant<double, std::string>;

/// Comment lines, one header row and data rows, rendered in insertion order.
class CsvDocument {
 public:
  void comment(const std::string& line);
  void set_columns(std::vector<std::string> columns);
  /// Throws std::logic_error if the width does not match the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Throws NumericalError naming the row and column of the first non-finite number.
  std::string render() const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace casimir::cli

#endif  // CASIMIR_TOOLS_CSV_HPP_
