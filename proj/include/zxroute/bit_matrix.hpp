// Copyright 2026 The zxroute authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zxroute {

/// Dense matrix over GF(2), row-major 64-bit blocks.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void xor_row(std::size_t target, std::size_t source);

  std::size_t row_weight(std::size_t r) const;
  /// Column index of the single 1 in row r, or nullopt.
  std::optional<std::size_t> singleton_column(std::size_t r) const;

  std::size_t rank() const;

  /// Gauss-Jordan elimination; returns the (target, source) row additions
  /// performed, in order.
  std::vector<std::pair<std::size_t, std::size_t>> eliminate();

  bool operator==(const BitMatrix& other) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> data_;
};

}  // namespace zxroute
