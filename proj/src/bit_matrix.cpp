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

#include "zxroute/bit_matrix.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace zxroute {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + 63) / 64),
      data_(rows * words_per_row_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& word = data_[r * words_per_row_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

void BitMatrix::xor_row(std::size_t target, std::size_t source) {
  if (target == source) {
    throw std::invalid_argument("row addition onto itself");
  }
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    data_[target * words_per_row_ + w] ^= data_[source * words_per_row_ + w];
  }
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t weight = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    weight += std::popcount(data_[r * words_per_row_ + w]);
  }
  return weight;
}

std::optional<std::size_t> BitMatrix::singleton_column(std::size_t r) const {
  if (row_weight(r) != 1) {
    return std::nullopt;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    if (get(r, c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !copy.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == rows_) {
      continue;
    }
    if (pivot != rank) {
      for (std::size_t w = 0; w < words_per_row_; ++w) {
        std::swap(copy.data_[pivot * words_per_row_ + w],
                  copy.data_[rank * words_per_row_ + w]);
      }
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && copy.get(r, c)) {
        copy.xor_row(r, rank);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::pair<std::size_t, std::size_t>> BitMatrix::eliminate() {
  std::vector<std::pair<std::size_t, std::size_t>> ops;
  std::vector<bool> used(rows_, false);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!used[r] && get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) {
      continue;
    }
    used[pivot] = true;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pivot && get(r, c)) {
        xor_row(r, pivot);
        ops.emplace_back(r, pivot);
      }
    }
  }
  return ops;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out += get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace zxroute
