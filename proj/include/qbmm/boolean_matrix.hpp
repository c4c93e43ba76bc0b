#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qbmm {

// Square bit matrix over the Boolean semiring ({0,1}, OR, AND).
// Rows are packed into 64-bit words. The public contract is 1-based,
// matching the index set [n] used throughout the project.
class BooleanMatrix {
 public:
  explicit BooleanMatrix(uint32_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_per_row_, 0) {
    assert(n >= 1);
  }

  static BooleanMatrix identity(uint32_t n) {
    BooleanMatrix m(n);
    for (uint32_t i = 1; i <= n; ++i) m.set(i, i, true);
    return m;
  }

  static BooleanMatrix all_ones(uint32_t n) {
    BooleanMatrix m(n);
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = 1; j <= n; ++j) m.set(i, j, true);
    return m;
  }

  uint32_t size() const { return n_; }
  uint32_t words_per_row() const { return words_per_row_; }

  bool get(uint32_t i, uint32_t j) const {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
    const uint32_t c = j - 1;
    return (row_ptr(i)[c >> 6] >> (c & 63)) & 1u;
  }

  void set(uint32_t i, uint32_t j, bool v) {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
    const uint32_t c = j - 1;
    uint64_t& w = row_words(i)[c >> 6];
    const uint64_t mask = uint64_t{1} << (c & 63);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const uint64_t> row(uint32_t i) const {
    assert(i >= 1 && i <= n_);
    return {row_ptr(i), words_per_row_};
  }

  uint64_t count_ones() const;
  uint32_t row_ones(uint32_t i) const;

  bool operator==(const BooleanMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  const uint64_t* row_ptr(uint32_t i) const { return bits_.data() + static_cast<size_t>(i - 1) * words_per_row_; }
  uint64_t* row_words(uint32_t i) { return bits_.data() + static_cast<size_t>(i - 1) * words_per_row_; }

  uint32_t n_;
  uint32_t words_per_row_;
  std::vector<uint64_t> bits_;
};

// Ground-truth semiring product C[i,j] = OR_k A[i,k] AND B[k,j].
// Plain cubic evaluation over packed rows; charges no queries.
// Throws std::invalid_argument on dimension mismatch.
BooleanMatrix brute_force_product(const BooleanMatrix& a, const BooleanMatrix& b);

uint64_t count_ones(const BooleanMatrix& m);

// Text format: first line is n, then n lines of exactly n characters
// from {0,1}. Trailing newline optional.
std::string format_matrix(const BooleanMatrix& m);

// Throws std::runtime_error naming the offending line on malformed input.
BooleanMatrix parse_matrix(const std::string& text);

BooleanMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const BooleanMatrix& m);

// One line of n characters from {0,1}; used for graph-collision side inputs.
std::vector<bool> parse_bit_line(const std::string& text, uint32_t expected_n);

}  // namespace qbmm
