#include "qbmm/boolean_matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qbmm {

uint64_t BooleanMatrix::count_ones() const {
  uint64_t total = 0;
  for (uint64_t w : bits_) total += std::popcount(w);
  return total;
}

uint32_t BooleanMatrix::row_ones(uint32_t i) const {
  uint32_t total = 0;
  for (uint64_t w : row(i)) total += std::popcount(w);
  return total;
}

BooleanMatrix brute_force_product(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("brute_force_product: dimension mismatch");
  const uint32_t n = a.size();
  BooleanMatrix c(n);
  for (uint32_t i = 1; i <= n; ++i) {
    for (uint32_t k = 1; k <= n; ++k) {
      if (!a.get(i, k)) continue;
      for (uint32_t j = 1; j <= n; ++j) {
        if (b.get(k, j)) c.set(i, j, true);
      }
    }
  }
  return c;
}

uint64_t count_ones(const BooleanMatrix& m) { return m.count_ones(); }

std::string format_matrix(const BooleanMatrix& m) {
  std::string out = std::to_string(m.size());
  out.push_back('\n');
  for (uint32_t i = 1; i <= m.size(); ++i) {
    for (uint32_t j = 1; j <= m.size(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

BooleanMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("matrix parse: line 1: empty input");
  line = strip_cr(line);
  long n_signed = 0;
  try {
    size_t pos = 0;
    n_signed = std::stol(line, &pos);
    if (pos != line.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::runtime_error("matrix parse: line 1: expected the dimension n, got \"" + line + "\"");
  }
  if (n_signed < 1) throw std::runtime_error("matrix parse: line 1: n must be at least 1");
  const uint32_t n = static_cast<uint32_t>(n_signed);
  BooleanMatrix m(n);
  for (uint32_t i = 1; i <= n; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("matrix parse: line " + std::to_string(i + 1) + ": missing row " + std::to_string(i));
    line = strip_cr(line);
    if (line.size() != n)
      throw std::runtime_error("matrix parse: line " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                               " characters, got " + std::to_string(line.size()));
    for (uint32_t j = 1; j <= n; ++j) {
      const char c = line[j - 1];
      if (c != '0' && c != '1')
        throw std::runtime_error("matrix parse: line " + std::to_string(i + 1) + ": invalid character '" +
                                 std::string(1, c) + "'");
      if (c == '1') m.set(i, j, true);
    }
  }
  return m;
}

BooleanMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_matrix(const std::string& path, const BooleanMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_matrix(m);
}

std::vector<bool> parse_bit_line(const std::string& text, uint32_t expected_n) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  line = strip_cr(line);
  if (line.size() != expected_n)
    throw std::runtime_error("bit vector: expected " + std::to_string(expected_n) + " characters, got " +
                             std::to_string(line.size()));
  std::vector<bool> bits(expected_n);
  for (uint32_t i = 0; i < expected_n; ++i) {
    if (line[i] != '0' && line[i] != '1')
      throw std::runtime_error("bit vector: invalid character '" + std::string(1, line[i]) + "'");
    bits[i] = line[i] == '1';
  }
  return bits;
}

}  // namespace qbmm
