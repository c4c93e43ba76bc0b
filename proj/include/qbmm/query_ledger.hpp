#pragma once

#include <cstdint>

#include "qbmm/boolean_matrix.hpp"

namespace qbmm {

// Monotone counters of charged oracle reads. Every access to an entry of A
// or B that the algorithm pays for goes through read_a/read_b or an explicit
// bulk charge; nothing ever decrements.
class QueryLedger {
 public:
  uint64_t count_a() const { return count_a_; }
  uint64_t count_b() const { return count_b_; }
  uint64_t total() const { return count_a_ + count_b_; }

  bool charging() const { return charging_; }
  void set_charging(bool on) { charging_ = on; }

  void charge_a(uint64_t k = 1) {
    if (charging_) count_a_ += k;
  }
  void charge_b(uint64_t k = 1) {
    if (charging_) count_b_ += k;
  }

 private:
  uint64_t count_a_ = 0;
  uint64_t count_b_ = 0;
  bool charging_ = true;
};

// Charged oracle accesses, 1-based indices.
inline bool read_a(QueryLedger& ledger, const BooleanMatrix& a, uint32_t i, uint32_t j) {
  ledger.charge_a();
  return a.get(i, j);
}

inline bool read_b(QueryLedger& ledger, const BooleanMatrix& b, uint32_t k, uint32_t j) {
  ledger.charge_b();
  return b.get(k, j);
}

}  // namespace qbmm
