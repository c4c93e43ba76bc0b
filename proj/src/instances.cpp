#include "qbmm/instances.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <stdexcept>

namespace qbmm {

namespace {

BooleanMatrix bernoulli_matrix(uint32_t n, double p, std::mt19937_64& rng) {
  BooleanMatrix m(n);
  std::bernoulli_distribution coin(p);
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j)
      if (coin(rng)) m.set(i, j, true);
  return m;
}

}  // namespace

Instance random_instance(uint32_t n, double p_a, double p_b, uint64_t seed) {
  if (p_a < 0.0 || p_a > 1.0 || p_b < 0.0 || p_b > 1.0)
    throw std::invalid_argument("random_instance: densities must lie in [0,1]");
  std::mt19937_64 rng(seed);
  BooleanMatrix a = bernoulli_matrix(n, p_a, rng);
  BooleanMatrix b = bernoulli_matrix(n, p_b, rng);
  const uint64_t ell = brute_force_product(a, b).count_ones();
  return {std::move(a), std::move(b), ell, true};
}

Instance instance_with_target_ell(uint32_t n, uint64_t target_ell, uint64_t seed) {
  const uint64_t full = static_cast<uint64_t>(n) * n;
  if (target_ell > full) throw std::invalid_argument("instance_with_target_ell: target exceeds n^2");
  if (target_ell == 0) return {BooleanMatrix(n), BooleanMatrix(n), 0, true};
  if (target_ell == full)
    return {BooleanMatrix::all_ones(n), BooleanMatrix::all_ones(n), full, true};

  const uint64_t lo_ok = target_ell / 2;
  const uint64_t hi_ok = 2 * target_ell;
  double lo = 0.0;
  double hi = 1.0;
  Instance best{BooleanMatrix(n), BooleanMatrix(n), 0, false};
  uint64_t best_gap = UINT64_MAX;
  for (int iter = 0; iter < 50; ++iter) {
    const double p = 0.5 * (lo + hi);
    Instance cand = random_instance(n, p, p, seed + static_cast<uint64_t>(iter) * 0x9e3779b97f4a7c15ULL);
    const uint64_t gap =
        cand.ell_actual > target_ell ? cand.ell_actual - target_ell : target_ell - cand.ell_actual;
    if (gap < best_gap) {
      best_gap = gap;
      best = cand;
    }
    if (cand.ell_actual >= lo_ok && cand.ell_actual <= hi_ok) {
      cand.converged = true;
      return cand;
    }
    if (cand.ell_actual < target_ell)
      lo = p;
    else
      hi = p;
  }
  best.converged = false;
  return best;
}

Instance threshold_instance(uint32_t n, uint64_t t_f, uint64_t seed) {
  const uint64_t full = static_cast<uint64_t>(n) * n;
  if (t_f > full) throw std::invalid_argument("threshold_instance: t_f exceeds n^2");
  std::mt19937_64 rng(seed);
  std::vector<uint64_t> cells(full);
  for (uint64_t c = 0; c < full; ++c) cells[c] = c;
  std::shuffle(cells.begin(), cells.end(), rng);
  BooleanMatrix b(n);
  for (uint64_t idx = 0; idx < t_f; ++idx) {
    const uint64_t c = cells[idx];
    b.set(static_cast<uint32_t>(c / n) + 1, static_cast<uint32_t>(c % n) + 1, true);
  }
  return {BooleanMatrix::identity(n), std::move(b), t_f, true};
}

Instance single_witness_instance(uint32_t n, uint64_t target_ell, uint64_t seed) {
  const uint64_t full = static_cast<uint64_t>(n) * n;
  if (target_ell > full) throw std::invalid_argument("single_witness_instance: target exceeds n^2");
  // Largest product of two ones-counts <= target.
  uint64_t best_a = 0, best_b = 0, best_prod = 0;
  for (uint64_t rows = 1; rows <= n; ++rows) {
    const uint64_t cols = std::min<uint64_t>(n, target_ell / rows);
    if (cols == 0) continue;
    if (rows * cols > best_prod) {
      best_prod = rows * cols;
      best_a = rows;
      best_b = cols;
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> idx(n);
  for (uint32_t i = 0; i < n; ++i) idx[i] = i + 1;
  BooleanMatrix a(n);
  BooleanMatrix b(n);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (uint64_t r = 0; r < best_a; ++r) a.set(idx[r], 1, true);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (uint64_t c = 0; c < best_b; ++c) b.set(1, idx[c], true);
  return {std::move(a), std::move(b), best_prod, true};
}

void dump_instance(const std::string& dir, const std::string& family, uint32_t n, uint64_t seed,
                   const Instance& inst) {
  const std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  const std::string stem = family + "_n" + std::to_string(n) + "_seed" + std::to_string(seed);
  save_matrix((base / (stem + "_A.txt")).string(), inst.a);
  save_matrix((base / (stem + "_B.txt")).string(), inst.b);
}

}  // namespace qbmm
