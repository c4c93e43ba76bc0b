#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qbmm/instances.hpp"
#include "qbmm/mix.hpp"

using namespace qbmm;

TEST_CASE("random_instance density extremes") {
  const Instance zero = random_instance(10, 0.0, 0.7, 3);
  CHECK(zero.a.count_ones() == 0);
  CHECK(zero.ell_actual == 0);

  const Instance full = random_instance(6, 1.0, 1.0, 4);
  CHECK(full.ell_actual == 36);
}

TEST_CASE("random_instance reports the brute-force output count and reproduces") {
  const Instance one = random_instance(16, 0.1, 0.1, 7);
  CHECK(one.ell_actual == brute_force_product(one.a, one.b).count_ones());
  const Instance two = random_instance(16, 0.1, 0.1, 7);
  CHECK(format_matrix(one.a) == format_matrix(two.a));
  CHECK(format_matrix(one.b) == format_matrix(two.b));
  const Instance other = random_instance(16, 0.1, 0.1, 8);
  CHECK(format_matrix(one.a) != format_matrix(other.a));
}

TEST_CASE("instance_with_target_ell honors exact corners and the factor-2 window") {
  const Instance zero = instance_with_target_ell(12, 0, 5);
  CHECK(zero.ell_actual == 0);
  const Instance full = instance_with_target_ell(5, 25, 5);
  CHECK(full.ell_actual == 25);

  for (uint64_t seed = 0; seed < 25; ++seed) {
    const uint32_t n = 8 << (seed % 3);
    const uint64_t target = 1 + mix64(seed) % (static_cast<uint64_t>(n) * n / 2);
    const Instance inst = instance_with_target_ell(n, target, seed);
    CHECK(inst.ell_actual == brute_force_product(inst.a, inst.b).count_ones());
    if (inst.converged) {
      CHECK(inst.ell_actual >= target / 2);
      CHECK(inst.ell_actual <= 2 * target);
    }
  }

  const Instance mid = instance_with_target_ell(32, 64, 11);
  CHECK(mid.converged);
  CHECK(mid.ell_actual >= 32);
  CHECK(mid.ell_actual <= 128);
}

TEST_CASE("threshold_instance pins A to the identity and the output to f") {
  const Instance empty = threshold_instance(8, 0, 2);
  CHECK(empty.b.count_ones() == 0);
  CHECK(empty.ell_actual == 0);

  const Instance full = threshold_instance(4, 16, 2);
  CHECK(full.b.count_ones() == 16);

  const Instance mid = threshold_instance(16, 30, 1);
  CHECK(mid.a == BooleanMatrix::identity(16));
  CHECK(mid.b.count_ones() == 30);
  CHECK(brute_force_product(mid.a, mid.b).count_ones() == 30);
  CHECK(brute_force_product(mid.a, mid.b) == mid.b);
}

TEST_CASE("single_witness_instance maximizes the rectangle under the target") {
  const Instance one = single_witness_instance(16, 1, 3);
  CHECK(one.ell_actual == 1);
  CHECK(one.a.count_ones() == 1);
  CHECK(one.b.count_ones() == 1);

  const Instance full = single_witness_instance(8, 64, 3);
  CHECK(full.ell_actual == 64);

  const Instance mid = single_witness_instance(16, 50, 9);
  CHECK(mid.ell_actual == brute_force_product(mid.a, mid.b).count_ones());
  CHECK(mid.ell_actual <= 50);
  // Independent check: the best rectangle with sides at most 16 under 50.
  uint64_t best = 0;
  for (uint64_t rows = 1; rows <= 16; ++rows)
    best = std::max(best, rows * std::min<uint64_t>(16, 50 / rows));
  CHECK(mid.ell_actual == best);

  // Only column 1 of A and row 1 of B are populated.
  for (uint32_t i = 1; i <= 16; ++i)
    for (uint32_t j = 2; j <= 16; ++j) {
      CHECK(!mid.a.get(i, j));
      CHECK(!mid.b.get(j, i));
    }
}

TEST_CASE("dump_instance writes the documented file names in matrix format") {
  const auto dir = std::filesystem::temp_directory_path() / "qbmm_dump_test";
  std::filesystem::remove_all(dir);
  const Instance inst = random_instance(8, 0.5, 0.5, 21);
  dump_instance(dir.string(), "random", 8, 21, inst);
  const auto path_a = dir / "random_n8_seed21_A.txt";
  const auto path_b = dir / "random_n8_seed21_B.txt";
  REQUIRE(std::filesystem::exists(path_a));
  REQUIRE(std::filesystem::exists(path_b));
  CHECK(load_matrix(path_a.string()) == inst.a);
  CHECK(load_matrix(path_b.string()) == inst.b);
  std::filesystem::remove_all(dir);
}
