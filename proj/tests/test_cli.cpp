#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qbmm/bench.hpp"
#include "qbmm/boolean_matrix.hpp"
#include "qbmm/instances.hpp"

using namespace qbmm;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QBMM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "qbmm_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("multiply: identity input reproduces B byte for byte and exits 0") {
  const Instance inst = random_instance(8, 0.0, 0.4, 77);
  const std::string path_a = write_file("id8.txt", format_matrix(BooleanMatrix::identity(8)));
  const std::string path_b = write_file("b8.txt", format_matrix(inst.b));
  const RunResult res = run_cli("multiply " + path_a + " " + path_b + " --seed 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out == format_matrix(inst.b));

  const RunResult rerun = run_cli("multiply " + path_a + " " + path_b + " --seed 5");
  CHECK(rerun.out == res.out);
}

TEST_CASE("multiply: output matches a pre-dumped brute-force product file") {
  const Instance inst = random_instance(12, 0.3, 0.3, 31);
  const std::string path_a = write_file("a12.txt", format_matrix(inst.a));
  const std::string path_b = write_file("b12.txt", format_matrix(inst.b));
  const std::string expected = format_matrix(brute_force_product(inst.a, inst.b));
  const RunResult res = run_cli("multiply " + path_a + " " + path_b);
  CHECK(res.exit_code == 0);
  CHECK(res.out == expected);
}

TEST_CASE("multiply: malformed and mismatched inputs exit 2") {
  const std::string bad = write_file("bad.txt", "3\n101\n10\n111\n");
  const std::string good = write_file("good3.txt", format_matrix(BooleanMatrix::identity(3)));
  CHECK(run_cli("multiply " + bad + " " + good).exit_code == 2);
  const std::string other = write_file("good4.txt", format_matrix(BooleanMatrix::identity(4)));
  CHECK(run_cli("multiply " + good + " " + other).exit_code == 2);
  CHECK(run_cli("multiply " + good + " /nonexistent/file.txt").exit_code == 2);
}

TEST_CASE("gc: standalone instance prints the collision set") {
  BooleanMatrix c(3);
  c.set(1, 2, true);
  const std::string path_c = write_file("c3.txt", format_matrix(c));
  const std::string path_fa = write_file("fa3.txt", "110\n");
  const std::string path_fb = write_file("fb3.txt", "011\n");
  const RunResult res = run_cli("gc " + path_c + " " + path_fa + " " + path_fb);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "1 3\n2 2\n2 3\n");

  const RunResult exists = run_cli("gc --exists " + path_c + " " + path_fa + " " + path_fb);
  CHECK(exists.exit_code == 0);
  CHECK(exists.out.substr(0, 9) == "collision");

  const std::string path_none = write_file("fa0.txt", "000\n");
  const RunResult empty = run_cli("gc " + path_c + " " + path_none + " " + path_fb);
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "no collision\n");
}

TEST_CASE("bench: a single cell emits the header plus one row") {
  const auto csv_path = (scratch_dir() / "single.csv").string();
  const RunResult res =
      run_cli("bench --families random --n 8 --ell 8 --seeds 1 --out " + csv_path);
  CHECK(res.exit_code == 0);
  std::ifstream in(csv_path);
  std::string header, row, extra;
  REQUIRE(std::getline(in, header));
  CHECK(header == bench_csv_header());
  REQUIRE(std::getline(in, row));
  CHECK(!std::getline(in, extra));
}

TEST_CASE("bench then fit: constant-free power law passes on a real sweep") {
  const auto csv_path = (scratch_dir() / "fitme.csv").string();
  const RunResult bench = run_cli(
      "bench --families target-ell --n 16,32 --ell 8,64,256 --seeds 3 --jobs 2 --out " + csv_path);
  CHECK(bench.exit_code == 0);
  const RunResult fit = run_cli("fit " + csv_path + " --slope-min 0 --slope-max 99 --r2-min 0");
  CHECK(fit.exit_code == 0);
  CHECK(fit.out.find("slope=") != std::string::npos);
}

TEST_CASE("fit: degenerate design exits 2, missing file exits 2") {
  const std::string csv = write_file("degenerate.csv",
                                     bench_csv_header() +
                                         "\n8,random,0,forced,3,1,10,10,20,100.0,1,1,0.0,1.0\n"
                                         "8,random,1,forced,3,1,12,12,24,100.0,1,1,0.0,1.0\n");
  CHECK(run_cli("fit " + csv).exit_code == 2);
  CHECK(run_cli("fit /nonexistent.csv").exit_code == 2);
}

TEST_CASE("validate: unknown suite exits 2, tiny gc suite exits 0") {
  CHECK(run_cli("validate --suite nonsense").exit_code == 2);
  const RunResult res = run_cli("validate --suite gc --seeds 25");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("PASS") != std::string::npos);
}

TEST_CASE("bench --dump-dir writes instances under the documented names") {
  const auto dump = (scratch_dir() / "dumped").string();
  const auto csv_path = (scratch_dir() / "dump.csv").string();
  const RunResult res = run_cli("bench --families threshold --n 8 --ell 16 --seeds 1 --dump-dir " +
                                dump + " --out " + csv_path);
  CHECK(res.exit_code == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dump) / "threshold_n8_seed0_A.txt"));
  CHECK(std::filesystem::exists(std::filesystem::path(dump) / "threshold_n8_seed0_B.txt"));
}
