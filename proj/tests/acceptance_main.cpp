// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Criterion 9 (byte-identical selftest
// reports) drives the installed CLI, whose path arrives as argv[1].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "metricgeo/selfcheck.hpp"
#include "metricgeo/serialization.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long run_timed(metricgeo::CriterionResult (*fn)(), metricgeo::CriterionResult& out) {
  auto start = Clock::now();
  out = fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

long run_timed_seeded(metricgeo::CriterionResult (*fn)(std::uint64_t), std::uint64_t seed,
                      metricgeo::CriterionResult& out) {
  auto start = Clock::now();
  out = fn(seed);
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void print_line(const metricgeo::CriterionResult& r, long ms) {
  std::printf("[%s] criterion %d: %s (%ld ms)\n", r.pass ? "PASS" : "FAIL", r.id,
              r.name.c_str(), ms);
  if (!r.pass) std::printf("        %s\n", r.details.c_str());
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string command = cli + " " + args + " 2>/dev/null";
  return std::system(command.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 20240815;
  bool all_pass = true;
  metricgeo::CriterionResult r;

  long ms1 = run_timed(metricgeo::check_generators, r);
  r.pass = r.pass && ms1 < 60000;
  print_line(r, ms1);
  all_pass &= r.pass;

  long ms2 = run_timed_seeded(metricgeo::check_thickness, seed, r);
  print_line(r, ms2);
  all_pass &= r.pass;

  long ms3 = run_timed(metricgeo::check_stegall_embeddings, r);
  r.pass = r.pass && ms3 < 120000;
  print_line(r, ms3);
  all_pass &= r.pass;

  long ms4 = run_timed(metricgeo::check_martingale_extraction, r);
  print_line(r, ms4);
  all_pass &= r.pass;

  long ms5 = run_timed_seeded(metricgeo::check_interval_and_branch, seed, r);
  print_line(r, ms5);
  all_pass &= r.pass;

  long ms6 = run_timed_seeded(metricgeo::check_partitions, seed, r);
  print_line(r, ms6);
  all_pass &= r.pass;

  long ms7 = run_timed(metricgeo::check_delta_trees, r);
  print_line(r, ms7);
  all_pass &= r.pass;

  long ms8 = run_timed_seeded(metricgeo::check_reflexivity, seed, r);
  print_line(r, ms8);
  all_pass &= r.pass;

  // Criterion 9: the selftest subcommand is byte-deterministic per seed.
  bool determinism = false;
  long ms9 = 0;
  if (argc > 1) {
    std::string cli = argv[1];
    std::string a = "/tmp/mgeo_selftest_a.json";
    std::string b = "/tmp/mgeo_selftest_b.json";
    auto start = Clock::now();
    int ra = run_cli(cli, "selftest --seed 7 --out " + a);
    int rb = run_cli(cli, "selftest --seed 7 --out " + b);
    ms9 = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (ra == 0 && rb == 0) {
      try {
        determinism = metricgeo::read_file(a) == metricgeo::read_file(b) &&
                      !metricgeo::read_file(a).empty();
      } catch (const std::exception&) {
        determinism = false;
      }
    }
    std::remove(a.c_str());
    std::remove(b.c_str());
  } else {
    std::printf("[FAIL] criterion 9: no CLI path supplied\n");
  }
  std::printf("[%s] criterion 9: selftest reports are byte-identical per seed (%ld ms)\n",
              determinism ? "PASS" : "FAIL", ms9);
  all_pass &= determinism;

  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass"
                               : "ACCEPTANCE: at least one criterion failed");
  return all_pass ? 0 : 1;
}
