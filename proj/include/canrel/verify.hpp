#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace canrel {

/* Seeded property-verification harness.  Every library law is registered in
 * a named suite; each (law, trial) pair runs on its own deterministic seed,
 * so a failure record is enough to replay the exact counterexample. */
struct VerifyOptions {
  uint64_t trials = 100;
  uint64_t seed = 1;
  size_t max_dim = 16;    // ambient-dimension cap for generated objects
  bool extended = false;  // also exercise negative indices
};

struct VerifyFailure {
  std::string suite;
  std::string law;
  uint64_t trial = 0;
  uint64_t seed = 0;  // Rng seed reproducing the trial
  std::string counterexample;
};

struct VerifyReport {
  std::string suite;
  uint64_t trials = 0;
  std::vector<VerifyFailure> failures;  // sorted by (law, trial)
  std::vector<std::string> notes;       // observations that are not failures
  double elapsed_ms = 0;
};

std::vector<std::string> verify_suite_names();
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opt);

/* Rerun one law at one recorded seed.  Empty result = pass. */
std::string replay_law(const std::string& suite, const std::string& law,
                       uint64_t seed, const VerifyOptions& opt);

}  // namespace canrel
