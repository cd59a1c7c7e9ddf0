#ifndef HOOKFOREST_VERIFY_HPP
#define HOOKFOREST_VERIFY_HPP

#include <string>
#include <vector>

#include "hookforest/json_io.hpp"

namespace hookforest {

// Sweep configuration for the identity checks. The sweep universe is every
// valid degree sequence with max degree and total vertex count below the
// bounds; max_n bounds the binary-tree identity checks.
struct VerifySweepConfig {
  long long max_total_vertices = 7;
  long long max_degree = 4;
  std::vector<long long> k_values{0, 1, 2};
  long long max_n = 5;
  std::vector<std::string> checks;  // empty = all

  static const std::vector<std::string>& all_checks();
};

struct CheckOutcome {
  std::string name;
  long long cells = 0;
  json failures = json::array();
  json values;  // check-specific payload (per-n values, psi case tally)

  bool ok() const { return failures.empty(); }
};

struct VerifyReport {
  VerifySweepConfig config;
  std::vector<CheckOutcome> checks;

  bool ok() const;
  json to_json() const;
};

// Runs the selected sweeps. Cells may run in parallel (bounded by the
// HOOKFOREST_THREADS environment variable); output order is deterministic.
VerifyReport run_verify(const VerifySweepConfig& config);

// Every valid degree sequence with the given bounds, in lexicographic order
// of the count vector.
std::vector<DegreeSequence> degree_sequence_universe(long long max_total_vertices,
                                                     long long max_degree);

}  // namespace hookforest

#endif
