#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddpc/digraph.hpp"
#include "ddpc/extremal.hpp"

namespace ddpc {

enum class CampaignMode { Exhaustive, Random };

struct CampaignConfig {
  std::string theorem;  // main1 | main2i | main2ii | 2t2 | main3 | main4
  CampaignMode mode = CampaignMode::Random;
  int n_min = 0, n_max = 0;
  int k_min = 1, k_max = 1;
  int samples = 300;  // per (n,k) cell in random mode
  std::uint64_t seed = 0;
  // Added to the theorem's degree threshold; negative values admit
  // below-hypothesis instances (judged by the oracle) and feed the known
  // extremal witnesses in, so the harness can demonstrably fail.
  int threshold_offset = 0;
  int exhaustive_order_cap = 5;
  std::uint64_t max_instances = 2'000'000;
  bool include_timings = false;
  int deletion_budget = -1;  // -1: 3*n*n arc-deletion attempts
  std::uint64_t oracle_order_cap = 12;
};

struct InstanceRecord {
  std::string key;
  nlohmann::ordered_json params;
  bool passed = true;
  std::string detail;
  double elapsed_ms = 0.0;
  nlohmann::ordered_json reproducer;  // digraph + spec JSON on failure
};

struct VerificationReport {
  nlohmann::ordered_json config_echo;
  std::vector<InstanceRecord> records;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  bool truncated = false;
  bool include_timings = false;

  nlohmann::ordered_json to_json() const;  // records sorted by key
  std::string to_string() const;
};

VerificationReport run_theorem_check(const CampaignConfig& config);

// Builds the witness, asserts the claimed degree quantity, refutes
// coverability with the oracle (when the order is within cap) and solves
// the theorem-side instance one step above the threshold.
VerificationReport run_sharpness_check(ExtremalFamily family, int a, int b,
                                       std::uint64_t oracle_order_cap = 12,
                                       bool include_timings = false);

// Dense random instances: start from the complete digraph, delete random
// arcs while the degree invariant holds.
Digraph sample_min_semi_degree(std::mt19937_64& rng, int n, int delta_min,
                               int budget = -1);
Digraph sample_ore_min(std::mt19937_64& rng, int n, int ore_req, int budget = -1);

}  // namespace ddpc
