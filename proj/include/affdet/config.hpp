#pragma once

#include <cstdint>

namespace affdet {

// Process-wide knobs. The CLI fills this from flags and environment
// (AFFDET_THREADS, AFFDET_CONFIG); library code reads it through config().
// Worker count never changes results, only wall time.
struct Config {
  int threads = 0;          // 0 = one worker per hardware thread
  long oracle_cap = 128;    // max group order for the full regular-representation determinant
  long oracle_cap_max = 512;
  long symbolic_cap = 32;   // max q for character-evaluation determinants
  long orbit_cap = 1 << 14; // max q for cached companion-matrix powers
  std::uint64_t seed = 1;   // RNG seed for sampled checks
};

Config& config();

// apply AFFDET_CONFIG (JSON file) and AFFDET_THREADS overrides, in that order
void load_config_from_env(Config& cfg);

}  // namespace affdet
