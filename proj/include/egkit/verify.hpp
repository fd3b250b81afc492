#pragma once

#include <string>
#include <vector>

#include "egkit/types.hpp"

namespace egkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

struct VerifyOptions {
  bool quick = false;  // reduced scale for fast iteration; desk is the gate
  int threads = 0;     // 0 = EGKIT_THREADS or hardware default
};

// Seed documented for the sampling criterion.
inline constexpr std::uint64_t kChiSquareSeed = 8675309;

int default_thread_count();
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

}  // namespace egkit
