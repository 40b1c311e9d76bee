#pragma once

#include <cstdint>

#include "pirebal/instance.hpp"
#include "pirebal/plan.hpp"

namespace pirebal {

struct OracleLimits {
  int64_t max_states = 1000000;
  int64_t grain = 0;  // 0 = gcd of the imbalances and the capacity
};

struct OracleResult {
  Plan plan;
  double cost = 0.0;
  int64_t grain = 0;
  int64_t expanded_states = 0;
};

/// Provably minimum-distance plan via uniform-cost search over
/// (position, load, residual imbalances), pickups and drops quantized to
/// the grain. Desk scale only; raises ResourceLimit past max_states.
OracleResult solve_exact(const Instance& instance, const OracleLimits& limits = {});

struct Comparison {
  double heuristic_cost = 0.0;
  double optimal_cost = 0.0;
  double ratio = 1.0;  // heuristic / optimal; 1 when both are zero
};

Comparison compare(const Instance& instance, const OracleLimits& limits = {});

}  // namespace pirebal
