#pragma once

#include "pirebal/plan.hpp"

namespace pirebal {

/// Independent feasibility checker with the same report contract as
/// simulate(). Deliberately shares no replay code with simulate() or the
/// heuristic; every problem is reported as a violation, never thrown.
PlanReport verify_plan(const Instance& instance, const Plan& plan);

}  // namespace pirebal
