#include "pirebal/verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace pirebal {

// Checks the same contract as simulate() but through different mechanics:
// load bounds from a prefix-sum trace, stock bounds from per-vertex
// timelines, final state from net flows. Kept free of any code shared with
// the simulator or the heuristic so the two can vouch for each other.
PlanReport verify_plan(const Instance& instance, const Plan& plan) {
  const Network& net = instance.network;
  PlanReport report;

  bool labels_ok = true;
  int start = net.find(plan.start);
  if (start < 0) {
    report.violations.push_back("unknown vertex \"" + plan.start + "\" as plan start");
    labels_ok = false;
  }
  std::vector<int> where(plan.steps.size(), -1);
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    where[i] = net.find(plan.steps[i].vertex);
    if (where[i] < 0) {
      report.violations.push_back("unknown vertex \"" + plan.steps[i].vertex + "\" at step " +
                                  std::to_string(i + 1));
      labels_ok = false;
    }
  }
  if (!labels_ok) {
    report.feasible = false;
    return report;
  }

  if (start != instance.start) {
    report.violations.push_back("plan starts at " + plan.start + " but the ship starts at " +
                                net.label(instance.start));
  }

  // Load bounds from the running sum of deltas.
  int64_t running = 0;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    running += plan.steps[i].delta;
    report.load_trace.push_back(running);
    if (running < 0) {
      report.violations.push_back("load underflow after step " + std::to_string(i + 1));
    } else if (running > instance.capacity) {
      report.violations.push_back("load overflow after step " + std::to_string(i + 1) + ": " +
                                  std::to_string(running) + " > capacity " +
                                  std::to_string(instance.capacity));
    }
  }
  int64_t carried_at_end = running;

  // Stock bounds per vertex, each on its own timeline.
  for (int v = 0; v < net.size(); ++v) {
    int64_t stock = instance.x[static_cast<size_t>(v)];
    for (size_t i = 0; i < plan.steps.size(); ++i) {
      if (where[i] != v) continue;
      stock -= plan.steps[i].delta;
      if (stock < 0) {
        report.violations.push_back("stock negative at " + net.label(v) + " after step " +
                                    std::to_string(i + 1));
        break;
      }
    }
  }

  // Final state from net flow, independent of the chronological checks.
  for (int v = 0; v < net.size(); ++v) {
    int64_t net_flow = 0;
    for (size_t i = 0; i < plan.steps.size(); ++i) {
      if (where[i] == v) net_flow += plan.steps[i].delta;
    }
    int64_t final_stock = instance.x[static_cast<size_t>(v)] - net_flow;
    report.final_state.emplace_back(net.label(v), final_stock);
    if (final_stock != instance.y[static_cast<size_t>(v)]) {
      report.violations.push_back("final stock at " + net.label(v) + " is " +
                                  std::to_string(final_stock) + ", target " +
                                  std::to_string(instance.y[static_cast<size_t>(v)]));
    }
  }
  if (carried_at_end != 0) {
    report.violations.push_back("ship still carries " + std::to_string(carried_at_end) +
                                " at the end");
  }

  int at = start;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    report.total_distance += net.dist(at, where[i]);
    at = where[i];
  }

  report.feasible = report.violations.empty();
  return report;
}

}  // namespace pirebal
