#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pirebal/instance.hpp"

namespace pirebal {

/// One action: positive delta picks up containers, negative drops them.
/// Travel between consecutive step vertices is implicit (shortest paths).
struct PlanStep {
  std::string vertex;
  int64_t delta = 0;
};

struct Plan {
  std::string start;
  std::vector<PlanStep> steps;
};

bool operator==(const PlanStep& a, const PlanStep& b);
bool operator==(const Plan& a, const Plan& b);

struct PlanReport {
  bool feasible = false;
  double total_distance = 0.0;
  std::vector<std::pair<std::string, int64_t>> final_state;  // network vertex order
  std::vector<int64_t> load_trace;
  std::vector<std::string> violations;
};

/// Replays the plan against the instance stocks. Records load trace,
/// per-vertex end state and every violation found.
PlanReport simulate(const Instance& instance, const Plan& plan);

/// Total traveled distance of the step sequence, start leg included.
double plan_cost(const Plan& plan, const Network& network);

Plan read_plan(const std::string& path);
Plan parse_plan_json(const std::string& text);
void write_plan(const Plan& plan, const std::string& path);
std::string plan_to_json(const Plan& plan);
std::string report_to_json(const PlanReport& report);

}  // namespace pirebal
