#include "pirebal/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

#include "pirebal/heuristic.hpp"

namespace pirebal {

namespace {

// State = [position, load, residual...] in grain units. Residual at v is
// current stock minus target, so the goal is the all-zero residual vector.
using StateKey = std::vector<int32_t>;

struct StateKeyHash {
  size_t operator()(const StateKey& key) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int32_t v : key) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ParentLink {
  StateKey parent;
  int vertex = -1;
  int64_t delta_units = 0;
};

struct Frontier {
  double cost;
  StateKey key;
  bool operator>(const Frontier& other) const {
    if (cost != other.cost) return cost > other.cost;
    return key > other.key;  // lexicographic, keeps expansion order reproducible
  }
};

int64_t pick_grain(const Instance& instance, const std::vector<int64_t>& imbalances,
                   int64_t requested) {
  if (requested < 0) fail(ErrorKind::InvalidGrain, "grain must be positive");
  if (requested > 0) {
    for (size_t v = 0; v < imbalances.size(); ++v) {
      int64_t gap = std::abs(imbalances[v]);
      if (gap % requested != 0) {
        fail(ErrorKind::InvalidGrain, "grain " + std::to_string(requested) +
                                          " does not divide the imbalance " + std::to_string(gap) +
                                          " at " + instance.network.label(static_cast<int>(v)));
      }
    }
    return requested;
  }
  // Default: gcd of the imbalances and the capacity. Folding in the capacity
  // keeps the grain usable by the ship even when every imbalance is a larger
  // multiple of it.
  int64_t g = instance.capacity;
  for (int64_t gap : imbalances) g = std::gcd(g, std::abs(gap));
  return g;
}

}  // namespace

OracleResult solve_exact(const Instance& instance, const OracleLimits& limits) {
  if (limits.max_states < 1) {
    fail(ErrorKind::BadParameters, "max_states must be >= 1");
  }
  auto violations = validate_instance(instance);
  if (!violations.empty()) {
    std::string joined;
    for (const auto& v : violations) {
      if (!joined.empty()) joined += "; ";
      joined += v;
    }
    fail(ErrorKind::InvalidInstance, joined);
  }

  const Network& net = instance.network;
  const int n = net.size();

  std::vector<int64_t> imbalances(static_cast<size_t>(n));
  bool any = false;
  for (int v = 0; v < n; ++v) {
    auto sv = static_cast<size_t>(v);
    imbalances[sv] = instance.x[sv] - instance.y[sv];
    if (imbalances[sv] != 0) any = true;
  }

  OracleResult result;
  result.grain = pick_grain(instance, imbalances, limits.grain);
  result.plan.start = net.label(instance.start);
  if (!any) return result;  // already at the target state

  if (result.grain > instance.capacity) {
    fail(ErrorKind::InvalidGrain, "grain " + std::to_string(result.grain) +
                                      " exceeds the ship capacity " +
                                      std::to_string(instance.capacity));
  }
  const int64_t grain = result.grain;
  const auto cap_units = static_cast<int32_t>(instance.capacity / grain);

  // Stock at v may not drop below zero: residual_units >= -floor(y_v / grain).
  std::vector<int32_t> min_units(static_cast<size_t>(n));
  StateKey start_key(static_cast<size_t>(n) + 2, 0);
  start_key[0] = instance.start;
  start_key[1] = 0;
  for (int v = 0; v < n; ++v) {
    auto sv = static_cast<size_t>(v);
    min_units[sv] = static_cast<int32_t>(-(instance.y[sv] / grain));
    start_key[sv + 2] = static_cast<int32_t>(imbalances[sv] / grain);
  }

  std::unordered_map<StateKey, double, StateKeyHash> best;
  std::unordered_map<StateKey, ParentLink, StateKeyHash> parent;
  std::priority_queue<Frontier, std::vector<Frontier>, std::greater<Frontier>> queue;
  best.emplace(start_key, 0.0);
  queue.push({0.0, start_key});

  auto is_goal = [n](const StateKey& key) {
    for (int v = 0; v < n; ++v) {
      if (key[static_cast<size_t>(v) + 2] != 0) return false;
    }
    return true;
  };

  const StateKey* goal = nullptr;
  while (!queue.empty()) {
    Frontier top = queue.top();
    queue.pop();
    auto settled = best.find(top.key);
    if (settled == best.end() || top.cost > settled->second) continue;  // stale entry
    if (is_goal(top.key)) {
      assert(top.key[1] == 0);  // conservation: zero residual forces an empty ship
      goal = &settled->first;
      result.cost = top.cost;
      break;
    }

    ++result.expanded_states;
    if (result.expanded_states > limits.max_states ||
        static_cast<int64_t>(best.size()) > limits.max_states) {
      fail(ErrorKind::ResourceLimit,
           "state budget of " + std::to_string(limits.max_states) + " exhausted");
    }

    const int at = top.key[0];
    const int32_t load = top.key[1];
    for (int w = 0; w < n; ++w) {
      const double move_cost = net.dist(at, w);
      const auto sw = static_cast<size_t>(w);
      const int32_t pickable =
          std::min<int32_t>(cap_units - load, top.key[sw + 2] - min_units[sw]);
      for (int32_t m = 1; m <= pickable; ++m) {
        StateKey next = top.key;
        next[0] = w;
        next[1] = load + m;
        next[sw + 2] -= m;
        double cost = top.cost + move_cost;
        auto it = best.find(next);
        if (it == best.end() || cost < it->second) {
          best[next] = cost;
          parent[next] = {top.key, w, m};
          queue.push({cost, std::move(next)});
        }
      }
      for (int32_t m = 1; m <= load; ++m) {
        StateKey next = top.key;
        next[0] = w;
        next[1] = load - m;
        next[sw + 2] += m;
        double cost = top.cost + move_cost;
        auto it = best.find(next);
        if (it == best.end() || cost < it->second) {
          best[next] = cost;
          parent[next] = {top.key, w, -m};
          queue.push({cost, std::move(next)});
        }
      }
    }
  }

  if (goal == nullptr) {
    // A balanced, connected instance always has a feasible plan.
    fail(ErrorKind::Internal, "search exhausted without reaching the target state");
  }

  std::vector<PlanStep> steps;
  StateKey cursor = *goal;
  while (cursor != start_key) {
    const ParentLink& link = parent.at(cursor);
    steps.push_back({net.label(link.vertex), link.delta_units * grain});
    cursor = link.parent;
  }
  std::reverse(steps.begin(), steps.end());
  result.plan.steps = std::move(steps);
  return result;
}

Comparison compare(const Instance& instance, const OracleLimits& limits) {
  Plan heuristic_plan = solve_heuristic(instance);
  OracleResult exact = solve_exact(instance, limits);

  Comparison out;
  out.heuristic_cost = plan_cost(heuristic_plan, instance.network);
  out.optimal_cost = exact.cost;
  if (out.optimal_cost == 0.0) {
    out.ratio = out.heuristic_cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    out.ratio = out.heuristic_cost / out.optimal_cost;
  }
  return out;
}

}  // namespace pirebal
