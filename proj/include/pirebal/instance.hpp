#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pirebal/network.hpp"

namespace pirebal {

/// A rebalancing problem: current stocks x, target stocks y, ship capacity
/// and start location. x/y are parallel to the network's vertex order.
struct Instance {
  Network network;
  std::vector<int64_t> x;
  std::vector<int64_t> y;
  int64_t capacity = 0;
  int start = 0;

  int64_t total() const;
};

/// Surplus/shortfall split of the vertices; entries sorted by ascending label.
struct Classification {
  std::vector<std::pair<int, int64_t>> excess;
  std::vector<std::pair<int, int64_t>> deficit;
  std::vector<int> balanced;

  int64_t total_surplus() const;
  int64_t total_shortfall() const;
};

/// Every violated invariant, or empty when the instance is well formed.
std::vector<std::string> validate_instance(const Instance& instance);

Classification classify(const Instance& instance);

/// Seeded random instance: connected graph, integer lengths in [1,30],
/// balanced stocks with x != y. With units_of_k, stocks are multiples of k
/// and sum(x)/k <= max_units; otherwise sum(x) <= max_units * k.
Instance generate_instance(int n, int64_t k, uint64_t seed, bool units_of_k, int64_t max_units);

Instance read_instance(const std::string& path);
Instance parse_instance_json(const std::string& text);
void write_instance(const Instance& instance, const std::string& path);
std::string instance_to_json(const Instance& instance);

/// Equality on the problem content: labels, closed distances, stocks,
/// capacity and start. Raw edge lists are not compared.
bool same_problem(const Instance& a, const Instance& b);

}  // namespace pirebal
