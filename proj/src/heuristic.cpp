#include "pirebal/heuristic.hpp"

#include <algorithm>
#include <cassert>

#include "json.hpp"

namespace pirebal {

using nlohmann::json;

Matching greedy_b_matching(const Classification& classification, const Network& network) {
  if (classification.total_surplus() != classification.total_shortfall()) {
    fail(ErrorKind::UnbalancedClassification,
         "total surplus " + std::to_string(classification.total_surplus()) +
             " != total shortfall " + std::to_string(classification.total_shortfall()));
  }

  auto sources = classification.excess;  // label-ordered; quantities are consumed in place
  auto sinks = classification.deficit;

  Matching matching;
  int64_t open = classification.total_shortfall();
  while (open > 0) {
    size_t best_src = 0;
    size_t best_dst = 0;
    double best_dist = infinite_length();
    for (size_t s = 0; s < sources.size(); ++s) {
      if (sources[s].second == 0) continue;
      for (size_t d = 0; d < sinks.size(); ++d) {
        if (sinks[d].second == 0) continue;
        double dist = network.dist(sources[s].first, sinks[d].first);
        if (dist < best_dist) {  // strict: first pair in label order wins ties
          best_dist = dist;
          best_src = s;
          best_dst = d;
        }
      }
    }
    int64_t qty = std::min(sources[best_src].second, sinks[best_dst].second);
    matching.entries.push_back({sources[best_src].first, sinks[best_dst].first, qty});
    matching.entry_distance_sum += best_dist;
    sources[best_src].second -= qty;
    sinks[best_dst].second -= qty;
    open -= qty;
  }
  return matching;
}

Tour build_tour(TourKind kind, const std::vector<std::pair<int, int64_t>>& members,
                const Network& network, int anchor) {
  if (members.empty()) {
    fail(ErrorKind::EmptyMemberSet, "cannot build a tour over an empty vertex set");
  }

  auto pending = members;
  std::sort(pending.begin(), pending.end(), [&](const auto& a, const auto& b) {
    return network.label(a.first) < network.label(b.first);
  });

  Tour tour;
  tour.kind = kind;
  int current = anchor;
  while (!pending.empty()) {
    size_t best = 0;
    double best_dist = infinite_length();
    for (size_t i = 0; i < pending.size(); ++i) {
      double dist = network.dist(current, pending[i].first);
      if (dist < best_dist) {  // strict: label order breaks ties
        best_dist = dist;
        best = i;
      }
    }
    tour.order.push_back(pending[best].first);
    tour.amounts.push_back(pending[best].second);
    current = pending[best].first;
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return tour;
}

SubpathPartition split_tour(const Tour& tour, int64_t capacity) {
  assert(capacity >= 1);
  SubpathPartition parts;
  Segment current;
  int64_t room = capacity;
  for (size_t i = 0; i < tour.order.size(); ++i) {
    assert(tour.amounts[i] > 0);
    int64_t left = tour.amounts[i];
    while (left > 0) {
      int64_t take = std::min(left, room);
      current.items.push_back({tour.order[i], take});
      current.total += take;
      room -= take;
      left -= take;
      if (room == 0) {
        parts.segments.push_back(std::move(current));
        current = Segment{};
        room = capacity;
      }
    }
  }
  if (current.total > 0) parts.segments.push_back(std::move(current));
  return parts;
}

namespace {

// Flow between one excess segment and one deficit segment: per-item pickup
// and drop quantities, parallel to the segments' item lists.
struct PairFlow {
  size_t ex_seg = 0;
  size_t def_seg = 0;
  std::vector<int64_t> pickups;
  std::vector<int64_t> drops;
  int64_t total = 0;
};

struct Cursor {
  size_t seg = 0;
  size_t item = 0;
};

// First (segment, item) at or after the cursor holding unconsumed quantity
// of `vertex`. Segments are scanned in tour order.
bool advance_to(const SubpathPartition& parts, const std::vector<std::vector<int64_t>>& remaining,
                int vertex, Cursor& cur) {
  for (size_t s = 0; s < parts.segments.size(); ++s) {
    const auto& items = parts.segments[s].items;
    for (size_t i = 0; i < items.size(); ++i) {
      if (items[i].vertex == vertex && remaining[s][i] > 0) {
        cur = {s, i};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Plan assemble_plan(const SubpathPartition& ex_parts, const SubpathPartition& def_parts,
                   const Matching& matching, int start, const Network& network) {
  int64_t ex_total = 0;
  int64_t def_total = 0;
  for (const auto& s : ex_parts.segments) ex_total += s.total;
  for (const auto& s : def_parts.segments) def_total += s.total;
  if (ex_total != def_total) {
    fail(ErrorKind::InconsistentFlow, "excess segments cover " + std::to_string(ex_total) +
                                          " but deficit segments cover " +
                                          std::to_string(def_total));
  }

  std::vector<std::vector<int64_t>> ex_remaining;
  for (const auto& s : ex_parts.segments) {
    ex_remaining.emplace_back();
    for (const auto& item : s.items) ex_remaining.back().push_back(item.qty);
  }
  std::vector<std::vector<int64_t>> def_remaining;
  for (const auto& s : def_parts.segments) {
    def_remaining.emplace_back();
    for (const auto& item : s.items) def_remaining.back().push_back(item.qty);
  }

  // Route each matching entry through the segments in tour order, splitting
  // across segment boundaries where needed.
  std::vector<PairFlow> pairs;
  auto pair_for = [&](size_t es, size_t ds) -> PairFlow& {
    for (auto& p : pairs) {
      if (p.ex_seg == es && p.def_seg == ds) return p;
    }
    PairFlow p;
    p.ex_seg = es;
    p.def_seg = ds;
    p.pickups.assign(ex_parts.segments[es].items.size(), 0);
    p.drops.assign(def_parts.segments[ds].items.size(), 0);
    pairs.push_back(std::move(p));
    return pairs.back();
  };

  for (const auto& entry : matching.entries) {
    int64_t open = entry.qty;
    while (open > 0) {
      Cursor src;
      Cursor dst;
      if (!advance_to(ex_parts, ex_remaining, entry.source, src)) {
        fail(ErrorKind::InconsistentFlow, "matching draws more from " +
                                              network.label(entry.source) +
                                              " than its segments hold");
      }
      if (!advance_to(def_parts, def_remaining, entry.sink, dst)) {
        fail(ErrorKind::InconsistentFlow, "matching sends more to " + network.label(entry.sink) +
                                              " than its segments take");
      }
      int64_t moved = std::min({open, ex_remaining[src.seg][src.item],
                                def_remaining[dst.seg][dst.item]});
      PairFlow& pair = pair_for(src.seg, dst.seg);
      pair.pickups[src.item] += moved;
      pair.drops[dst.item] += moved;
      pair.total += moved;
      ex_remaining[src.seg][src.item] -= moved;
      def_remaining[dst.seg][dst.item] -= moved;
      open -= moved;
    }
  }

  // Serve the pairs greedily by the distance to their first pickup vertex;
  // ties break by pickup label, then by segment position in tour order.
  auto first_pickup = [&](const PairFlow& p) -> int {
    const auto& items = ex_parts.segments[p.ex_seg].items;
    for (size_t i = 0; i < items.size(); ++i) {
      if (p.pickups[i] > 0) return items[i].vertex;
    }
    return -1;
  };

  Plan plan;
  plan.start = network.label(start);
  std::vector<bool> served(pairs.size(), false);
  int position = start;
  for (size_t round = 0; round < pairs.size(); ++round) {
    size_t chosen = pairs.size();
    double chosen_dist = infinite_length();
    int chosen_vertex = -1;
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (served[p]) continue;
      int pickup = first_pickup(pairs[p]);
      double dist = network.dist(position, pickup);
      bool better = false;
      if (chosen == pairs.size() || dist < chosen_dist) {
        better = true;
      } else if (dist == chosen_dist) {
        const std::string& a = network.label(pickup);
        const std::string& b = network.label(chosen_vertex);
        if (a < b) {
          better = true;
        } else if (a == b) {
          better = std::make_pair(pairs[p].ex_seg, pairs[p].def_seg) <
                   std::make_pair(pairs[chosen].ex_seg, pairs[chosen].def_seg);
        }
      }
      if (better) {
        chosen = p;
        chosen_dist = dist;
        chosen_vertex = pickup;
      }
    }

    const PairFlow& pair = pairs[chosen];
    const auto& ex_items = ex_parts.segments[pair.ex_seg].items;
    for (size_t i = 0; i < ex_items.size(); ++i) {
      if (pair.pickups[i] > 0) {
        plan.steps.push_back({network.label(ex_items[i].vertex), pair.pickups[i]});
        position = ex_items[i].vertex;
      }
    }
    const auto& def_items = def_parts.segments[pair.def_seg].items;
    for (size_t i = 0; i < def_items.size(); ++i) {
      if (pair.drops[i] > 0) {
        plan.steps.push_back({network.label(def_items[i].vertex), -pair.drops[i]});
        position = def_items[i].vertex;
      }
    }
    served[chosen] = true;
  }
  return plan;
}

Plan solve_heuristic(const Instance& instance) { return solve_heuristic(instance, nullptr); }

Plan solve_heuristic(const Instance& instance, SolveDetails* details) {
  Classification cls = classify(instance);  // throws InvalidInstance when ill-formed
  if (details) details->classification = cls;

  if (cls.excess.empty()) {
    // Nothing to move.
    Plan plan;
    plan.start = instance.network.label(instance.start);
    return plan;
  }

  Matching matching = greedy_b_matching(cls, instance.network);
  Tour tour_ex = build_tour(TourKind::Excess, cls.excess, instance.network, instance.start);
  Tour tour_def = build_tour(TourKind::Deficit, cls.deficit, instance.network, instance.start);
  SubpathPartition parts_ex = split_tour(tour_ex, instance.capacity);
  SubpathPartition parts_def = split_tour(tour_def, instance.capacity);
  Plan plan = assemble_plan(parts_ex, parts_def, matching, instance.start, instance.network);

  if (details) {
    details->matching = matching;
    details->tour_excess = tour_ex;
    details->tour_deficit = tour_def;
    details->parts_excess = parts_ex;
    details->parts_deficit = parts_def;
  }
  return plan;
}

namespace {

json segments_to_json(const SubpathPartition& parts, const Network& network) {
  json out = json::array();
  for (const auto& seg : parts.segments) {
    json items = json::array();
    for (const auto& item : seg.items) {
      items.push_back({{"qty", item.qty}, {"vertex", network.label(item.vertex)}});
    }
    out.push_back(std::move(items));
  }
  return out;
}

json tour_to_json(const Tour& tour, const Network& network) {
  json out = json::array();
  for (size_t i = 0; i < tour.order.size(); ++i) {
    out.push_back({{"amount", tour.amounts[i]}, {"vertex", network.label(tour.order[i])}});
  }
  return out;
}

json side_to_json(const std::vector<std::pair<int, int64_t>>& side, const Network& network) {
  json out = json::object();
  for (const auto& [v, qty] : side) out[network.label(v)] = qty;
  return out;
}

}  // namespace

std::string details_to_json(const SolveDetails& details, const Network& network) {
  json doc;
  doc["excess"] = side_to_json(details.classification.excess, network);
  doc["deficit"] = side_to_json(details.classification.deficit, network);
  json balanced = json::array();
  for (int v : details.classification.balanced) balanced.push_back(network.label(v));
  doc["balanced"] = std::move(balanced);

  json entries = json::array();
  for (const auto& e : details.matching.entries) {
    entries.push_back(
        {{"from", network.label(e.source)}, {"qty", e.qty}, {"to", network.label(e.sink)}});
  }
  doc["matching"] = {{"entries", std::move(entries)},
                     {"entry_distance_sum", details.matching.entry_distance_sum}};
  doc["tour_excess"] = tour_to_json(details.tour_excess, network);
  doc["tour_deficit"] = tour_to_json(details.tour_deficit, network);
  doc["segments_excess"] = segments_to_json(details.parts_excess, network);
  doc["segments_deficit"] = segments_to_json(details.parts_deficit, network);
  return doc.dump(2) + "\n";
}

}  // namespace pirebal
