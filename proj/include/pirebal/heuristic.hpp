#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pirebal/instance.hpp"
#include "pirebal/plan.hpp"

namespace pirebal {

struct MatchEntry {
  int source = 0;  // excess vertex
  int sink = 0;    // deficit vertex
  int64_t qty = 0;
};

/// Flow assignment from excess to deficit vertices, in selection order.
/// entry_distance_sum adds one dist term per entry, regardless of qty.
struct Matching {
  std::vector<MatchEntry> entries;
  double entry_distance_sum = 0.0;
};

enum class TourKind { Excess, Deficit };

/// Nearest-neighbor visit order over one side's vertices, with the
/// surplus/shortfall amount carried per vertex.
struct Tour {
  TourKind kind = TourKind::Excess;
  std::vector<int> order;
  std::vector<int64_t> amounts;  // parallel to order
};

struct SegmentItem {
  int vertex = 0;
  int64_t qty = 0;
};

/// Contiguous slice of a tour; total is exactly k except possibly the last.
struct Segment {
  std::vector<SegmentItem> items;
  int64_t total = 0;
};

struct SubpathPartition {
  std::vector<Segment> segments;
};

/// Intermediate artifacts of one heuristic run, for verbose reporting.
struct SolveDetails {
  Classification classification;
  Matching matching;
  Tour tour_excess;
  Tour tour_deficit;
  SubpathPartition parts_excess;
  SubpathPartition parts_deficit;
};

/// Repeatedly matches the globally nearest (excess, deficit) pair with
/// remaining quantity; ties break by ascending (source label, sink label).
Matching greedy_b_matching(const Classification& classification, const Network& network);

/// Nearest-neighbor tour over the members, started at the member closest
/// to the anchor. Ties break by ascending label.
Tour build_tour(TourKind kind, const std::vector<std::pair<int, int64_t>>& members,
                const Network& network, int anchor);

/// Walks the tour accumulating quantity and closes a segment each time the
/// running total reaches capacity; a vertex larger than the remaining room
/// is split across consecutive segments.
SubpathPartition split_tour(const Tour& tour, int64_t capacity);

/// Routes the matching flow through the tour segments, orders the resulting
/// segment pairs greedily from the ship position, and emits pickup steps
/// along each excess segment followed by drop steps along its deficit
/// segment.
Plan assemble_plan(const SubpathPartition& ex_parts, const SubpathPartition& def_parts,
                   const Matching& matching, int start, const Network& network);

/// The four-step pipeline: classify, match, tour both sides, split, assemble.
Plan solve_heuristic(const Instance& instance);
Plan solve_heuristic(const Instance& instance, SolveDetails* details);

std::string details_to_json(const SolveDetails& details, const Network& network);

}  // namespace pirebal
