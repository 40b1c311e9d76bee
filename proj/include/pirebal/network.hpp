#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pirebal/error.hpp"

namespace pirebal {

/// Square distance matrix; absent edges are +infinity.
using Matrix = std::vector<std::vector<double>>;

double infinite_length();

/// Exact comparison for integral values, relative 1e-9 otherwise.
bool distance_equal(double a, double b);

struct Edge {
  int from = 0;
  int to = 0;
  double length = 0.0;
};

struct EdgeInput {
  std::string from;
  std::string to;
  double length = 0.0;
};

/// All-pairs shortest paths of a symmetric nonnegative length matrix.
/// Idempotent; never increases an entry. Disconnected pairs stay infinite.
Matrix metric_closure(const Matrix& lengths);

/// Immutable weighted graph with its metric closure and per-vertex
/// neighbor lists sorted by increasing distance (ties by label).
class Network {
 public:
  Network(std::vector<std::string> labels, std::vector<Edge> edges, Matrix dist,
          bool matrix_built);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

  /// Index of a label, or UnknownVertex.
  int index_of(const std::string& label) const;
  /// Index of a label, or -1 when absent.
  int find(const std::string& label) const;

  double dist(int u, int v) const { return dist_[static_cast<size_t>(u)][static_cast<size_t>(v)]; }
  const Matrix& dist_matrix() const { return dist_; }

  /// Underlying edges as given at construction (raw lengths, not closed).
  const std::vector<Edge>& edges() const { return edges_; }
  bool matrix_built() const { return matrix_built_; }

  /// Every vertex except v, ordered by increasing dist, ties by label.
  const std::vector<int>& sorted_neighbors(int v) const;
  std::vector<std::pair<std::string, double>> sorted_neighbors(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
  Matrix dist_;
  std::vector<std::vector<int>> neighbors_;
  bool matrix_built_ = false;
};

Network build_network(const std::vector<std::string>& vertex_labels,
                      const std::vector<EdgeInput>& edges);

/// Builds from a complete length matrix; the closure is applied on top of it.
Network network_from_matrix(const std::vector<std::string>& vertex_labels, const Matrix& lengths);

/// CSV form: header row of vertex labels, then one value row per vertex.
std::string matrix_to_csv(const std::vector<std::string>& labels, const Matrix& matrix);
void parse_matrix_csv(const std::string& text, std::vector<std::string>& labels_out,
                      Matrix& matrix_out);

/// Renders a number without a trailing ".0" when it is integral.
std::string format_length(double value);

}  // namespace pirebal
