#include "pirebal/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pirebal {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::NegativeLength: return "NegativeLength";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::AsymmetricInput: return "AsymmetricInput";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::EmptyMemberSet: return "EmptyMemberSet";
    case ErrorKind::UnbalancedClassification: return "UnbalancedClassification";
    case ErrorKind::InconsistentFlow: return "InconsistentFlow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidGrain: return "InvalidGrain";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

double infinite_length() { return std::numeric_limits<double>::infinity(); }

bool distance_equal(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  if (std::floor(a) == a && std::floor(b) == b) return false;
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

std::string format_length(double value) {
  if (std::isfinite(value) && std::floor(value) == value && std::fabs(value) < 9e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(value));
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Matrix metric_closure(const Matrix& lengths) {
  const size_t n = lengths.size();
  for (size_t i = 0; i < n; ++i) {
    if (lengths[i].size() != n) fail(ErrorKind::InvalidMatrix, "matrix is not square");
  }
  for (size_t i = 0; i < n; ++i) {
    if (lengths[i][i] != 0.0) {
      fail(ErrorKind::InvalidMatrix,
           "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is not zero");
    }
    for (size_t j = 0; j < n; ++j) {
      double v = lengths[i][j];
      if (std::isfinite(v) && v < 0.0) {
        fail(ErrorKind::NegativeEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is negative: " + format_length(v));
      }
      if (j > i && !distance_equal(lengths[i][j], lengths[j][i])) {
        fail(ErrorKind::AsymmetricInput,
             "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                 std::to_string(j) + "," + std::to_string(i) + ") differ: " +
                 format_length(lengths[i][j]) + " vs " + format_length(lengths[j][i]));
      }
    }
  }

  Matrix dist = lengths;
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      const double dik = dist[i][k];
      if (!std::isfinite(dik)) continue;
      for (size_t j = 0; j < n; ++j) {
        const double through = dik + dist[k][j];
        if (through < dist[i][j]) dist[i][j] = through;
      }
    }
  }
  return dist;
}

Network::Network(std::vector<std::string> labels, std::vector<Edge> edges, Matrix dist,
                 bool matrix_built)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      dist_(std::move(dist)),
      matrix_built_(matrix_built) {
  for (int i = 0; i < size(); ++i) index_[labels_[static_cast<size_t>(i)]] = i;
  neighbors_.resize(labels_.size());
  for (int v = 0; v < size(); ++v) {
    auto& list = neighbors_[static_cast<size_t>(v)];
    for (int u = 0; u < size(); ++u) {
      if (u != v) list.push_back(u);
    }
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      double da = this->dist(v, a);
      double db = this->dist(v, b);
      if (da != db) return da < db;
      return label(a) < label(b);
    });
  }
}

int Network::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorKind::UnknownVertex, "no vertex named \"" + label + "\"");
  return it->second;
}

int Network::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& Network::sorted_neighbors(int v) const {
  return neighbors_[static_cast<size_t>(v)];
}

std::vector<std::pair<std::string, double>> Network::sorted_neighbors(
    const std::string& label) const {
  int v = index_of(label);
  std::vector<std::pair<std::string, double>> out;
  for (int u : sorted_neighbors(v)) out.emplace_back(this->label(u), dist(v, u));
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) fail(ErrorKind::BadParameters, "vertex label must be non-empty");
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        fail(ErrorKind::DuplicateVertex, "vertex \"" + labels[i] + "\" declared twice");
      }
    }
  }
}

void check_connected(const std::vector<std::string>& labels, const Matrix& dist) {
  for (size_t i = 0; i < dist.size(); ++i) {
    for (size_t j = 0; j < dist.size(); ++j) {
      if (!std::isfinite(dist[i][j])) {
        fail(ErrorKind::DisconnectedGraph,
             "no path between \"" + labels[i] + "\" and \"" + labels[j] + "\"");
      }
    }
  }
}

}  // namespace

Network build_network(const std::vector<std::string>& vertex_labels,
                      const std::vector<EdgeInput>& edges) {
  check_labels(vertex_labels);
  const size_t n = vertex_labels.size();
  std::map<std::string, int> index;
  for (size_t i = 0; i < n; ++i) index[vertex_labels[i]] = static_cast<int>(i);

  Matrix lengths(n, std::vector<double>(n, infinite_length()));
  for (size_t i = 0; i < n; ++i) lengths[i][i] = 0.0;

  std::vector<Edge> kept;
  for (const auto& e : edges) {
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end()) fail(ErrorKind::UnknownEndpoint, "edge endpoint \"" + e.from + "\" is not a vertex");
    if (to == index.end()) fail(ErrorKind::UnknownEndpoint, "edge endpoint \"" + e.to + "\" is not a vertex");
    if (e.length < 0.0) {
      fail(ErrorKind::NegativeLength, "edge (" + e.from + "," + e.to + ") has negative length " +
                                          format_length(e.length));
    }
    int u = from->second;
    int v = to->second;
    if (u == v) continue;  // self loop, never on a shortest path
    auto su = static_cast<size_t>(u);
    auto sv = static_cast<size_t>(v);
    if (e.length < lengths[su][sv]) {
      lengths[su][sv] = e.length;
      lengths[sv][su] = e.length;
    }
    kept.push_back(Edge{u, v, e.length});
  }

  Matrix dist = metric_closure(lengths);
  check_connected(vertex_labels, dist);
  return Network(vertex_labels, std::move(kept), std::move(dist), false);
}

Network network_from_matrix(const std::vector<std::string>& vertex_labels, const Matrix& lengths) {
  check_labels(vertex_labels);
  if (lengths.size() != vertex_labels.size()) {
    fail(ErrorKind::InvalidMatrix, "matrix order " + std::to_string(lengths.size()) +
                                       " does not match vertex count " +
                                       std::to_string(vertex_labels.size()));
  }
  Matrix dist = metric_closure(lengths);
  check_connected(vertex_labels, dist);
  std::vector<Edge> edges;
  const int n = static_cast<int>(vertex_labels.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double len = lengths[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (std::isfinite(len)) edges.push_back(Edge{i, j, len});
    }
  }
  return Network(vertex_labels, std::move(edges), std::move(dist), true);
}

std::string matrix_to_csv(const std::vector<std::string>& labels, const Matrix& matrix) {
  std::ostringstream out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out << ',';
    out << labels[i];
  }
  out << '\n';
  for (const auto& row : matrix) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << format_length(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

void parse_matrix_csv(const std::string& text, std::vector<std::string>& labels_out,
                      Matrix& matrix_out) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::Parse, "empty matrix file");
  labels_out = split_csv_line(line);
  for (auto& l : labels_out) {
    if (l.empty()) fail(ErrorKind::Parse, "line 1: empty vertex label in header");
  }
  const size_t n = labels_out.size();
  matrix_out.assign(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      fail(ErrorKind::Parse, "expected " + std::to_string(n) + " value rows, got " +
                                 std::to_string(i));
    }
    auto fields = split_csv_line(line);
    if (fields.size() != n) {
      fail(ErrorKind::Parse, "line " + std::to_string(i + 2) + ": expected " + std::to_string(n) +
                                 " values, got " + std::to_string(fields.size()));
    }
    for (size_t j = 0; j < n; ++j) {
      try {
        size_t used = 0;
        matrix_out[i][j] = std::stod(fields[j], &used);
        if (used != fields[j].size()) throw std::invalid_argument(fields[j]);
      } catch (const std::exception&) {
        fail(ErrorKind::Parse,
             "line " + std::to_string(i + 2) + ": bad number \"" + fields[j] + "\"");
      }
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r") {
      fail(ErrorKind::Parse, "unexpected extra row after the matrix");
    }
  }
}

}  // namespace pirebal
