#include "pirebal/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace pirebal {

using nlohmann::json;

int64_t Instance::total() const { return std::accumulate(x.begin(), x.end(), int64_t{0}); }

int64_t Classification::total_surplus() const {
  int64_t sum = 0;
  for (const auto& [v, q] : excess) sum += q;
  return sum;
}

int64_t Classification::total_shortfall() const {
  int64_t sum = 0;
  for (const auto& [v, q] : deficit) sum += q;
  return sum;
}

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> violations;
  const int n = instance.network.size();
  if (static_cast<int>(instance.x.size()) != n || static_cast<int>(instance.y.size()) != n) {
    violations.push_back("stock vectors do not cover every vertex");
    return violations;
  }
  int64_t sum_x = 0;
  int64_t sum_y = 0;
  for (int v = 0; v < n; ++v) {
    auto sv = static_cast<size_t>(v);
    if (instance.x[sv] < 0) {
      violations.push_back("vertex " + instance.network.label(v) + ": negative current count");
    }
    if (instance.y[sv] < 0) {
      violations.push_back("vertex " + instance.network.label(v) + ": negative target count");
    }
    sum_x += instance.x[sv];
    sum_y += instance.y[sv];
  }
  if (sum_x != sum_y) {
    violations.push_back("unbalanced totals: sum x = " + std::to_string(sum_x) +
                         ", sum y = " + std::to_string(sum_y));
  }
  if (instance.capacity < 1) {
    violations.push_back("capacity must be >= 1, got " + std::to_string(instance.capacity));
  }
  if (instance.start < 0 || instance.start >= n) {
    violations.push_back("start vertex is not in the network");
  }
  return violations;
}

Classification classify(const Instance& instance) {
  auto violations = validate_instance(instance);
  if (!violations.empty()) {
    std::string joined;
    for (const auto& v : violations) {
      if (!joined.empty()) joined += "; ";
      joined += v;
    }
    fail(ErrorKind::InvalidInstance, joined);
  }

  std::vector<int> by_label(static_cast<size_t>(instance.network.size()));
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(), [&](int a, int b) {
    return instance.network.label(a) < instance.network.label(b);
  });

  Classification cls;
  for (int v : by_label) {
    auto sv = static_cast<size_t>(v);
    int64_t diff = instance.x[sv] - instance.y[sv];
    if (diff > 0) {
      cls.excess.emplace_back(v, diff);
    } else if (diff < 0) {
      cls.deficit.emplace_back(v, -diff);
    } else {
      cls.balanced.push_back(v);
    }
  }
  return cls;
}

namespace {

/// Seeded engine with rejection-sampled bounded draws, so that generated
/// instances are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  int64_t uniform(int64_t lo, int64_t hi) {  // inclusive bounds
    auto range = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % range);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      labels.push_back(std::string(1, static_cast<char>('A' + i)));
    } else {
      labels.push_back("V" + std::to_string(i + 1));
    }
  }
  return labels;
}

std::vector<int64_t> scatter_units(Rng& rng, int n, int64_t units, int64_t unit_size) {
  std::vector<int64_t> counts(static_cast<size_t>(n), 0);
  for (int64_t u = 0; u < units; ++u) {
    counts[static_cast<size_t>(rng.uniform(0, n - 1))] += unit_size;
  }
  return counts;
}

}  // namespace

Instance generate_instance(int n, int64_t k, uint64_t seed, bool units_of_k, int64_t max_units) {
  if (n < 2) fail(ErrorKind::BadParameters, "vertex count must be >= 2, got " + std::to_string(n));
  if (k < 1) fail(ErrorKind::BadParameters, "capacity must be >= 1, got " + std::to_string(k));
  if (max_units < 1) {
    fail(ErrorKind::BadParameters, "max_units must be >= 1, got " + std::to_string(max_units));
  }

  Rng rng(seed);
  auto labels = default_labels(n);

  std::vector<EdgeInput> edges;
  std::vector<std::pair<int, int>> tree_pairs;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.uniform(0, i - 1));
    edges.push_back({labels[static_cast<size_t>(parent)], labels[static_cast<size_t>(i)],
                     static_cast<double>(rng.uniform(1, 30))});
    tree_pairs.emplace_back(std::min(parent, i), std::max(parent, i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::find(tree_pairs.begin(), tree_pairs.end(), std::make_pair(i, j)) !=
          tree_pairs.end()) {
        continue;
      }
      if (rng.uniform(0, 99) < 30) {
        edges.push_back({labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)],
                         static_cast<double>(rng.uniform(1, 30))});
      }
    }
  }

  int64_t units;
  int64_t unit_size;
  if (units_of_k) {
    units = rng.uniform(1, max_units);
    unit_size = k;
  } else {
    units = rng.uniform(1, max_units * k);
    unit_size = 1;
  }

  std::vector<int64_t> x = scatter_units(rng, n, units, unit_size);
  std::vector<int64_t> y;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    y = scatter_units(rng, n, units, unit_size);
    if (y != x) break;
  }
  if (y == x) fail(ErrorKind::Internal, "could not draw a redistribution differing from x");

  int start = static_cast<int>(rng.uniform(0, n - 1));
  return Instance{build_network(labels, edges), std::move(x), std::move(y), k, start};
}

namespace {

const json& require_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  return *it;
}

int64_t require_int(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_number_integer()) {
    fail(ErrorKind::Parse, std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int64_t>();
}

std::string require_string(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_string()) fail(ErrorKind::Parse, std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

double require_number(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_number()) fail(ErrorKind::Parse, std::string("field \"") + name + "\" must be a number");
  return v.get<double>();
}

json length_to_json(double value) {
  if (std::floor(value) == value && std::fabs(value) < 9e15) {
    return json(static_cast<int64_t>(value));
  }
  return json(value);
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::Parse, "instance file must hold a JSON object");

  const json& vertices = require_field(doc, "vertices");
  if (!vertices.is_array() || vertices.empty()) {
    fail(ErrorKind::Parse, "field \"vertices\" must be a non-empty list");
  }
  std::vector<std::string> labels;
  std::vector<int64_t> x;
  std::vector<int64_t> y;
  for (const auto& v : vertices) {
    if (!v.is_object()) fail(ErrorKind::Parse, "each vertex must be an object");
    labels.push_back(require_string(v, "id"));
    x.push_back(require_int(v, "x"));
    y.push_back(require_int(v, "y"));
  }

  int64_t capacity = require_int(doc, "capacity");
  std::string start_label = require_string(doc, "start");

  bool has_edges = doc.contains("edges");
  bool has_matrix = doc.contains("matrix");
  if (has_edges == has_matrix) {
    fail(ErrorKind::Parse, "expected exactly one of \"edges\" or \"matrix\"");
  }

  Network network = [&] {
    if (has_edges) {
      const json& edges = doc["edges"];
      if (!edges.is_array()) fail(ErrorKind::Parse, "field \"edges\" must be a list");
      std::vector<EdgeInput> inputs;
      for (const auto& e : edges) {
        if (!e.is_object()) fail(ErrorKind::Parse, "each edge must be an object");
        inputs.push_back(
            {require_string(e, "from"), require_string(e, "to"), require_number(e, "length")});
      }
      return build_network(labels, inputs);
    }
    const json& matrix = doc["matrix"];
    const json& order = require_field(doc, "order");
    if (!matrix.is_array()) fail(ErrorKind::Parse, "field \"matrix\" must be a list");
    if (!order.is_array()) fail(ErrorKind::Parse, "field \"order\" must be a list");
    std::vector<std::string> order_labels;
    for (const auto& l : order) {
      if (!l.is_string()) fail(ErrorKind::Parse, "field \"order\" must hold vertex labels");
      order_labels.push_back(l.get<std::string>());
    }
    {
      auto a = order_labels;
      auto b = labels;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) fail(ErrorKind::Parse, "field \"order\" must list exactly the vertex ids");
    }
    const size_t n = order_labels.size();
    if (matrix.size() != n * n) {
      fail(ErrorKind::Parse, "field \"matrix\" must hold " + std::to_string(n * n) +
                                 " row-major values, got " + std::to_string(matrix.size()));
    }
    Matrix lengths(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        const json& cell = matrix[i * n + j];
        if (!cell.is_number()) fail(ErrorKind::Parse, "field \"matrix\" must hold numbers");
        lengths[i][j] = cell.get<double>();
      }
    }
    Network net = network_from_matrix(order_labels, lengths);
    // Reorder stocks to the matrix order when it differs from the vertex list.
    std::vector<int64_t> rx(n, 0);
    std::vector<int64_t> ry(n, 0);
    for (size_t i = 0; i < labels.size(); ++i) {
      int idx = net.index_of(labels[i]);
      rx[static_cast<size_t>(idx)] = x[i];
      ry[static_cast<size_t>(idx)] = y[i];
    }
    x = std::move(rx);
    y = std::move(ry);
    return net;
  }();

  int start = network.find(start_label);
  if (start < 0) {
    fail(ErrorKind::Parse, "start vertex \"" + start_label + "\" is not declared");
  }
  return Instance{std::move(network), std::move(x), std::move(y), capacity, start};
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const Instance& instance) {
  const Network& net = instance.network;
  json doc;
  doc["capacity"] = instance.capacity;
  doc["start"] = net.label(instance.start);
  json vertices = json::array();
  for (int v = 0; v < net.size(); ++v) {
    auto sv = static_cast<size_t>(v);
    vertices.push_back({{"id", net.label(v)}, {"x", instance.x[sv]}, {"y", instance.y[sv]}});
  }
  doc["vertices"] = std::move(vertices);

  if (net.matrix_built()) {
    const size_t n = static_cast<size_t>(net.size());
    Matrix raw(n, std::vector<double>(n, 0.0));
    for (const auto& e : net.edges()) {
      raw[static_cast<size_t>(e.from)][static_cast<size_t>(e.to)] = e.length;
      raw[static_cast<size_t>(e.to)][static_cast<size_t>(e.from)] = e.length;
    }
    json flat = json::array();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) flat.push_back(length_to_json(raw[i][j]));
    }
    doc["matrix"] = std::move(flat);
    doc["order"] = net.labels();
  } else {
    json edges = json::array();
    for (const auto& e : net.edges()) {
      edges.push_back({{"from", net.label(e.from)},
                       {"length", length_to_json(e.length)},
                       {"to", net.label(e.to)}});
    }
    doc["edges"] = std::move(edges);
  }
  return doc.dump(2) + "\n";
}

void write_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open \"" + path + "\" for writing");
  out << instance_to_json(instance);
  if (!out) fail(ErrorKind::Io, "failed writing \"" + path + "\"");
}

bool same_problem(const Instance& a, const Instance& b) {
  if (a.network.labels() != b.network.labels()) return false;
  if (a.x != b.x || a.y != b.y) return false;
  if (a.capacity != b.capacity || a.start != b.start) return false;
  const int n = a.network.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!distance_equal(a.network.dist(i, j), b.network.dist(i, j))) return false;
    }
  }
  return true;
}

}  // namespace pirebal
