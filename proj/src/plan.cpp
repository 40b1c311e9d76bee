#include "pirebal/plan.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pirebal {

using nlohmann::json;

bool operator==(const PlanStep& a, const PlanStep& b) {
  return a.vertex == b.vertex && a.delta == b.delta;
}

bool operator==(const Plan& a, const Plan& b) { return a.start == b.start && a.steps == b.steps; }

PlanReport simulate(const Instance& instance, const Plan& plan) {
  const Network& net = instance.network;
  PlanReport report;

  int position = net.index_of(plan.start);
  if (position != instance.start) {
    report.violations.push_back("plan starts at " + plan.start + " but the ship starts at " +
                                net.label(instance.start));
  }

  std::vector<int64_t> stocks = instance.x;
  int64_t load = 0;
  size_t step_index = 0;
  for (const auto& step : plan.steps) {
    int v = net.index_of(step.vertex);
    report.total_distance += net.dist(position, v);
    position = v;
    auto sv = static_cast<size_t>(v);
    if (step.delta > 0) {
      stocks[sv] -= step.delta;
      load += step.delta;
      if (stocks[sv] < 0) {
        report.violations.push_back("stock negative at " + step.vertex + " after step " +
                                    std::to_string(step_index + 1));
      }
      if (load > instance.capacity) {
        report.violations.push_back("load overflow after step " + std::to_string(step_index + 1) +
                                    ": " + std::to_string(load) + " > capacity " +
                                    std::to_string(instance.capacity));
      }
    } else {
      stocks[sv] += -step.delta;
      load -= -step.delta;
      if (load < 0) {
        report.violations.push_back("load underflow after step " + std::to_string(step_index + 1));
      }
    }
    report.load_trace.push_back(load);
    ++step_index;
  }

  for (int v = 0; v < net.size(); ++v) {
    auto sv = static_cast<size_t>(v);
    report.final_state.emplace_back(net.label(v), stocks[sv]);
    if (stocks[sv] != instance.y[sv]) {
      report.violations.push_back("final stock at " + net.label(v) + " is " +
                                  std::to_string(stocks[sv]) + ", target " +
                                  std::to_string(instance.y[sv]));
    }
  }
  if (load != 0) {
    report.violations.push_back("ship still carries " + std::to_string(load) + " at the end");
  }
  report.feasible = report.violations.empty();
  return report;
}

double plan_cost(const Plan& plan, const Network& network) {
  double total = 0.0;
  int position = network.index_of(plan.start);
  for (const auto& step : plan.steps) {
    int v = network.index_of(step.vertex);
    total += network.dist(position, v);
    position = v;
  }
  return total;
}

namespace {

const json& require_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

Plan parse_plan_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::Parse, "plan file must hold a JSON object");

  Plan plan;
  const json& start = require_field(doc, "start");
  if (!start.is_string()) fail(ErrorKind::Parse, "field \"start\" must be a string");
  plan.start = start.get<std::string>();

  const json& steps = require_field(doc, "steps");
  if (!steps.is_array()) fail(ErrorKind::Parse, "field \"steps\" must be a list");
  for (const auto& s : steps) {
    if (!s.is_object()) fail(ErrorKind::Parse, "each step must be an object");
    const json& vertex = require_field(s, "vertex");
    if (!vertex.is_string()) fail(ErrorKind::Parse, "field \"vertex\" must be a string");
    const json& delta = require_field(s, "delta");
    if (!delta.is_number_integer()) fail(ErrorKind::Parse, "field \"delta\" must be an integer");
    int64_t d = delta.get<int64_t>();
    if (d == 0) fail(ErrorKind::Parse, "field \"delta\" must be non-zero");
    plan.steps.push_back({vertex.get<std::string>(), d});
  }
  return plan;
}

Plan read_plan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plan_json(buf.str());
}

std::string plan_to_json(const Plan& plan) {
  json doc;
  doc["start"] = plan.start;
  json steps = json::array();
  for (const auto& s : plan.steps) {
    steps.push_back({{"delta", s.delta}, {"vertex", s.vertex}});
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

void write_plan(const Plan& plan, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open \"" + path + "\" for writing");
  out << plan_to_json(plan);
  if (!out) fail(ErrorKind::Io, "failed writing \"" + path + "\"");
}

namespace {

json distance_to_json(double value) {
  if (value == static_cast<double>(static_cast<int64_t>(value))) {
    return json(static_cast<int64_t>(value));
  }
  return json(value);
}

}  // namespace

std::string report_to_json(const PlanReport& report) {
  json doc;
  doc["feasible"] = report.feasible;
  doc["total_distance"] = distance_to_json(report.total_distance);
  json state = json::object();
  for (const auto& [label, count] : report.final_state) state[label] = count;
  doc["final_state"] = std::move(state);
  doc["load_trace"] = report.load_trace;
  doc["violations"] = report.violations;
  return doc.dump(2) + "\n";
}

}  // namespace pirebal
