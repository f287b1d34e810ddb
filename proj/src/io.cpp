#include "pou/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pou/errors.hpp"

namespace pou {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

std::string game_to_json(const ConsensusGame& game) {
  json j;
  j["n"] = game.n();
  json edges = json::array();
  for (const auto& [u, v] : game.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  std::string colors;
  colors.reserve(game.n());
  for (int v = 0; v < game.n(); ++v) colors.push_back(color_char(game.color(v)));
  j["colors"] = std::move(colors);
  return j.dump(2) + "\n";
}

ConsensusGame game_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    throw ParseError(std::string("instance json: ") + ex.what());
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    const std::string colors_text = j.at("colors").get<std::string>();
    if (static_cast<int>(colors_text.size()) != n)
      throw ParseError("colors string has length " + std::to_string(colors_text.size()) +
                       ", expected n = " + std::to_string(n));
    std::vector<Color> colors;
    colors.reserve(n);
    for (char ch : colors_text) colors.push_back(color_from_char(ch));
    return ConsensusGame::from_edges(n, edges, colors);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("instance json: ") + ex.what());
  }
}

void write_instance(const ConsensusGame& game, const std::string& path) {
  write_text_file(path, game_to_json(game));
}

ConsensusGame read_instance(const std::string& path) {
  return game_from_json(read_text_file(path));
}

std::string plan_to_json(const ConstructionPlan& plan) {
  json j;
  j["k"] = plan.k;
  j["eps_effective"] = plan.eps_effective.str();
  j["c"] = plan.c.to_double();
  json layers = json::array();
  for (const LayerSpec& spec : plan.layers) {
    json l;
    l["index"] = spec.index;
    l["size"] = spec.size;
    l["role"] = layer_role_name(spec.role);
    l["wiring"] = wiring_name(spec.wiring);
    l["first_id"] = spec.first_id;
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
  j["frozen"] = plan.frozen;
  j["boost_sizes"] = plan.boost_sizes;
  j["n_total"] = plan.n_total;
  j["n_budget"] = plan.n_budget;
  j["predicted_initial_bad"] = plan.predicted_initial_bad;
  j["predicted_phase1_bad"] = plan.predicted_phase1_bad;
  j["predicted_final_bad"] = plan.predicted_final_bad;
  j["anchor_bad"] = plan.anchor_bad;
  j["boost_product_sum"] = plan.boost_product_sum;
  return j.dump(2) + "\n";
}

void write_plan(const ConstructionPlan& plan, const std::string& path) {
  write_text_file(path, plan_to_json(plan));
}

void write_schedule(const std::vector<int>& schedule, const std::string& path) {
  std::ostringstream out;
  for (int v : schedule) out << v << '\n';
  write_text_file(path, out.str());
}

std::vector<int> read_schedule(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<int> schedule;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      size_t used = 0;
      const int v = std::stoi(line, &used);
      if (used != line.size()) throw std::invalid_argument(line);
      schedule.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected a vertex id, got '" +
                       line + "'");
    }
  }
  return schedule;
}

void write_trace_csv(const Trace& trace, const std::string& path) {
  std::ostringstream out;
  out << "step,vertex,from,to,b,g,delta,bad_edges_after\n";
  for (const MoveRecord& m : trace.moves)
    out << m.step << ',' << m.vertex << ',' << color_char(m.from) << ',' << color_char(m.to)
        << ',' << m.b << ',' << m.g << ',' << m.delta << ',' << m.bad_after << '\n';
  write_text_file(path, out.str());
}

std::vector<int> read_trace_vertices(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<int> vertices;
  std::string line;
  bool header = true;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const size_t first = line.find(',');
    const size_t second = first == std::string::npos ? std::string::npos : line.find(',', first + 1);
    if (second == std::string::npos)
      throw ParseError(path + ":" + std::to_string(line_no) + ": malformed trace row");
    try {
      vertices.push_back(std::stoi(line.substr(first + 1, second - first - 1)));
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": malformed vertex column");
    }
  }
  return vertices;
}

std::string chain_report_to_json(const ChainReport& report, const MonovariantReport& mono) {
  json j;
  j["m"] = report.m;
  j["sum_alpha"] = report.sum_alpha;
  j["bound"] = std::isfinite(report.bound) ? json(report.bound) : json("inf");
  j["slack"] = std::isfinite(report.slack) ? json(report.slack) : json("inf");
  j["T0"] = report.t0;
  j["Tm"] = report.tm;
  j["sumE0"] = report.sumE0;
  j["sumE0_sq"] = report.sumE0_sq;
  j["sumEm"] = report.sumEm;
  j["sumEm_abs"] = report.sumEm_abs;
  j["s0_size"] = report.s0_size;
  j["initial_bad"] = report.initial_bad;
  j["final_bad"] = report.final_bad;
  j["has_increase"] = report.has_increase;
  j["eps_hat"] = report.eps_hat;
  j["violations"] = report.violations;
  json m;
  m["steps"] = mono.steps;
  m["violations"] = mono.violations;
  m["worst_slack_sum"] = mono.worst_slack_sum;
  m["worst_slack_sq"] = mono.worst_slack_sq;
  j["monovariants"] = std::move(m);
  return j.dump(2) + "\n";
}

}  // namespace pou
