#pragma once

#include <string>
#include <vector>

#include "pou/construction.hpp"
#include "pou/dynamics.hpp"
#include "pou/game.hpp"
#include "pou/move_game.hpp"

namespace pou {

// Instance file: {"n": int, "edges": [[u,v],...], "colors": "WRRW..."}.
// Edges are written u < v in lexicographic order, so serialization is
// deterministic and regeneration is byte-identical.
std::string game_to_json(const ConsensusGame& game);
ConsensusGame game_from_json(const std::string& text);
void write_instance(const ConsensusGame& game, const std::string& path);
ConsensusGame read_instance(const std::string& path);

// Plan file: {"k", "layers":[{"size","role","wiring"}...], "frozen", "c"}
// plus the predicted counts the harness cross-checks against simulation.
std::string plan_to_json(const ConstructionPlan& plan);
void write_plan(const ConstructionPlan& plan, const std::string& path);

// Schedule file: one vertex id per line.
void write_schedule(const std::vector<int>& schedule, const std::string& path);
std::vector<int> read_schedule(const std::string& path);

// Trace file: CSV, header step,vertex,from,to,b,g,delta,bad_edges_after.
void write_trace_csv(const Trace& trace, const std::string& path);
// Reads back just the vertex column (enough to replay a trace as a schedule).
std::vector<int> read_trace_vertices(const std::string& path);

std::string chain_report_to_json(const ChainReport& report, const MonovariantReport& mono);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pou
