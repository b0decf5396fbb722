#pragma once

#include <string>

#include "robctrl/graph.hpp"

namespace robctrl::io {

// Node table: UTF-8 CSV, header `id,label,f0..f{d-1}`, label in {0,1,-1}.
// Edge list: one `u v` pair per line, whitespace- or comma-separated;
// duplicates and self-loops are rejected at load.
graph::SocialGraph load_graph(const std::string& nodes_csv, const std::string& edges_path);
void save_graph(const graph::SocialGraph& g, const std::string& nodes_csv,
                const std::string& edges_path);

// Perturbation-log sidecar (JSON): added/removed edges plus injected ids.
void save_perturbation_log(const graph::PerturbationLog& log, const std::string& path);
graph::PerturbationLog load_perturbation_log(const std::string& path);

// Mask sidecar (JSON) so split assignments survive file handoffs.
void save_masks(const graph::SocialGraph& g, const std::string& path);
void load_masks(graph::SocialGraph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace robctrl::io
