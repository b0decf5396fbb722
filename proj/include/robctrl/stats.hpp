#pragma once

#include <optional>

#include "robctrl/graph.hpp"

namespace robctrl::graph {

// The statistics reported for clean/poisoned graph comparisons. Optional
// fields are absent where undefined (edgeless graph) or too costly (CPL on
// a huge component).
struct GraphStats {
    std::optional<double> accuracy;  // filled by callers that own a detector
    double average_degree = 0.0;
    std::size_t largest_component = 0;
    double clustering = 0.0;
    std::optional<double> char_path_length;
    std::optional<double> gini;
    std::optional<double> power_law_exp;
    std::optional<double> degree_entropy;
};

inline constexpr std::size_t kDefaultCplCap = 20000;

// cpl_cap bounds the exact-BFS budget: CPL is computed only when the largest
// component has at most cpl_cap nodes.
GraphStats graph_stats(const SocialGraph& g, std::size_t cpl_cap = kDefaultCplCap);

std::vector<std::size_t> degree_sequence(const SocialGraph& g);
std::size_t largest_component_size(const SocialGraph& g);
double global_clustering(const SocialGraph& g);
std::optional<double> characteristic_path_length(const SocialGraph& g, std::size_t cpl_cap);
std::optional<double> gini_coefficient(const std::vector<std::size_t>& degrees);
std::optional<double> power_law_exponent(const std::vector<std::size_t>& degrees);
std::optional<double> degree_distribution_entropy(const std::vector<std::size_t>& degrees,
                                                  std::size_t num_nodes);

}  // namespace robctrl::graph
