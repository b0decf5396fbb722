#include "robctrl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace robctrl::graph {

std::vector<std::size_t> degree_sequence(const SocialGraph& g) {
    std::vector<std::size_t> deg(g.num_nodes());
    for (std::size_t v = 0; v < g.num_nodes(); ++v) deg[v] = g.degree(static_cast<int>(v));
    return deg;
}

namespace {

// BFS over one component; returns its node list.
std::vector<int> component_of(const SocialGraph& g, int start, std::vector<char>& visited) {
    std::vector<int> comp;
    std::deque<int> queue{start};
    visited[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        comp.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return comp;
}

std::vector<int> largest_component(const SocialGraph& g) {
    std::vector<char> visited(g.num_nodes(), 0);
    std::vector<int> best;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        if (visited[v]) continue;
        auto comp = component_of(g, static_cast<int>(v), visited);
        if (comp.size() > best.size()) best = std::move(comp);
    }
    return best;
}

}  // namespace

std::size_t largest_component_size(const SocialGraph& g) {
    return largest_component(g).size();
}

double global_clustering(const SocialGraph& g) {
    // 3 * triangles / connected triples; adjacency lists are sorted.
    std::size_t triangles3 = 0;  // counts each triangle 3 times via its edges
    for (const Edge& e : g.edges()) {
        const auto& a = g.neighbors(e.first);
        const auto& b = g.neighbors(e.second);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++triangles3;
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    std::size_t triples = 0;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        const std::size_t d = g.degree(static_cast<int>(v));
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) return 0.0;
    return static_cast<double>(triangles3) / static_cast<double>(triples);
}

std::optional<double> characteristic_path_length(const SocialGraph& g, std::size_t cpl_cap) {
    const auto comp = largest_component(g);
    if (comp.size() < 2 || comp.size() > cpl_cap) return std::nullopt;
    std::vector<int> dist(g.num_nodes());
    long double total = 0.0;
    std::size_t pairs = 0;
    for (int src : comp) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{src};
        dist[static_cast<std::size_t>(src)] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int dst : comp) {
            if (dst == src) continue;
            total += dist[static_cast<std::size_t>(dst)];
            ++pairs;
        }
    }
    return static_cast<double>(total / static_cast<long double>(pairs));
}

std::optional<double> gini_coefficient(const std::vector<std::size_t>& degrees) {
    const std::size_t n = degrees.size();
    const double total =
        static_cast<double>(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
    if (n == 0 || total == 0.0) return std::nullopt;
    // Sorted form of sum |d_i - d_j| / (2 n^2 mean).
    std::vector<std::size_t> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    long double weighted = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        weighted += (2.0L * static_cast<long double>(i + 1) - n - 1) *
                    static_cast<long double>(sorted[i]);
    return static_cast<double>(weighted / (static_cast<long double>(n) * total));
}

std::optional<double> power_law_exponent(const std::vector<std::size_t>& degrees) {
    // Continuous MLE with d_min = 1 over nonzero degrees.
    double log_sum = 0.0;
    std::size_t nonzero = 0;
    for (std::size_t d : degrees) {
        if (d == 0) continue;
        ++nonzero;
        log_sum += std::log(static_cast<double>(d));
    }
    if (nonzero == 0 || log_sum == 0.0) return std::nullopt;
    return 1.0 + static_cast<double>(nonzero) / log_sum;
}

std::optional<double> degree_distribution_entropy(const std::vector<std::size_t>& degrees,
                                                  std::size_t num_nodes) {
    const double total =
        static_cast<double>(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
    if (total == 0.0 || num_nodes < 2) return std::nullopt;
    double h = 0.0;
    for (std::size_t d : degrees) {
        if (d == 0) continue;
        const double p = static_cast<double>(d) / total;
        h -= p * std::log(p);
    }
    return h / std::log(static_cast<double>(num_nodes));
}

GraphStats graph_stats(const SocialGraph& g, std::size_t cpl_cap) {
    if (g.num_nodes() == 0) throw DomainError("graph_stats: empty graph");
    GraphStats s;
    const auto degrees = degree_sequence(g);
    s.average_degree =
        2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
    s.largest_component = largest_component_size(g);
    s.clustering = global_clustering(g);
    s.char_path_length = characteristic_path_length(g, cpl_cap);
    s.gini = gini_coefficient(degrees);
    s.power_law_exp = power_law_exponent(degrees);
    s.degree_entropy = degree_distribution_entropy(degrees, g.num_nodes());
    return s;
}

}  // namespace robctrl::graph
