#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "robctrl/error.hpp"
#include "robctrl/matrix.hpp"

namespace robctrl::graph {

inline constexpr int kHuman = 0;
inline constexpr int kBot = 1;
inline constexpr int kUnknown = -1;

using Edge = std::pair<int, int>;  // stored with first < second

struct Budgets {
    std::size_t max_injected_nodes = 0;  // delta_v
    std::size_t max_edge_ops = 0;        // delta_e
};

// Every structural change made on behalf of the attacker, in order. Replaying
// it backwards recovers the clean graph.
struct PerturbationLog {
    std::vector<Edge> added_edges;
    std::vector<Edge> removed_edges;
    std::vector<int> injected_nodes;

    std::size_t edge_ops() const { return added_edges.size() + removed_edges.size(); }
    bool empty() const {
        return added_edges.empty() && removed_edges.empty() && injected_nodes.empty();
    }
};

// Undirected attributed graph with labels, masks, and budget-tracked
// perturbation accounting. No self-loops, no duplicate edges.
class SocialGraph {
  public:
    SocialGraph() = default;
    SocialGraph(std::size_t n, std::size_t feature_dim);
    SocialGraph(std::size_t n, num::Matrix features, std::vector<int> labels);

    std::size_t num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t feature_dim() const { return features_.cols(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    const num::Matrix& features() const { return features_; }
    num::Matrix& mutable_features() { return features_; }
    const std::vector<int>& labels() const { return labels_; }
    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_label(int v, int y) { labels_[static_cast<std::size_t>(v)] = y; }

    void set_masks(std::vector<std::size_t> train, std::vector<std::size_t> val,
                   std::vector<std::size_t> test);
    const std::vector<std::size_t>& train_mask() const { return train_mask_; }
    const std::vector<std::size_t>& val_mask() const { return val_mask_; }
    const std::vector<std::size_t>& test_mask() const { return test_mask_; }

    bool has_edge(int u, int v) const;

    // Structural add; rejects self-loops and duplicates. The edge lands in the
    // perturbation log when an endpoint is attacker-controlled or force_log.
    void add_edge(int u, int v, bool force_log = false);

    // Structural removal with mandatory logging (baseline attacks only).
    void remove_edge_logged(int u, int v);

    // Appends isolated nodes carrying `features` rows, labeled `label`.
    // Enforces the injected-node budget when one is attached.
    std::vector<int> inject_nodes(const num::Matrix& features, int label);

    void attach_budgets(Budgets b) { budgets_ = b; }
    const std::optional<Budgets>& budgets() const { return budgets_; }

    void mark_controlled(const std::vector<int>& ids);
    bool is_controlled(int v) const { return controlled_.count(v) > 0; }

    const PerturbationLog& perturbation_log() const { return log_; }
    void clear_perturbation_log() { log_ = {}; }

    // Undoes the perturbation log: removes added edges, restores removed ones,
    // drops injected nodes (which are always a suffix of the id range).
    SocialGraph reconstruct_clean() const;

    // Node ids of a given label, ascending.
    std::vector<int> nodes_with_label(int y) const;

  private:
    static std::uint64_t edge_key(int u, int v);
    void check_node(int v) const;
    void insert_adjacency(int u, int v);
    void erase_adjacency(int u, int v);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::vector<std::vector<int>> adj_;  // sorted per node
    num::Matrix features_;
    std::vector<int> labels_;
    std::vector<std::size_t> train_mask_, val_mask_, test_mask_;
    std::optional<Budgets> budgets_;
    std::unordered_set<int> controlled_;
    PerturbationLog log_;
};

// Symmetric GCN normalization with self-loops: D~^{-1/2} (A+I) D~^{-1/2}.
// Kept sparse; products run over the edge list and equal the dense result.
class NormalizedAdjacency {
  public:
    explicit NormalizedAdjacency(const SocialGraph& g);
    NormalizedAdjacency(std::size_t n, const std::vector<Edge>& edges);

    std::size_t num_nodes() const { return n_; }

    num::Matrix multiply(const num::Matrix& m) const;  // A_hat * m
    num::Matrix dense() const;

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> inv_sqrt_deg_;  // 1/sqrt(deg+1)
};

}  // namespace robctrl::graph
