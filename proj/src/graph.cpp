#include "robctrl/graph.hpp"

#include <algorithm>
#include <string>

namespace robctrl::graph {

SocialGraph::SocialGraph(std::size_t n, std::size_t feature_dim)
    : n_(n), adj_(n), features_(n, feature_dim), labels_(n, kUnknown) {}

SocialGraph::SocialGraph(std::size_t n, num::Matrix features, std::vector<int> labels)
    : n_(n), adj_(n), features_(std::move(features)), labels_(std::move(labels)) {
    if (features_.rows() != n_ || labels_.size() != n_)
        throw DimensionError("SocialGraph: features/labels do not cover all nodes");
}

std::uint64_t SocialGraph::edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

void SocialGraph::check_node(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
        throw StructureError("node id " + std::to_string(v) + " out of range");
}

bool SocialGraph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return edge_set_.count(edge_key(u, v)) > 0;
}

void SocialGraph::insert_adjacency(int u, int v) {
    auto& a = adj_[static_cast<std::size_t>(u)];
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
}

void SocialGraph::erase_adjacency(int u, int v) {
    auto& a = adj_[static_cast<std::size_t>(u)];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
}

void SocialGraph::add_edge(int u, int v, bool force_log) {
    check_node(u);
    check_node(v);
    if (u == v) throw StructureError("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (!edge_set_.insert(edge_key(u, v)).second)
        throw StructureError("duplicate edge rejected");
    edges_.emplace_back(u, v);
    insert_adjacency(u, v);
    insert_adjacency(v, u);
    const bool controlled = force_log || is_controlled(u) || is_controlled(v);
    if (controlled) {
        if (budgets_ && log_.edge_ops() + 1 > budgets_->max_edge_ops) {
            // roll back before reporting
            edge_set_.erase(edge_key(u, v));
            edges_.pop_back();
            erase_adjacency(u, v);
            erase_adjacency(v, u);
            throw BudgetError("edge budget exceeded");
        }
        log_.added_edges.emplace_back(u, v);
    }
}

void SocialGraph::remove_edge_logged(int u, int v) {
    check_node(u);
    check_node(v);
    if (u > v) std::swap(u, v);
    if (edge_set_.erase(edge_key(u, v)) == 0)
        throw StructureError("remove_edge: edge absent");
    if (budgets_ && log_.edge_ops() + 1 > budgets_->max_edge_ops) {
        edge_set_.insert(edge_key(u, v));
        throw BudgetError("edge budget exceeded");
    }
    edges_.erase(std::find(edges_.begin(), edges_.end(), Edge{u, v}));
    erase_adjacency(u, v);
    erase_adjacency(v, u);
    log_.removed_edges.emplace_back(u, v);
}

std::vector<int> SocialGraph::inject_nodes(const num::Matrix& features, int label) {
    if (features.rows() == 0) return {};
    if (features.cols() != features_.cols())
        throw DimensionError("inject_nodes: feature width mismatch");
    if (budgets_ && log_.injected_nodes.size() + features.rows() > budgets_->max_injected_nodes)
        throw BudgetError("injected-node budget exceeded");
    std::vector<int> ids;
    num::Matrix grown(n_ + features.rows(), features_.cols());
    std::copy(features_.data(), features_.data() + features_.size(), grown.data());
    for (std::size_t r = 0; r < features.rows(); ++r) {
        const int id = static_cast<int>(n_ + r);
        ids.push_back(id);
        std::copy(features.row(r), features.row(r) + features.cols(),
                  grown.row(static_cast<std::size_t>(id)));
        labels_.push_back(label);
        adj_.emplace_back();
        log_.injected_nodes.push_back(id);
        controlled_.insert(id);
    }
    features_ = std::move(grown);
    n_ += features.rows();
    return ids;
}

void SocialGraph::set_masks(std::vector<std::size_t> train, std::vector<std::size_t> val,
                            std::vector<std::size_t> test) {
    std::vector<char> seen(n_, 0);
    for (const auto* m : {&train, &val, &test}) {
        for (std::size_t i : *m) {
            if (i >= n_) throw StructureError("mask index out of range");
            if (seen[i]++) throw StructureError("masks must be disjoint");
        }
    }
    train_mask_ = std::move(train);
    val_mask_ = std::move(val);
    test_mask_ = std::move(test);
}

void SocialGraph::mark_controlled(const std::vector<int>& ids) {
    for (int v : ids) {
        check_node(v);
        controlled_.insert(v);
    }
}

SocialGraph SocialGraph::reconstruct_clean() const {
    // Injected ids must be the trailing id range; anything else means the log
    // was tampered with.
    const std::size_t injected = log_.injected_nodes.size();
    const std::size_t clean_n = n_ - injected;
    for (std::size_t k = 0; k < injected; ++k)
        if (log_.injected_nodes[k] != static_cast<int>(clean_n + k))
            throw StructureError("reconstruct_clean: injected ids are not a suffix");

    num::Matrix feats(clean_n, features_.cols());
    std::copy(features_.data(), features_.data() + feats.size(), feats.data());
    std::vector<int> labels(labels_.begin(), labels_.begin() + static_cast<long>(clean_n));
    SocialGraph clean(clean_n, std::move(feats), std::move(labels));

    std::unordered_set<std::uint64_t> dropped;
    for (const Edge& e : log_.added_edges) dropped.insert(edge_key(e.first, e.second));
    for (const Edge& e : edges_) {
        if (dropped.count(edge_key(e.first, e.second))) continue;
        clean.add_edge(e.first, e.second);
    }
    for (const Edge& e : log_.removed_edges) clean.add_edge(e.first, e.second);

    std::vector<std::size_t> tr = train_mask_, va = val_mask_, te = test_mask_;
    auto prune = [clean_n](std::vector<std::size_t>& m) {
        std::erase_if(m, [clean_n](std::size_t i) { return i >= clean_n; });
    };
    prune(tr);
    prune(va);
    prune(te);
    clean.set_masks(std::move(tr), std::move(va), std::move(te));
    return clean;
}

std::vector<int> SocialGraph::nodes_with_label(int y) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < n_; ++v)
        if (labels_[v] == y) out.push_back(static_cast<int>(v));
    return out;
}

NormalizedAdjacency::NormalizedAdjacency(const SocialGraph& g)
    : NormalizedAdjacency(g.num_nodes(), g.edges()) {}

NormalizedAdjacency::NormalizedAdjacency(std::size_t n, const std::vector<Edge>& edges)
    : n_(n), edges_(edges), inv_sqrt_deg_(n, 0.0) {
    std::vector<std::size_t> deg(n, 1);  // self-loop
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.first)];
        ++deg[static_cast<std::size_t>(e.second)];
    }
    for (std::size_t v = 0; v < n; ++v)
        inv_sqrt_deg_[v] = 1.0 / std::sqrt(static_cast<double>(deg[v]));
}

num::Matrix NormalizedAdjacency::multiply(const num::Matrix& m) const {
    if (m.rows() != n_) throw DimensionError("NormalizedAdjacency::multiply: row mismatch");
    num::Matrix out(m.rows(), m.cols());
    const std::size_t d = m.cols();
    for (std::size_t v = 0; v < n_; ++v) {
        const double c = inv_sqrt_deg_[v] * inv_sqrt_deg_[v];
        const double* src = m.row(v);
        double* dst = out.row(v);
        for (std::size_t j = 0; j < d; ++j) dst[j] = c * src[j];
    }
    for (const Edge& e : edges_) {
        const auto u = static_cast<std::size_t>(e.first);
        const auto v = static_cast<std::size_t>(e.second);
        const double c = inv_sqrt_deg_[u] * inv_sqrt_deg_[v];
        const double* ru = m.row(u);
        const double* rv = m.row(v);
        double* ou = out.row(u);
        double* ov = out.row(v);
        for (std::size_t j = 0; j < d; ++j) {
            ou[j] += c * rv[j];
            ov[j] += c * ru[j];
        }
    }
    return out;
}

num::Matrix NormalizedAdjacency::dense() const {
    num::Matrix a(n_, n_);
    for (std::size_t v = 0; v < n_; ++v) a(v, v) = inv_sqrt_deg_[v] * inv_sqrt_deg_[v];
    for (const Edge& e : edges_) {
        const auto u = static_cast<std::size_t>(e.first);
        const auto v = static_cast<std::size_t>(e.second);
        a(u, v) = a(v, u) = inv_sqrt_deg_[u] * inv_sqrt_deg_[v];
    }
    return a;
}

}  // namespace robctrl::graph
