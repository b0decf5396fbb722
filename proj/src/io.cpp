#include "robctrl/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace robctrl::io {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
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
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw IoError("bad numeric field '" + s + "' in " + where);
    }
}

long parse_long(const std::string& s, const std::string& where) {
    long v = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw IoError("bad integer field '" + s + "' in " + where);
    return v;
}

}  // namespace

graph::SocialGraph load_graph(const std::string& nodes_csv, const std::string& edges_path) {
    std::ifstream nodes(nodes_csv);
    if (!nodes) throw IoError("cannot open " + nodes_csv);
    std::string line;
    if (!std::getline(nodes, line)) throw IoError(nodes_csv + ": empty node table");
    const auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "id" || header[1] != "label")
        throw IoError(nodes_csv + ": expected header id,label,f0..");
    const std::size_t dim = header.size() - 2;

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::size_t expect_id = 0;
    while (std::getline(nodes, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw IoError(nodes_csv + ": row width differs from header");
        if (static_cast<std::size_t>(parse_long(fields[0], nodes_csv)) != expect_id)
            throw IoError(nodes_csv + ": node ids must be 0..n-1 in order");
        ++expect_id;
        const long y = parse_long(fields[1], nodes_csv);
        if (y != 0 && y != 1 && y != -1) throw IoError(nodes_csv + ": label must be 0, 1 or -1");
        labels.push_back(static_cast<int>(y));
        std::vector<double> feat(dim);
        for (std::size_t j = 0; j < dim; ++j) feat[j] = parse_double(fields[2 + j], nodes_csv);
        rows.push_back(std::move(feat));
    }

    num::Matrix x(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) x.set_row(i, rows[i]);
    graph::SocialGraph g(rows.size(), std::move(x), std::move(labels));

    std::ifstream edges(edges_path);
    if (!edges) throw IoError("cannot open " + edges_path);
    while (std::getline(edges, line)) {
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        long u, v;
        if (!(ss >> u)) continue;  // blank line
        if (!(ss >> v)) throw IoError(edges_path + ": dangling endpoint");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const StructureError& e) {
            throw IoError(edges_path + ": " + e.what());
        }
    }
    g.clear_perturbation_log();  // loading is not a perturbation
    return g;
}

void save_graph(const graph::SocialGraph& g, const std::string& nodes_csv,
                const std::string& edges_path) {
    std::ostringstream nodes;
    nodes << "id,label";
    for (std::size_t j = 0; j < g.feature_dim(); ++j) nodes << ",f" << j;
    nodes << "\n";
    nodes.precision(17);
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        nodes << v << "," << g.label(static_cast<int>(v));
        for (std::size_t j = 0; j < g.feature_dim(); ++j) nodes << "," << g.features()(v, j);
        nodes << "\n";
    }
    write_text_file(nodes_csv, nodes.str());

    std::ostringstream edges;
    for (const auto& [u, v] : g.edges()) edges << u << " " << v << "\n";
    write_text_file(edges_path, edges.str());
}

void save_perturbation_log(const graph::PerturbationLog& log, const std::string& path) {
    json j;
    j["added_edges"] = log.added_edges;
    j["removed_edges"] = log.removed_edges;
    j["injected_nodes"] = log.injected_nodes;
    write_text_file(path, j.dump(2) + "\n");
}

graph::PerturbationLog load_perturbation_log(const std::string& path) {
    const json j = json::parse(read_text_file(path));
    graph::PerturbationLog log;
    log.added_edges = j.at("added_edges").get<std::vector<graph::Edge>>();
    log.removed_edges = j.at("removed_edges").get<std::vector<graph::Edge>>();
    log.injected_nodes = j.at("injected_nodes").get<std::vector<int>>();
    return log;
}

void save_masks(const graph::SocialGraph& g, const std::string& path) {
    json j;
    j["train"] = g.train_mask();
    j["val"] = g.val_mask();
    j["test"] = g.test_mask();
    write_text_file(path, j.dump(2) + "\n");
}

void load_masks(graph::SocialGraph& g, const std::string& path) {
    const json j = json::parse(read_text_file(path));
    g.set_masks(j.at("train").get<std::vector<std::size_t>>(),
                j.at("val").get<std::vector<std::size_t>>(),
                j.at("test").get<std::vector<std::size_t>>());
}

}  // namespace robctrl::io
