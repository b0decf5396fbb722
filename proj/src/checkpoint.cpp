#include "robctrl/checkpoint.hpp"

#include "robctrl/io.hpp"

namespace robctrl::ckpt {

using nlohmann::json;

const num::Matrix& Checkpoint::find(const std::string& name) const {
    for (const auto& p : params)
        if (p.name == name) return p.value;
    throw IoError("checkpoint: missing parameter " + name);
}

void save_checkpoint(const Checkpoint& c, const std::string& path) {
    json j;
    j["format"] = "robctrl-checkpoint";
    j["version"] = 1;
    j["kind"] = c.kind;
    j["meta"] = c.meta;
    json params = json::array();
    for (const auto& p : c.params) {
        json e;
        e["name"] = p.name;
        e["rows"] = p.value.rows();
        e["cols"] = p.value.cols();
        e["data"] = std::vector<double>(p.value.data(), p.value.data() + p.value.size());
        params.push_back(std::move(e));
    }
    j["params"] = std::move(params);
    io::write_text_file(path, j.dump() + "\n");
}

Checkpoint load_checkpoint(const std::string& path) {
    const json j = json::parse(io::read_text_file(path));
    if (j.value("format", "") != "robctrl-checkpoint")
        throw IoError(path + ": not a checkpoint file");
    Checkpoint c;
    c.kind = j.at("kind").get<std::string>();
    c.meta = j.value("meta", json::object());
    for (const auto& e : j.at("params")) {
        NamedMatrix p;
        p.name = e.at("name").get<std::string>();
        const auto rows = e.at("rows").get<std::size_t>();
        const auto cols = e.at("cols").get<std::size_t>();
        const auto data = e.at("data").get<std::vector<double>>();
        if (data.size() != rows * cols) throw IoError(path + ": shape tag mismatch");
        p.value = num::Matrix(rows, cols);
        std::copy(data.begin(), data.end(), p.value.data());
        c.params.push_back(std::move(p));
    }
    return c;
}

}  // namespace robctrl::ckpt
