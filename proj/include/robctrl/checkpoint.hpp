#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "robctrl/matrix.hpp"

namespace robctrl::ckpt {

struct NamedMatrix {
    std::string name;
    num::Matrix value;
};

// Flat list of shape-tagged named matrices plus a metadata blob; the one
// container used for detector and diffusion checkpoints.
struct Checkpoint {
    std::string kind;
    nlohmann::json meta;
    std::vector<NamedMatrix> params;

    const num::Matrix& find(const std::string& name) const;
};

void save_checkpoint(const Checkpoint& c, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace robctrl::ckpt
