#include "proofs/layering.hpp"

#include <algorithm>

namespace proofs {

std::vector<NodeId> LayerMap::flatten() const {
    std::vector<NodeId> flat;
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    flat.reserve(total);
    for (const auto& layer : layers) flat.insert(flat.end(), layer.begin(), layer.end());
    return flat;
}

LayerMap computeLayers(const ProofGraph& graph) {
    const std::vector<NodeId>& ids = graph.ids();
    const std::size_t n = ids.size();

    std::vector<std::size_t> remaining(n);      // premises not yet layered
    std::vector<std::vector<std::size_t>> children(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ProofNode& node = graph.node(ids[i]);
        remaining[i] = node.premises.size();
        for (NodeId p : node.premises) children[graph.indexOf(p)].push_back(i);
    }

    LayerMap result;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (remaining[i] == 0) current.push_back(i);
    }

    std::size_t placed = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        std::vector<NodeId> layer;
        layer.reserve(current.size());
        for (std::size_t i : current) layer.push_back(ids[i]);
        std::sort(layer.begin(), layer.end());
        placed += current.size();
        for (std::size_t i : current) {
            for (std::size_t child : children[i]) {
                if (--remaining[child] == 0) next.push_back(child);
            }
        }
        result.layers.push_back(std::move(layer));
        current = std::move(next);
    }

    if (placed != n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (remaining[i] > 0) {
                throw GraphError("cycle detected through node " + std::to_string(ids[i]));
            }
        }
    }
    return result;
}

}  // namespace proofs
