#ifndef PROOFS_LAYERING_HPP
#define PROOFS_LAYERING_HPP

#include <vector>

#include "proofs/proofgraph.hpp"

namespace proofs {

// Topological generations: layer 0 holds the assumptions, and every other
// node sits one past its deepest parent. Ids within a layer are ascending.
struct LayerMap {
    std::vector<std::vector<NodeId>> layers;

    std::size_t layerCount() const { return layers.size(); }

    // Layers concatenated in order; a valid topological order of the graph.
    std::vector<NodeId> flatten() const;
};

// Indegree-countdown sweep, linear in nodes + premise references. Throws
// GraphError if some node never becomes assignable (cannot happen for a
// validated graph; kept as a defensive re-check).
LayerMap computeLayers(const ProofGraph& graph);

}  // namespace proofs

#endif  // PROOFS_LAYERING_HPP
