#ifndef PROOFS_DANT_HPP
#define PROOFS_DANT_HPP

#include <cstdint>
#include <string>

#include "proofs/proofgraph.hpp"

namespace proofs {

// Directed acyclic network topologies: parametric proof-graph families used
// as benchmark workloads. Every generated graph is a valid proof.
enum class DantFamily : std::uint8_t { Straight, Branches, Tree };

std::string_view dantName(DantFamily family);

struct DantSpec {
    DantFamily family = DantFamily::Straight;
    std::uint32_t n = 1;  // Straight: node count; Branches: branch length
    std::uint32_t b = 1;  // Branches: branch count
    std::uint32_t h = 0;  // Tree: height

    std::string paramString() const;  // e.g. "n=150", "b=150;n=100", "h=16"
};

// One assumption followed by n-1 chained disjunction introductions:
// n nodes, n singleton layers. Requires n >= 1.
ProofGraph genStraight(std::uint32_t n);

// b independent chains of length n (one assumption plus n disjunction
// introductions each), folded together left to right by b-1 conjunction
// introductions: b*(n+1) + (b-1) nodes. Requires b >= 1.
ProofGraph genBranches(std::uint32_t b, std::uint32_t n);

// 2^h assumptions pairwise combined by h rounds of conjunction introduction
// into a balanced binary tree: 2^(h+1) - 1 nodes. Requires h <= 24.
ProofGraph genTree(std::uint32_t h);

ProofGraph generate(const DantSpec& spec);

}  // namespace proofs

#endif  // PROOFS_DANT_HPP
