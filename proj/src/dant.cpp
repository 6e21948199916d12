#include "proofs/dant.hpp"

#include <limits>
#include <stdexcept>

namespace proofs {

std::string_view dantName(DantFamily family) {
    switch (family) {
        case DantFamily::Straight: return "straight";
        case DantFamily::Branches: return "branches";
        case DantFamily::Tree: return "tree";
    }
    return "?";
}

std::string DantSpec::paramString() const {
    switch (family) {
        case DantFamily::Straight: return "n=" + std::to_string(n);
        case DantFamily::Branches: return "b=" + std::to_string(b) + ";n=" + std::to_string(n);
        case DantFamily::Tree: return "h=" + std::to_string(h);
    }
    return "?";
}

ProofGraph genStraight(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("genStraight: n must be >= 1");
    std::vector<ProofNode> nodes;
    nodes.reserve(n);
    Formula chain = Formula::atom("a0");
    nodes.push_back(ProofNode{0, chain, Rule::Assume, {}});
    for (std::uint32_t i = 1; i < n; ++i) {
        chain = Formula::disjunction(chain, Formula::atom("a" + std::to_string(i)));
        nodes.push_back(ProofNode{i, chain, Rule::OrIntroRight, {i - 1}});
    }
    return ProofGraph::fromNodes(std::move(nodes));
}

ProofGraph genBranches(std::uint32_t b, std::uint32_t n) {
    if (b < 1) throw std::invalid_argument("genBranches: b must be >= 1");
    const std::uint64_t total = std::uint64_t{b} * (n + 1) + (b - 1);
    if (total > std::numeric_limits<NodeId>::max()) {
        throw std::invalid_argument("genBranches: parameters overflow the id space");
    }
    std::vector<ProofNode> nodes;
    nodes.reserve(total);

    // Branch j occupies ids j*(n+1) .. j*(n+1)+n, assumption first.
    std::vector<Formula> tips;
    std::vector<NodeId> tipIds;
    tips.reserve(b);
    tipIds.reserve(b);
    for (std::uint32_t j = 0; j < b; ++j) {
        const NodeId base = j * (n + 1);
        const std::string prefix = "c" + std::to_string(j) + "_";
        Formula chain = Formula::atom(prefix + "0");
        nodes.push_back(ProofNode{base, chain, Rule::Assume, {}});
        for (std::uint32_t i = 1; i <= n; ++i) {
            chain = Formula::disjunction(chain, Formula::atom(prefix + std::to_string(i)));
            nodes.push_back(ProofNode{base + i, chain, Rule::OrIntroRight, {base + i - 1}});
        }
        tips.push_back(chain);
        tipIds.push_back(base + n);
    }

    // Fold the branch tips left to right with conjunction introductions.
    Formula acc = tips[0];
    NodeId accId = tipIds[0];
    NodeId next = b * (n + 1);
    for (std::uint32_t j = 1; j < b; ++j) {
        acc = Formula::conjunction(acc, tips[j]);
        nodes.push_back(ProofNode{next, acc, Rule::AndIntro, {accId, tipIds[j]}});
        accId = next;
        ++next;
    }
    return ProofGraph::fromNodes(std::move(nodes));
}

ProofGraph genTree(std::uint32_t h) {
    if (h > 24) throw std::invalid_argument("genTree: h above 24 is unsupported");
    const std::uint32_t leaves = std::uint32_t{1} << h;
    std::vector<ProofNode> nodes;
    nodes.reserve((std::size_t{2} << h) - 1);

    std::vector<Formula> level;
    std::vector<NodeId> levelIds;
    level.reserve(leaves);
    levelIds.reserve(leaves);
    for (std::uint32_t i = 0; i < leaves; ++i) {
        Formula f = Formula::atom("t" + std::to_string(i));
        nodes.push_back(ProofNode{i, f, Rule::Assume, {}});
        level.push_back(std::move(f));
        levelIds.push_back(i);
    }

    NodeId next = leaves;
    while (level.size() > 1) {
        std::vector<Formula> upper;
        std::vector<NodeId> upperIds;
        upper.reserve(level.size() / 2);
        upperIds.reserve(level.size() / 2);
        for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
            Formula f = Formula::conjunction(level[k], level[k + 1]);
            nodes.push_back(ProofNode{next, f, Rule::AndIntro, {levelIds[k], levelIds[k + 1]}});
            upper.push_back(std::move(f));
            upperIds.push_back(next);
            ++next;
        }
        level = std::move(upper);
        levelIds = std::move(upperIds);
    }
    return ProofGraph::fromNodes(std::move(nodes));
}

ProofGraph generate(const DantSpec& spec) {
    switch (spec.family) {
        case DantFamily::Straight: return genStraight(spec.n);
        case DantFamily::Branches: return genBranches(spec.b, spec.n);
        case DantFamily::Tree: return genTree(spec.h);
    }
    throw std::invalid_argument("unknown DANT family");
}

}  // namespace proofs
