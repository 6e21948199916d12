#include "fixtures.hpp"

#include <algorithm>
#include <unordered_map>

namespace fixtures {

using namespace proofs;

ProofGraph caseSplitProof() {
    const Formula A = Formula::atom("A");
    const Formula B = Formula::atom("B");
    const Formula nA = Formula::negation(A);
    const Formula nB = Formula::negation(B);
    std::vector<ProofNode> nodes;
    nodes.push_back(ProofNode{1, nA, Rule::Assume, {}});
    nodes.push_back(ProofNode{2, nB, Rule::Assume, {}});
    nodes.push_back(ProofNode{3, Formula::conjunction(nA, nB), Rule::AndIntro, {1, 2}});
    nodes.push_back(ProofNode{4, nA, Rule::AndElimLeft, {3}});
    nodes.push_back(ProofNode{5, A, Rule::Assume, {}});
    nodes.push_back(ProofNode{6, B, Rule::NotElim, {4, 5}});
    nodes.push_back(ProofNode{7, B, Rule::Assume, {}});
    nodes.push_back(ProofNode{8, Formula::disjunction(A, B), Rule::Assume, {}});
    nodes.push_back(ProofNode{9, B, Rule::OrElim, {6, 7, 8}});
    return ProofGraph::fromNodes(std::move(nodes));
}

ProofGraph negationProof() {
    const Formula p = Formula::atom("p");
    const Formula q = Formula::atom("q");
    const Formula pq = Formula::disjunction(p, q);
    std::vector<ProofNode> nodes;
    nodes.push_back(ProofNode{0, p, Rule::Assume, {}});
    nodes.push_back(ProofNode{1, pq, Rule::OrIntroRight, {0}});
    nodes.push_back(ProofNode{2, Formula::negation(pq), Rule::Assume, {}});
    nodes.push_back(ProofNode{3, Formula::negation(p), Rule::NotIntro, {1, 2}});
    return ProofGraph::fromNodes(std::move(nodes));
}

ProofGraph distributivityProof() {
    const Formula p = Formula::atom("p");
    const Formula q = Formula::atom("q");
    const Formula r = Formula::atom("r");
    const Formula qr = Formula::conjunction(q, r);
    const Formula x = Formula::disjunction(p, qr);                     // p | (q & r)
    const Formula pq = Formula::disjunction(p, q);
    const Formula pr = Formula::disjunction(p, r);
    const Formula y = Formula::conjunction(pq, pr);                    // (p | q) & (p | r)

    std::vector<ProofNode> nodes;
    auto add = [&](NodeId id, Formula f, Rule rule, std::vector<NodeId> premises) {
        nodes.push_back(ProofNode{id, std::move(f), rule, std::move(premises)});
    };

    // Forward direction: from assuming x, derive y by cases on x.
    add(2, x, Rule::Assume, {});
    add(4, p, Rule::Assume, {});
    add(7, qr, Rule::Assume, {});
    add(5, pq, Rule::OrIntroRight, {4});
    add(6, pr, Rule::OrIntroRight, {4});
    add(8, q, Rule::AndElimLeft, {7});
    add(9, r, Rule::AndElimRight, {7});
    add(3, y, Rule::AndIntro, {5, 6});
    add(11, pq, Rule::OrIntroLeft, {8});
    add(10, pr, Rule::OrIntroLeft, {9});
    add(12, y, Rule::AndIntro, {11, 10});
    add(1, y, Rule::OrElim, {2, 3, 12});

    // Backward direction: from assuming y, derive x by cases on p | q, with
    // nested cases on p | r in the q branch.
    add(16, y, Rule::Assume, {});
    add(18, p, Rule::Assume, {});
    add(23, p, Rule::Assume, {});
    add(20, q, Rule::Assume, {});
    add(24, r, Rule::Assume, {});
    add(14, pq, Rule::AndElimLeft, {16});
    add(15, pr, Rule::AndElimRight, {16});
    add(17, x, Rule::OrIntroRight, {18});
    add(21, x, Rule::OrIntroRight, {23});
    add(25, qr, Rule::AndIntro, {20, 24});
    add(22, x, Rule::OrIntroLeft, {25});
    add(19, x, Rule::OrElim, {15, 21, 22});
    add(13, x, Rule::OrElim, {14, 17, 19});

    add(0, Formula::biconditional(x, y), Rule::IffIntro, {1, 13});
    return ProofGraph::fromNodes(std::move(nodes));
}

const std::vector<std::vector<NodeId>>& distributivityLayers() {
    static const std::vector<std::vector<NodeId>> layers = {
        {2, 4, 7, 16, 18, 20, 23, 24},
        {5, 6, 8, 9, 14, 15, 17, 21, 25},
        {3, 10, 11, 22},
        {12, 19},
        {1, 13},
        {0},
    };
    return layers;
}

Formula randomFormula(std::mt19937& rng, const std::vector<std::string>& pool, int maxDepth) {
    std::uniform_int_distribution<int> atomPick(0, static_cast<int>(pool.size()) - 1);
    if (maxDepth <= 0) return Formula::atom(pool[atomPick(rng)]);
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
        case 0:
        case 1:
        case 2:  // lean toward atoms so formulas stay small
            return Formula::atom(pool[atomPick(rng)]);
        case 3:
            return Formula::negation(randomFormula(rng, pool, maxDepth - 1));
        case 4:
            return Formula::conjunction(randomFormula(rng, pool, maxDepth - 1),
                                        randomFormula(rng, pool, maxDepth - 1));
        case 5:
            return Formula::disjunction(randomFormula(rng, pool, maxDepth - 1),
                                        randomFormula(rng, pool, maxDepth - 1));
        case 6:
            return Formula::implication(randomFormula(rng, pool, maxDepth - 1),
                                        randomFormula(rng, pool, maxDepth - 1));
        default:
            return Formula::biconditional(randomFormula(rng, pool, maxDepth - 1),
                                          randomFormula(rng, pool, maxDepth - 1));
    }
}

namespace {

// Growing proof under construction; ids are dense, id == index.
class ProofBuilder {
public:
    ProofBuilder(std::mt19937& rng, const ProofGenOptions& opts) : rng_(rng), opts_(opts) {
        for (int i = 0; i < opts.atomCount; ++i) pool_.push_back("v" + std::to_string(i));
    }

    ProofGraph build() {
        const int seeds = 2 + pick(2);
        for (int i = 0; i < seeds; ++i) addAssume(randomFormula(rng_, pool_, opts_.formulaDepth));
        std::size_t stuck = 0;
        while (nodes_.size() < opts_.targetNodes && stuck < 200) {
            if (growOnce()) {
                stuck = 0;
            } else {
                ++stuck;
            }
        }
        return ProofGraph::fromNodes(nodes_);
    }

private:
    std::mt19937& rng_;
    ProofGenOptions opts_;
    std::vector<std::string> pool_;
    std::vector<ProofNode> nodes_;
    std::vector<AssumptionSet> sets_;  // tracked per node, mirrors the rules

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    NodeId randomNode() { return static_cast<NodeId>(pick(static_cast<int>(nodes_.size()))); }

    const Formula& formulaOf(NodeId id) { return nodes_[id].formula; }

    AssumptionSet unionSets(std::initializer_list<NodeId> parents) {
        AssumptionSet out;
        for (NodeId p : parents) {
            out.insert(out.end(), sets_[p].begin(), sets_[p].end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    AssumptionSet minusFormula(const AssumptionSet& set, const Formula& f) {
        AssumptionSet out;
        for (NodeId id : set) {
            if (!(formulaOf(id) == f)) out.push_back(id);
        }
        return out;
    }

    NodeId addNode(Formula f, Rule rule, std::vector<NodeId> premises, AssumptionSet set) {
        const NodeId id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(ProofNode{id, std::move(f), rule, std::move(premises)});
        sets_.push_back(std::move(set));
        return id;
    }

    NodeId addAssume(Formula f) {
        const NodeId id = static_cast<NodeId>(nodes_.size());
        return addNode(std::move(f), Rule::Assume, {}, AssumptionSet{id});
    }

    // One growth step; false when the drawn rule found no opportunity.
    bool growOnce() {
        switch (pick(12)) {
            case 0: {  // fresh assumption
                addAssume(randomFormula(rng_, pool_, opts_.formulaDepth));
                return true;
            }
            case 1: {  // conjunction introduction
                NodeId a = randomNode(), b = randomNode();
                if (a == b) return false;
                addNode(Formula::conjunction(formulaOf(a), formulaOf(b)), Rule::AndIntro, {a, b},
                        unionSets({a, b}));
                return true;
            }
            case 2: {  // conjunction elimination
                NodeId a = randomNode();
                if (formulaOf(a).kind() != Connective::And) return false;
                const bool leftSide = pick(2) == 0;
                addNode(leftSide ? formulaOf(a).left() : formulaOf(a).right(),
                        leftSide ? Rule::AndElimLeft : Rule::AndElimRight, {a}, unionSets({a}));
                return true;
            }
            case 3: {  // disjunction introduction
                NodeId a = randomNode();
                Formula extra = randomFormula(rng_, pool_, opts_.formulaDepth);
                if (pick(2) == 0) {
                    addNode(Formula::disjunction(extra, formulaOf(a)), Rule::OrIntroLeft, {a},
                            unionSets({a}));
                } else {
                    addNode(Formula::disjunction(formulaOf(a), extra), Rule::OrIntroRight, {a},
                            unionSets({a}));
                }
                return true;
            }
            case 4: {  // proof by cases over any disjunction-shaped node
                NodeId d = findShaped(Connective::Or);
                if (d == kNone) return false;
                const Formula psi = formulaOf(d).left();
                const Formula phi = formulaOf(d).right();
                const Formula conclusion = formulaOf(d);
                NodeId la = addAssume(psi);
                NodeId l = addNode(conclusion, Rule::OrIntroRight, {la}, unionSets({la}));
                NodeId ra = addAssume(phi);
                NodeId rr = addNode(conclusion, Rule::OrIntroLeft, {ra}, unionSets({ra}));
                AssumptionSet set = unionSets({d});  // both cases discharge fully
                addNode(conclusion, Rule::OrElim, {d, l, rr}, std::move(set));
                return true;
            }
            case 5: {  // implication introduction discharging a live assumption
                NodeId a = randomNode();
                if (sets_[a].empty()) return false;
                const Formula discharged = formulaOf(sets_[a][pick(static_cast<int>(sets_[a].size()))]);
                addNode(Formula::implication(discharged, formulaOf(a)), Rule::ImpIntro, {a},
                        minusFormula(sets_[a], discharged));
                return true;
            }
            case 6: {  // modus ponens against a fresh implication assumption
                NodeId a = randomNode();
                Formula consequent = randomFormula(rng_, pool_, opts_.formulaDepth);
                NodeId imp = addAssume(Formula::implication(formulaOf(a), consequent));
                addNode(std::move(consequent), Rule::ImpElim, {a, imp}, unionSets({a, imp}));
                return true;
            }
            case 7: {  // negation introduction
                NodeId a = randomNode();
                if (sets_[a].empty()) return false;
                const Formula target = formulaOf(sets_[a][pick(static_cast<int>(sets_[a].size()))]);
                NodeId na = addAssume(Formula::negation(formulaOf(a)));
                AssumptionSet set = minusFormula(sets_[a], target);
                set.push_back(na);
                std::sort(set.begin(), set.end());
                addNode(Formula::negation(target), Rule::NotIntro, {a, na}, std::move(set));
                return true;
            }
            case 8: {  // negation elimination
                NodeId a = randomNode();
                std::optional<Formula> target = negatedMember(a);
                if (!target) return false;
                NodeId na = addAssume(Formula::negation(formulaOf(a)));
                AssumptionSet set = minusFormula(sets_[a], Formula::negation(*target));
                set.push_back(na);
                std::sort(set.begin(), set.end());
                addNode(std::move(*target), Rule::NotElim, {a, na}, std::move(set));
                return true;
            }
            case 9: {  // biconditional introduction over twin assumptions
                Formula f = randomFormula(rng_, pool_, opts_.formulaDepth);
                NodeId a = addAssume(f);
                NodeId b = addAssume(f);
                addNode(Formula::biconditional(f, f), Rule::IffIntro, {a, b}, AssumptionSet{});
                return true;
            }
            case 10: {  // biconditional elimination, left to right
                NodeId a = randomNode();
                Formula other = randomFormula(rng_, pool_, opts_.formulaDepth);
                NodeId iff = addAssume(Formula::biconditional(formulaOf(a), other));
                addNode(std::move(other), Rule::IffElimLeft, {a, iff}, unionSets({a, iff}));
                return true;
            }
            default: {  // biconditional elimination, right to left
                NodeId a = randomNode();
                Formula other = randomFormula(rng_, pool_, opts_.formulaDepth);
                NodeId iff = addAssume(Formula::biconditional(other, formulaOf(a)));
                addNode(std::move(other), Rule::IffElimRight, {a, iff}, unionSets({a, iff}));
                return true;
            }
        }
    }

    static constexpr NodeId kNone = static_cast<NodeId>(-1);

    NodeId findShaped(Connective kind) {
        std::vector<NodeId> hits;
        for (const ProofNode& n : nodes_) {
            if (n.formula.kind() == kind) hits.push_back(n.id);
        }
        if (hits.empty()) return kNone;
        return hits[pick(static_cast<int>(hits.size()))];
    }

    // A formula chi such that ~chi appears among a's assumptions.
    std::optional<Formula> negatedMember(NodeId a) {
        std::vector<Formula> candidates;
        for (NodeId id : sets_[a]) {
            if (formulaOf(id).kind() == Connective::Not) candidates.push_back(formulaOf(id).child());
        }
        if (candidates.empty()) return std::nullopt;
        return candidates[pick(static_cast<int>(candidates.size()))];
    }
};

}  // namespace

ProofGraph randomValidProof(std::mt19937& rng, const ProofGenOptions& opts) {
    return ProofBuilder(rng, opts).build();
}

std::optional<ProofGraph> mutateGraph(std::mt19937& rng, const ProofGraph& graph) {
    if (graph.empty()) return std::nullopt;
    std::vector<ProofNode> nodes;
    nodes.reserve(graph.size());
    for (NodeId id : graph.ids()) nodes.push_back(graph.node(id));

    auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    const auto kind = static_cast<MutationKind>(pick(3));

    switch (kind) {
        case MutationKind::RuleSwap: {
            static const std::vector<std::vector<Rule>> byArity = {
                {},  // Assume has no same-arity alternative
                {Rule::AndElimLeft, Rule::AndElimRight, Rule::OrIntroLeft, Rule::OrIntroRight,
                 Rule::ImpIntro},
                {Rule::AndIntro, Rule::ImpElim, Rule::NotIntro, Rule::NotElim, Rule::IffIntro,
                 Rule::IffElimLeft, Rule::IffElimRight},
                {},  // OrElim is the only ternary rule
            };
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                if (byArity[ruleArity(nodes[i].rule)].size() > 1) candidates.push_back(i);
            }
            if (candidates.empty()) return std::nullopt;
            ProofNode& victim = nodes[candidates[pick(static_cast<int>(candidates.size()))]];
            const auto& alternatives = byArity[ruleArity(victim.rule)];
            Rule replacement;
            do {
                replacement = alternatives[pick(static_cast<int>(alternatives.size()))];
            } while (replacement == victim.rule);
            victim.rule = replacement;
            break;
        }
        case MutationKind::FormulaEdit: {
            static const std::vector<std::string> pool = {"m0", "m1", "m2"};
            ProofNode& victim = nodes[pick(static_cast<int>(nodes.size()))];
            Formula replacement = randomFormula(rng, pool, 2);
            int guard = 0;
            while (replacement == victim.formula && guard++ < 8) {
                replacement = randomFormula(rng, pool, 2);
            }
            if (replacement == victim.formula) return std::nullopt;
            victim.formula = std::move(replacement);
            break;
        }
        case MutationKind::PremiseRewire: {
            const LayerMap layers = computeLayers(graph);
            std::unordered_map<NodeId, std::size_t> depth;
            for (std::size_t k = 0; k < layers.layers.size(); ++k) {
                for (NodeId id : layers.layers[k]) depth[id] = k;
            }
            std::vector<std::size_t> withPremises;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                if (!nodes[i].premises.empty()) withPremises.push_back(i);
            }
            if (withPremises.empty()) return std::nullopt;
            ProofNode& victim = nodes[withPremises[pick(static_cast<int>(withPremises.size()))]];

            std::vector<NodeId> shallower;
            for (const ProofNode& n : nodes) {
                if (depth[n.id] < depth[victim.id] &&
                    std::find(victim.premises.begin(), victim.premises.end(), n.id) ==
                        victim.premises.end()) {
                    shallower.push_back(n.id);
                }
            }
            if (shallower.empty()) return std::nullopt;
            victim.premises[pick(static_cast<int>(victim.premises.size()))] =
                shallower[pick(static_cast<int>(shallower.size()))];
            break;
        }
    }
    return ProofGraph::fromNodes(std::move(nodes));
}

bool hasCycleDfs(const std::vector<ProofNode>& nodes) {
    std::unordered_map<NodeId, const ProofNode*> byId;
    for (const ProofNode& n : nodes) byId[n.id] = &n;

    enum class Mark : std::uint8_t { White, Grey, Black };
    std::unordered_map<NodeId, Mark> mark;
    for (const ProofNode& n : nodes) mark[n.id] = Mark::White;

    for (const ProofNode& root : nodes) {
        if (mark[root.id] != Mark::White) continue;
        // explicit stack of (node, next premise index)
        std::vector<std::pair<NodeId, std::size_t>> stack{{root.id, 0}};
        mark[root.id] = Mark::Grey;
        while (!stack.empty()) {
            auto& [id, next] = stack.back();
            const ProofNode* n = byId[id];
            if (next < n->premises.size()) {
                const NodeId p = n->premises[next++];
                auto it = byId.find(p);
                if (it == byId.end()) continue;  // dangling: not a cycle matter
                if (mark[p] == Mark::Grey) return true;
                if (mark[p] == Mark::White) {
                    mark[p] = Mark::Grey;
                    stack.emplace_back(p, 0);
                }
            } else {
                mark[id] = Mark::Black;
                stack.pop_back();
            }
        }
    }
    return false;
}

bool isTopologicalOrder(const ProofGraph& graph, const std::vector<NodeId>& order) {
    if (order.size() != graph.size()) return false;
    std::unordered_map<NodeId, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!position.emplace(order[i], i).second) return false;  // duplicate
    }
    for (NodeId id : graph.ids()) {
        if (!position.count(id)) return false;
        for (NodeId p : graph.node(id).premises) {
            if (position.at(p) >= position.at(id)) return false;
        }
    }
    return true;
}

}  // namespace fixtures
