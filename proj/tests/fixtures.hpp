#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "proofs/dant.hpp"
#include "proofs/layering.hpp"
#include "proofs/proofgraph.hpp"
#include "proofs/rules.hpp"

namespace fixtures {

// {A | B, ~A} |- B: nine nodes, ids 1..9, root 9 justified by orE.
proofs::ProofGraph caseSplitProof();
inline constexpr proofs::NodeId kCaseSplitRoot = 9;

// {~(p | q)} |- ~p: four nodes, ids 0..3, root 3 justified by notI.
proofs::ProofGraph negationProof();

// (p | (q & r)) <-> ((p | q) & (p | r)): 26 nodes, ids 0..25, proved in both
// directions via orE and combined by iffI at node 0. Six layers.
proofs::ProofGraph distributivityProof();

// The expected layer partition of distributivityProof().
const std::vector<std::vector<proofs::NodeId>>& distributivityLayers();

// Random formula over the given atom names, up to maxDepth connectives deep.
proofs::Formula randomFormula(std::mt19937& rng, const std::vector<std::string>& pool,
                              int maxDepth);

struct ProofGenOptions {
    std::size_t targetNodes = 24;
    int atomCount = 8;       // size of the atom pool
    int formulaDepth = 2;    // depth of injected random formulas
};

// Grows a proof that is valid by construction and exercises every rule the
// sampler can place. Node ids are dense 0..size-1 in dependency order.
proofs::ProofGraph randomValidProof(std::mt19937& rng, const ProofGenOptions& opts = {});

enum class MutationKind { RuleSwap, FormulaEdit, PremiseRewire };

// Applies one structure-preserving mutation (the result still loads: arities,
// acyclicity and the assume invariant hold). Returns nullopt when the graph
// offers no opportunity for the drawn mutation.
std::optional<proofs::ProofGraph> mutateGraph(std::mt19937& rng, const proofs::ProofGraph& graph);

// Independent oracles, deliberately unrelated to the library's sweeps.
bool hasCycleDfs(const std::vector<proofs::ProofNode>& nodes);
bool isTopologicalOrder(const proofs::ProofGraph& graph, const std::vector<proofs::NodeId>& order);

}  // namespace fixtures

#endif  // TESTS_FIXTURES_HPP
