#ifndef PROOFS_VERIFIER_HPP
#define PROOFS_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "proofs/layering.hpp"
#include "proofs/proofgraph.hpp"
#include "proofs/rules.hpp"

namespace proofs {

enum class StrategyKind : std::uint8_t {
    Serial,       // one thread, layer by layer, stops at the first failure
    Parallel,     // per-layer fork-join with an AND-reduced layer verdict
    LoadBalance,  // Parallel plus look-ahead syntax checks on spare workers
    SyntaxFirst,  // one parallel syntax sweep, then per-layer assumption checks
};

std::string_view strategyName(StrategyKind kind);
std::optional<StrategyKind> strategyFromName(std::string_view name);

struct Strategy {
    StrategyKind kind = StrategyKind::Serial;
    unsigned threads = 1;  // ignored for Serial; must be >= 1
};

enum class FailureReason : std::uint8_t { Syntax, AssumptionConstraint };

std::string_view failureReasonName(FailureReason reason);

struct Failure {
    NodeId node;
    FailureReason reason;

    bool operator==(const Failure&) const = default;
};

struct VerifyStats {
    std::size_t layersProcessed = 0;  // fully completed layers
    std::size_t nodesVerified = 0;    // nodes that passed both checks
    std::size_t syntaxChecks = 0;     // schema shape checks performed (each node at most once)
    double seconds = 0.0;             // layering + verification wall clock
};

struct Verdict {
    bool valid = false;
    std::vector<Failure> failures;  // sorted by node id
    // Complete when valid; complete through the last fully processed layer
    // otherwise.
    AssumptionMap assumptions;
    VerifyStats stats;
};

// Verifies the graph under the chosen strategy. The validity bit is the same
// for every strategy and thread count; failure lists follow each strategy's
// stop semantics (Serial stops at the first failing node, the parallel
// strategies report every failure in the failing layer, SyntaxFirst reports
// every syntax failure when its sweep fails). An invalid proof is a normal
// Verdict; only structural errors (e.g. a cycle) throw.
Verdict verify(const ProofGraph& graph, const Strategy& strategy);

}  // namespace proofs

#endif  // PROOFS_VERIFIER_HPP
