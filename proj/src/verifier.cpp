#include "proofs/verifier.hpp"

#include <algorithm>
#include <barrier>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace proofs {

std::string_view strategyName(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Serial: return "serial";
        case StrategyKind::Parallel: return "parallel";
        case StrategyKind::LoadBalance: return "loadbalance";
        case StrategyKind::SyntaxFirst: return "syntaxfirst";
    }
    return "?";
}

std::optional<StrategyKind> strategyFromName(std::string_view name) {
    for (StrategyKind k : {StrategyKind::Serial, StrategyKind::Parallel, StrategyKind::LoadBalance,
                           StrategyKind::SyntaxFirst}) {
        if (strategyName(k) == name) return k;
    }
    return std::nullopt;
}

std::string_view failureReasonName(FailureReason reason) {
    switch (reason) {
        case FailureReason::Syntax: return "syntax";
        case FailureReason::AssumptionConstraint: return "assumption-constraint";
    }
    return "?";
}

namespace {

// Contiguous block [begin, end) of a list of n items for worker w of T;
// block sizes differ by at most one, larger blocks first.
std::pair<std::size_t, std::size_t> blockRange(std::size_t n, unsigned T, unsigned w) {
    const std::size_t base = n / T;
    const std::size_t rem = n % T;
    const std::size_t begin = w * base + std::min<std::size_t>(w, rem);
    return {begin, begin + base + (w < rem ? 1 : 0)};
}

void gatherParents(const ProofGraph& graph, const ProofNode& node,
                   std::vector<ParentFormula>& buf) {
    buf.clear();
    for (NodeId p : node.premises) buf.push_back(ParentFormula{p, graph.node(p).formula});
}

void sortFailures(std::vector<Failure>& failures) {
    std::sort(failures.begin(), failures.end(),
              [](const Failure& a, const Failure& b) { return a.node < b.node; });
}

void runSerial(const ProofGraph& graph, const LayerMap& layers, Verdict& out) {
    AssumptionMap assumptions;
    assumptions.reserve(graph.size());
    std::vector<ParentFormula> parentBuf;
    std::vector<std::pair<NodeId, AssumptionSet>> layerSets;

    for (const std::vector<NodeId>& layer : layers.layers) {
        layerSets.clear();
        for (NodeId id : layer) {
            const ProofNode& node = graph.node(id);
            gatherParents(graph, node, parentBuf);
            ++out.stats.syntaxChecks;
            auto roles = syntaxCheck(node.rule, node.formula, parentBuf);
            if (!roles) {
                out.failures.push_back(Failure{id, FailureReason::Syntax});
            } else if (!assumptionCheck(*roles, assumptions, graph)) {
                out.failures.push_back(Failure{id, FailureReason::AssumptionConstraint});
            } else {
                layerSets.emplace_back(id,
                                       computeAssumptions(node.rule, *roles, id, assumptions, graph));
                ++out.stats.nodesVerified;
                continue;
            }
            // first failing node: stop immediately
            out.valid = false;
            out.assumptions = std::move(assumptions);
            return;
        }
        for (auto& [id, set] : layerSets) assumptions.emplace(id, std::move(set));
        ++out.stats.layersProcessed;
    }
    out.valid = true;
    out.assumptions = std::move(assumptions);
}

// Fork-join engine shared by the Parallel, LoadBalance and SyntaxFirst
// strategies. A fixed pool of `threads` workers (the caller participates as
// worker 0) processes one layer per barrier phase; the barrier completion
// step performs the reductions, merges the layer's slot vector into the
// global assumption map, and advances to the next layer. Within a layer the
// global map is read-only and each slot is written by exactly one worker.
class Engine {
public:
    Engine(const ProofGraph& graph, const LayerMap& layers, StrategyKind kind, unsigned threads)
        : graph_(graph),
          layers_(layers),
          kind_(kind),
          threads_(threads),
          workers_(threads),
          barrier_(static_cast<std::ptrdiff_t>(threads), Completion{this}) {
        assumptions_.reserve(graph.size());
        if (kind_ == StrategyKind::LoadBalance) {
            allNodes_ = layers_.flatten();
            layerEnd_.reserve(layers_.layers.size());
            std::size_t acc = 0;
            for (const auto& layer : layers_.layers) {
                acc += layer.size();
                layerEnd_.push_back(acc);
            }
        }
        if (kind_ != StrategyKind::Parallel) {
            storedRoles_.resize(graph.size());
        }
        phase_ = (kind_ == StrategyKind::SyntaxFirst) ? Phase::SyntaxSweep : Phase::Layer;
        if (phase_ == Phase::Layer) prepareLayer();
    }

    void run(Verdict& out) {
        std::vector<std::jthread> pool;
        pool.reserve(threads_ - 1);
        for (unsigned w = 1; w < threads_; ++w) {
            pool.emplace_back([this, w] { workerMain(w); });
        }
        workerMain(0);
        pool.clear();  // join

        out.valid = valid_;
        out.failures = std::move(failures_);
        out.assumptions = std::move(assumptions_);
        out.stats.layersProcessed = layersProcessed_;
        out.stats.nodesVerified = nodesVerified_;
        out.stats.syntaxChecks = syntaxChecks_;
    }

private:
    enum class Phase { SyntaxSweep, Layer, Done };

    struct Completion {
        Engine* engine;
        void operator()() noexcept { engine->onPhaseDone(); }
    };

    // Written only by the owning worker during a phase; read by the
    // completion step.
    struct WorkerState {
        bool ok = true;
        std::vector<Failure> failures;
        std::size_t syntaxChecks = 0;
        std::size_t verified = 0;
        std::vector<ParentFormula> parentBuf;

        void resetForPhase() {
            ok = true;
            failures.clear();
            syntaxChecks = 0;
            verified = 0;
        }
    };

    void workerMain(unsigned w) {
        if (kind_ == StrategyKind::SyntaxFirst) {
            syntaxSweep(w);
            barrier_.arrive_and_wait();
        }
        while (phase_ == Phase::Layer) {
            processLayer(w);
            barrier_.arrive_and_wait();
        }
    }

    void syntaxSweep(unsigned w) {
        WorkerState& st = workers_[w];
        st.resetForPhase();
        const std::vector<NodeId>& ids = graph_.ids();
        auto [begin, end] = blockRange(ids.size(), threads_, w);
        for (std::size_t i = begin; i < end; ++i) {
            const ProofNode& node = graph_.node(ids[i]);
            gatherParents(graph_, node, st.parentBuf);
            ++st.syntaxChecks;
            auto roles = syntaxCheck(node.rule, node.formula, st.parentBuf);
            if (!roles) {
                st.ok = false;
                st.failures.push_back(Failure{ids[i], FailureReason::Syntax});
            } else {
                storedRoles_[i] = std::move(roles);  // i == indexOf(ids[i])
            }
        }
    }

    void processLayer(unsigned w) {
        WorkerState& st = workers_[w];
        st.resetForPhase();
        const std::vector<NodeId>& layer = layers_.layers[layerIdx_];
        auto [begin, end] = blockRange(layer.size(), threads_, w);

        for (std::size_t i = begin; i < end; ++i) {
            const NodeId id = layer[i];
            const ProofNode& node = graph_.node(id);

            const RoleAssignment* roles = nullptr;
            std::optional<RoleAssignment> fresh;
            if (kind_ != StrategyKind::Parallel) {
                if (const auto& stored = storedRoles_[graph_.indexOf(id)]) roles = &*stored;
            }
            if (roles == nullptr) {
                gatherParents(graph_, node, st.parentBuf);
                ++st.syntaxChecks;
                fresh = syntaxCheck(node.rule, node.formula, st.parentBuf);
                if (!fresh) {
                    st.ok = false;
                    st.failures.push_back(Failure{id, FailureReason::Syntax});
                    continue;
                }
                roles = &*fresh;
            }

            if (!assumptionCheck(*roles, assumptions_, graph_)) {
                st.ok = false;
                st.failures.push_back(Failure{id, FailureReason::AssumptionConstraint});
                continue;
            }

#ifndef NDEBUG
            assert(slotOwner_[i] == -1 && "aIds slot written twice");
            slotOwner_[i] = static_cast<int>(w);
#endif
            slots_[i] = computeAssumptions(node.rule, *roles, id, assumptions_, graph_);
            slotWritten_[i] = 1;
            ++st.verified;
        }

        if (kind_ == StrategyKind::LoadBalance) takeExtraSyntaxNode(w, layer.size(), st);
    }

    // Spare workers (block smaller than the largest) syntax-check one
    // distinct node past max(frontier, end of current layer). Checked nodes
    // keep their role assignment and skip the syntax step in their own layer.
    void takeExtraSyntaxNode(unsigned w, std::size_t layerSize, WorkerState& st) {
        const std::size_t rem = layerSize % threads_;
        if (rem == 0) return;          // even split, nobody is spare
        if (w < rem) return;           // full-size block
        const std::size_t rank = w - rem;
        const std::size_t start = std::max(numSyntaxVerified_, layerEnd_[layerIdx_]);
        const std::size_t pos = start + rank;
        if (pos >= allNodes_.size()) return;

        const NodeId id = allNodes_[pos];
        const ProofNode& node = graph_.node(id);
        gatherParents(graph_, node, st.parentBuf);
        ++st.syntaxChecks;
        auto roles = syntaxCheck(node.rule, node.formula, st.parentBuf);
        if (!roles) {
            st.ok = false;
            st.failures.push_back(Failure{id, FailureReason::Syntax});
        } else {
            storedRoles_[graph_.indexOf(id)] = std::move(roles);
        }
    }

    void onPhaseDone() noexcept {
        bool allOk = true;
        std::size_t phaseSyntax = 0;
        for (WorkerState& st : workers_) {
            allOk = allOk && st.ok;  // AND-reduction
            phaseSyntax += st.syntaxChecks;  // SUM-reduction
            nodesVerified_ += st.verified;
        }
        syntaxChecks_ += phaseSyntax;

        if (phase_ == Phase::SyntaxSweep) {
            if (!allOk) {
                finishInvalid();
            } else {
                phase_ = Phase::Layer;
                prepareLayer();
            }
            return;
        }

        if (kind_ == StrategyKind::LoadBalance) numSyntaxVerified_ += phaseSyntax;

        if (!allOk) {
            finishInvalid();
            return;
        }

        const std::vector<NodeId>& layer = layers_.layers[layerIdx_];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            assert(slotWritten_[i]);
            assumptions_.emplace(layer[i], std::move(slots_[i]));
        }
        ++layersProcessed_;
        ++layerIdx_;
        if (layerIdx_ == layers_.layers.size()) {
            valid_ = true;
            phase_ = Phase::Done;
        } else {
            prepareLayer();
        }
    }

    void prepareLayer() {
        const std::size_t n = layers_.layers[layerIdx_].size();
        slots_.assign(n, AssumptionSet{});
        slotWritten_.assign(n, 0);
#ifndef NDEBUG
        slotOwner_.assign(n, -1);
#endif
    }

    void finishInvalid() {
        for (WorkerState& st : workers_) {
            failures_.insert(failures_.end(), st.failures.begin(), st.failures.end());
        }
        sortFailures(failures_);
        valid_ = false;
        phase_ = Phase::Done;
    }

    const ProofGraph& graph_;
    const LayerMap& layers_;
    const StrategyKind kind_;
    const unsigned threads_;

    Phase phase_ = Phase::Layer;
    std::size_t layerIdx_ = 0;

    AssumptionMap assumptions_;
    std::vector<AssumptionSet> slots_;      // aIds for the current layer
    std::vector<std::uint8_t> slotWritten_;
#ifndef NDEBUG
    std::vector<int> slotOwner_;
#endif
    std::vector<std::optional<RoleAssignment>> storedRoles_;  // by dense node index

    std::vector<NodeId> allNodes_;   // LoadBalance: layers flattened
    std::vector<std::size_t> layerEnd_;  // LoadBalance: position one past each layer
    std::size_t numSyntaxVerified_ = 0;

    std::vector<WorkerState> workers_;
    std::barrier<Completion> barrier_;

    bool valid_ = false;
    std::vector<Failure> failures_;
    std::size_t layersProcessed_ = 0;
    std::size_t nodesVerified_ = 0;
    std::size_t syntaxChecks_ = 0;
};

}  // namespace

Verdict verify(const ProofGraph& graph, const Strategy& strategy) {
    if (strategy.threads < 1) throw std::invalid_argument("strategy.threads must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    Verdict out;

    LayerMap layers = computeLayers(graph);

    if (graph.empty()) {
        out.valid = true;
    } else if (strategy.kind == StrategyKind::Serial) {
        runSerial(graph, layers, out);
    } else {
        Engine engine(graph, layers, strategy.kind, strategy.threads);
        engine.run(out);
    }

    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace proofs
