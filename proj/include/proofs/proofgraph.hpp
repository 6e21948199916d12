#ifndef PROOFS_PROOFGRAPH_HPP
#define PROOFS_PROOFGRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "proofs/formula.hpp"

namespace proofs {

using NodeId = std::uint32_t;

// One variant per inference schema, plus the assumption rule.
enum class Rule : std::uint8_t {
    Assume,
    AndIntro,
    AndElimLeft,
    AndElimRight,
    OrIntroLeft,
    OrIntroRight,
    OrElim,
    ImpIntro,
    ImpElim,
    NotIntro,
    NotElim,
    IffIntro,
    IffElimLeft,
    IffElimRight,
};

inline constexpr int kRuleCount = 14;

// Wire names used by the JSON format: assume, andI, andEl, andEr, orIl,
// orIr, orE, impI, impE, notI, notE, iffI, iffEl, iffEr.
std::string_view ruleName(Rule rule);
std::optional<Rule> ruleFromName(std::string_view name);

// Number of premises the rule requires.
int ruleArity(Rule rule);

// A statement node together with its (unique) incoming hyperedge: the
// justification rule and the premise set.
struct ProofNode {
    NodeId id = 0;
    Formula formula;
    Rule rule = Rule::Assume;
    std::vector<NodeId> premises;  // sorted, unique

    bool operator==(const ProofNode& other) const;
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed acyclic hypergraph of proof statements. Immutable once built;
// concurrent reads are safe. Construction validates: unique ids, premises
// referencing existing nodes, premise counts matching rule arity, Assume
// nodes having no premises, and acyclicity of the premise relation.
class ProofGraph {
public:
    ProofGraph() = default;

    static ProofGraph fromNodes(std::vector<ProofNode> nodes);

    // JSON format:
    //   {"nodes":[{"id":0,"formula":"p","rule":"assume","premises":[]}, ...]}
    // Premise order in the array is not meaningful.
    static ProofGraph load(std::string_view json);
    std::string save() const;

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(NodeId id) const { return index_.count(id) != 0; }

    const ProofNode& node(NodeId id) const;

    // Node ids in ascending order.
    const std::vector<NodeId>& ids() const { return ids_; }

    // Position of id within ids(); throws GraphError on unknown id.
    std::size_t indexOf(NodeId id) const;

    // The nodes referenced by id's premises, in ascending id order.
    std::vector<const ProofNode*> parents(NodeId id) const;

    bool operator==(const ProofGraph& other) const;

private:
    std::unordered_map<NodeId, ProofNode> nodes_;
    std::vector<NodeId> ids_;
    std::unordered_map<NodeId, std::size_t> index_;

    void validate() const;
};

}  // namespace proofs

#endif  // PROOFS_PROOFGRAPH_HPP
