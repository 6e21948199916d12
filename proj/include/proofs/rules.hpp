#ifndef PROOFS_RULES_HPP
#define PROOFS_RULES_HPP

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "proofs/proofgraph.hpp"

namespace proofs {

// Ids of the undischarged assumption nodes a statement depends on.
// Sorted, unique; every member references a node whose rule is Assume.
using AssumptionSet = std::vector<NodeId>;

// Global map from node id to its computed assumption set.
using AssumptionMap = std::unordered_map<NodeId, AssumptionSet>;

// One premise bound to a schema role. `discharge` is set when the schema
// removes that formula from this parent's assumption set (and requires it
// to be present there).
struct RoleBinding {
    NodeId node;
    std::optional<Formula> discharge;

    bool operator==(const RoleBinding& other) const {
        return node == other.node && discharge == other.discharge;
    }
};

// Premises assigned to schema roles, in the rule's canonical role order:
//   AndIntro:      [left-conjunct source, right-conjunct source]
//   OrElim:        [disjunct premise, left case, right case]
//   ImpElim:       [antecedent, implication]
//   NotIntro/Elim: [discharging parent, complementary parent]
//   IffIntro:      [right-side source, left-side source]
//   IffElim*:      [side premise, biconditional]
// Unary rules have a single role; Assume has none.
struct RoleAssignment {
    std::vector<RoleBinding> roles;

    bool operator==(const RoleAssignment& other) const { return roles == other.roles; }
};

struct ParentFormula {
    NodeId id;
    Formula formula;
};

// Shape-matches the conclusion and parent formulae against the rule's
// schema. Returns the matching assignment whose role-ordered id tuple is
// lexicographically smallest, or nullopt when no assignment matches.
// Expects exactly ruleArity(rule) parents with distinct ids.
std::optional<RoleAssignment> syntaxCheck(Rule rule, const Formula& conclusion,
                                          std::span<const ParentFormula> parents);

// True iff every discharge formula demanded by the assignment is present in
// the corresponding parent's assumption set, where "present" means some
// member id's node formula structurally equals the discharged formula.
// Parents' sets must already be in `assumptions`.
bool assumptionCheck(const RoleAssignment& roles, const AssumptionMap& assumptions,
                     const ProofGraph& graph);

// The node's assumption set: {selfId} for Assume, otherwise the union of the
// parents' sets with every id whose formula equals a role's discharge formula
// removed from that role's contribution.
AssumptionSet computeAssumptions(Rule rule, const RoleAssignment& roles, NodeId selfId,
                                 const AssumptionMap& assumptions, const ProofGraph& graph);

}  // namespace proofs

#endif  // PROOFS_RULES_HPP
