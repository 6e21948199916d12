#include "proofs/rules.hpp"

#include <algorithm>
#include <array>

namespace proofs {

namespace {

// Shape test for one candidate role ordering. `ordered[i]` is the parent
// bound to role i. On success fills `out` with the bindings (including
// discharge formulae); on failure leaves it untouched.
bool matchRoles(Rule rule, const Formula& conclusion,
                std::span<const ParentFormula* const> ordered, std::vector<RoleBinding>& out) {
    auto bind = [&](const ParentFormula& p, std::optional<Formula> discharge = std::nullopt) {
        out.push_back(RoleBinding{p.id, std::move(discharge)});
    };
    switch (rule) {
        case Rule::Assume:
            return true;

        case Rule::AndIntro: {
            if (conclusion.kind() != Connective::And) return false;
            if (ordered[0]->formula != conclusion.left()) return false;
            if (ordered[1]->formula != conclusion.right()) return false;
            bind(*ordered[0]);
            bind(*ordered[1]);
            return true;
        }
        case Rule::AndElimLeft: {
            const Formula& p = ordered[0]->formula;
            if (p.kind() != Connective::And || p.left() != conclusion) return false;
            bind(*ordered[0]);
            return true;
        }
        case Rule::AndElimRight: {
            const Formula& p = ordered[0]->formula;
            if (p.kind() != Connective::And || p.right() != conclusion) return false;
            bind(*ordered[0]);
            return true;
        }
        case Rule::OrIntroLeft: {
            // parent phi, conclusion psi | phi
            if (conclusion.kind() != Connective::Or) return false;
            if (conclusion.right() != ordered[0]->formula) return false;
            bind(*ordered[0]);
            return true;
        }
        case Rule::OrIntroRight: {
            // parent phi, conclusion phi | psi
            if (conclusion.kind() != Connective::Or) return false;
            if (conclusion.left() != ordered[0]->formula) return false;
            bind(*ordered[0]);
            return true;
        }
        case Rule::OrElim: {
            const Formula& disj = ordered[0]->formula;
            if (disj.kind() != Connective::Or) return false;
            if (ordered[1]->formula != conclusion) return false;
            if (ordered[2]->formula != conclusion) return false;
            bind(*ordered[0]);
            bind(*ordered[1], disj.left());   // left case discharges psi
            bind(*ordered[2], disj.right());  // right case discharges phi
            return true;
        }
        case Rule::ImpIntro: {
            if (conclusion.kind() != Connective::Implies) return false;
            if (ordered[0]->formula != conclusion.right()) return false;
            bind(*ordered[0], conclusion.left());
            return true;
        }
        case Rule::ImpElim: {
            const Formula& imp = ordered[1]->formula;
            if (imp.kind() != Connective::Implies) return false;
            if (ordered[0]->formula != imp.left()) return false;
            if (conclusion != imp.right()) return false;
            bind(*ordered[0]);
            bind(*ordered[1]);
            return true;
        }
        case Rule::NotIntro:
        case Rule::NotElim: {
            // The two parents must be a complementary pair {chi, ~chi};
            // either may take the discharging role.
            const Formula& a = ordered[0]->formula;
            const Formula& b = ordered[1]->formula;
            const bool complementary =
                (b.kind() == Connective::Not && b.child() == a) ||
                (a.kind() == Connective::Not && a.child() == b);
            if (!complementary) return false;
            if (rule == Rule::NotIntro) {
                if (conclusion.kind() != Connective::Not) return false;
                bind(*ordered[0], conclusion.child());
            } else {
                bind(*ordered[0], Formula::negation(conclusion));
            }
            bind(*ordered[1]);
            return true;
        }
        case Rule::IffIntro: {
            if (conclusion.kind() != Connective::Iff) return false;
            if (ordered[0]->formula != conclusion.right()) return false;
            if (ordered[1]->formula != conclusion.left()) return false;
            bind(*ordered[0], conclusion.left());   // psi-parent discharges phi
            bind(*ordered[1], conclusion.right());  // phi-parent discharges psi
            return true;
        }
        case Rule::IffElimLeft: {
            const Formula& iff = ordered[1]->formula;
            if (iff.kind() != Connective::Iff) return false;
            if (ordered[0]->formula != iff.left()) return false;
            if (conclusion != iff.right()) return false;
            bind(*ordered[0]);
            bind(*ordered[1]);
            return true;
        }
        case Rule::IffElimRight: {
            const Formula& iff = ordered[1]->formula;
            if (iff.kind() != Connective::Iff) return false;
            if (ordered[0]->formula != iff.right()) return false;
            if (conclusion != iff.left()) return false;
            bind(*ordered[0]);
            bind(*ordered[1]);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<RoleAssignment> syntaxCheck(Rule rule, const Formula& conclusion,
                                          std::span<const ParentFormula> parents) {
    const int arity = ruleArity(rule);
    if (static_cast<int>(parents.size()) != arity) return std::nullopt;

    if (arity == 0) {
        return RoleAssignment{};
    }

    // Candidate orderings by ascending id tuple; the first match is the
    // lexicographically smallest, which keeps the result deterministic
    // across strategies and thread counts.
    std::array<const ParentFormula*, 3> order{};
    for (int i = 0; i < arity; ++i) order[i] = &parents[i];
    std::sort(order.begin(), order.begin() + arity,
              [](const ParentFormula* a, const ParentFormula* b) { return a->id < b->id; });

    std::vector<RoleBinding> bindings;
    bindings.reserve(arity);
    do {
        bindings.clear();
        if (matchRoles(rule, conclusion,
                       std::span<const ParentFormula* const>(order.data(), arity), bindings)) {
            return RoleAssignment{std::move(bindings)};
        }
    } while (std::next_permutation(order.begin(), order.begin() + arity,
                                   [](const ParentFormula* a, const ParentFormula* b) {
                                       return a->id < b->id;
                                   }));
    return std::nullopt;
}

namespace {

bool setContainsFormula(const AssumptionSet& set, const Formula& f, const ProofGraph& graph) {
    for (NodeId id : set) {
        if (graph.node(id).formula == f) return true;
    }
    return false;
}

}  // namespace

bool assumptionCheck(const RoleAssignment& roles, const AssumptionMap& assumptions,
                     const ProofGraph& graph) {
    for (const RoleBinding& r : roles.roles) {
        if (!r.discharge) continue;
        const AssumptionSet& set = assumptions.at(r.node);
        if (!setContainsFormula(set, *r.discharge, graph)) return false;
    }
    return true;
}

AssumptionSet computeAssumptions(Rule rule, const RoleAssignment& roles, NodeId selfId,
                                 const AssumptionMap& assumptions, const ProofGraph& graph) {
    if (rule == Rule::Assume) {
        return AssumptionSet{selfId};
    }
    AssumptionSet result;
    for (const RoleBinding& r : roles.roles) {
        const AssumptionSet& parentSet = assumptions.at(r.node);
        for (NodeId id : parentSet) {
            if (r.discharge && graph.node(id).formula == *r.discharge) continue;
            result.push_back(id);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace proofs
