#include "proofs/proofgraph.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <json.hpp>

namespace proofs {

namespace {

struct RuleEntry {
    Rule rule;
    std::string_view name;
    int arity;
};

constexpr std::array<RuleEntry, kRuleCount> kRuleTable{{
    {Rule::Assume, "assume", 0},
    {Rule::AndIntro, "andI", 2},
    {Rule::AndElimLeft, "andEl", 1},
    {Rule::AndElimRight, "andEr", 1},
    {Rule::OrIntroLeft, "orIl", 1},
    {Rule::OrIntroRight, "orIr", 1},
    {Rule::OrElim, "orE", 3},
    {Rule::ImpIntro, "impI", 1},
    {Rule::ImpElim, "impE", 2},
    {Rule::NotIntro, "notI", 2},
    {Rule::NotElim, "notE", 2},
    {Rule::IffIntro, "iffI", 2},
    {Rule::IffElimLeft, "iffEl", 2},
    {Rule::IffElimRight, "iffEr", 2},
}};

const RuleEntry& entryOf(Rule rule) { return kRuleTable[static_cast<std::size_t>(rule)]; }

}  // namespace

std::string_view ruleName(Rule rule) { return entryOf(rule).name; }

std::optional<Rule> ruleFromName(std::string_view name) {
    for (const RuleEntry& e : kRuleTable) {
        if (e.name == name) return e.rule;
    }
    return std::nullopt;
}

int ruleArity(Rule rule) { return entryOf(rule).arity; }

bool ProofNode::operator==(const ProofNode& other) const {
    return id == other.id && rule == other.rule && premises == other.premises &&
           formula == other.formula;
}

const ProofNode& ProofGraph::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw GraphError("unknown node id " + std::to_string(id));
    return it->second;
}

std::size_t ProofGraph::indexOf(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("unknown node id " + std::to_string(id));
    return it->second;
}

std::vector<const ProofNode*> ProofGraph::parents(NodeId id) const {
    const ProofNode& n = node(id);
    std::vector<const ProofNode*> out;
    out.reserve(n.premises.size());
    for (NodeId p : n.premises) out.push_back(&node(p));
    return out;
}

bool ProofGraph::operator==(const ProofGraph& other) const {
    if (ids_ != other.ids_) return false;
    for (NodeId id : ids_) {
        if (!(nodes_.at(id) == other.nodes_.at(id))) return false;
    }
    return true;
}

ProofGraph ProofGraph::fromNodes(std::vector<ProofNode> nodes) {
    ProofGraph g;
    g.ids_.reserve(nodes.size());
    for (ProofNode& n : nodes) {
        std::sort(n.premises.begin(), n.premises.end());
        if (std::adjacent_find(n.premises.begin(), n.premises.end()) != n.premises.end()) {
            throw GraphError("node " + std::to_string(n.id) + ": duplicate premise id (rule " +
                             std::string(ruleName(n.rule)) + " needs " +
                             std::to_string(ruleArity(n.rule)) + " distinct premises)");
        }
        NodeId id = n.id;
        if (!g.nodes_.emplace(id, std::move(n)).second) {
            throw GraphError("duplicate node id " + std::to_string(id));
        }
        g.ids_.push_back(id);
    }
    std::sort(g.ids_.begin(), g.ids_.end());
    g.index_.reserve(g.ids_.size());
    for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_.emplace(g.ids_[i], i);
    g.validate();
    return g;
}

void ProofGraph::validate() const {
    for (NodeId id : ids_) {
        const ProofNode& n = nodes_.at(id);
        const int arity = ruleArity(n.rule);
        if (static_cast<int>(n.premises.size()) != arity) {
            throw GraphError("node " + std::to_string(id) + ": rule " +
                             std::string(ruleName(n.rule)) + " takes " + std::to_string(arity) +
                             " premises, got " + std::to_string(n.premises.size()));
        }
        for (NodeId p : n.premises) {
            if (!nodes_.count(p)) {
                throw GraphError("node " + std::to_string(id) + ": dangling premise id " +
                                 std::to_string(p));
            }
        }
    }

    // Kahn sweep over the premise relation; anything left unprocessed sits
    // on a cycle.
    std::vector<std::size_t> indegree(ids_.size(), 0);
    std::vector<std::vector<std::size_t>> children(ids_.size());
    for (NodeId id : ids_) {
        const std::size_t ci = index_.at(id);
        const ProofNode& n = nodes_.at(id);
        indegree[ci] = n.premises.size();
        for (NodeId p : n.premises) children[index_.at(p)].push_back(ci);
    }
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (indegree[i] == 0) ready.push_back(i);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
        std::size_t cur = ready.back();
        ready.pop_back();
        ++processed;
        for (std::size_t child : children[cur]) {
            if (--indegree[child] == 0) ready.push_back(child);
        }
    }
    if (processed != ids_.size()) {
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (indegree[i] > 0) {
                throw GraphError("cycle detected through node " + std::to_string(ids_[i]));
            }
        }
    }
}

ProofGraph ProofGraph::load(std::string_view json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw GraphError("invalid proof graph: expected top-level object with a \"nodes\" array");
    }

    std::vector<ProofNode> nodes;
    nodes.reserve(doc["nodes"].size());
    for (const auto& jn : doc["nodes"]) {
        if (!jn.is_object()) throw GraphError("invalid node entry: expected object");
        for (const char* field : {"id", "formula", "rule", "premises"}) {
            if (!jn.contains(field)) {
                throw GraphError(std::string("node entry missing field \"") + field + "\"");
            }
        }
        if (!jn["id"].is_number_integer() || jn["id"].get<std::int64_t>() < 0 ||
            jn["id"].get<std::int64_t>() > std::int64_t{std::numeric_limits<NodeId>::max()}) {
            throw GraphError("node id must be a non-negative integer");
        }
        const NodeId id = jn["id"].get<NodeId>();
        if (!jn["rule"].is_string()) {
            throw GraphError("node " + std::to_string(id) + ": rule must be a string");
        }
        auto rule = ruleFromName(jn["rule"].get<std::string>());
        if (!rule) {
            throw GraphError("node " + std::to_string(id) + ": unknown rule name \"" +
                             jn["rule"].get<std::string>() + "\"");
        }
        if (!jn["formula"].is_string()) {
            throw GraphError("node " + std::to_string(id) + ": formula must be a string");
        }
        std::optional<Formula> formula;
        try {
            formula = parse(jn["formula"].get<std::string>());
        } catch (const ParseError& e) {
            throw GraphError("node " + std::to_string(id) + ": " + e.what());
        }
        if (!jn["premises"].is_array()) {
            throw GraphError("node " + std::to_string(id) + ": premises must be an array");
        }
        std::vector<NodeId> premises;
        for (const auto& jp : jn["premises"]) {
            if (!jp.is_number_integer() || jp.get<std::int64_t>() < 0 ||
                jp.get<std::int64_t>() > std::int64_t{std::numeric_limits<NodeId>::max()}) {
                throw GraphError("node " + std::to_string(id) +
                                 ": premise ids must be non-negative integers");
            }
            premises.push_back(jp.get<NodeId>());
        }
        nodes.push_back(ProofNode{id, std::move(*formula), *rule, std::move(premises)});
    }
    return fromNodes(std::move(nodes));
}

std::string ProofGraph::save() const {
    nlohmann::json out;
    out["nodes"] = nlohmann::json::array();
    for (NodeId id : ids_) {
        const ProofNode& n = nodes_.at(id);
        nlohmann::json jn;
        jn["id"] = n.id;
        jn["formula"] = toString(n.formula);
        jn["rule"] = std::string(ruleName(n.rule));
        jn["premises"] = n.premises;
        out["nodes"].push_back(std::move(jn));
    }
    return out.dump();
}

}  // namespace proofs
