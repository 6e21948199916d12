#include "proofs/formula.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace proofs {

namespace {

bool validAtomName(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

Formula::Node::~Node() {
    // Unlink children iteratively so destroying a deeply nested chain
    // (e.g. a long disjunction spine) cannot overflow the stack.
    std::vector<NodePtr> pending;
    auto take = [&pending](NodePtr& p) {
        if (p && p.use_count() == 1) pending.push_back(std::move(p));
        p.reset();
    };
    take(lhs);
    take(rhs);
    while (!pending.empty()) {
        NodePtr n = std::move(pending.back());
        pending.pop_back();
        take(n->lhs);
        take(n->rhs);
    }
}

Formula Formula::atom(std::string name) {
    if (!validAtomName(name)) {
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    }
    return Formula(std::make_shared<Node>(Connective::Atom, std::move(name), nullptr, nullptr));
}

Formula Formula::negation(Formula child) {
    return Formula(std::make_shared<Node>(Connective::Not, "", std::move(child.node_), nullptr));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Connective::And, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Connective::Or, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Connective::Implies, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Connective::Iff, "", std::move(lhs.node_), std::move(rhs.node_)));
}

const std::string& Formula::atomName() const {
    if (node_->kind != Connective::Atom) throw std::logic_error("atomName() on non-atom");
    return node_->name;
}

Formula Formula::child() const {
    if (node_->kind != Connective::Not) throw std::logic_error("child() on non-negation");
    return Formula(node_->lhs);
}

Formula Formula::left() const {
    if (node_->kind == Connective::Atom || node_->kind == Connective::Not) {
        throw std::logic_error("left() on non-binary formula");
    }
    return Formula(node_->lhs);
}

Formula Formula::right() const {
    if (node_->kind == Connective::Atom || node_->kind == Connective::Not) {
        throw std::logic_error("right() on non-binary formula");
    }
    return Formula(node_->rhs);
}

bool Formula::operator==(const Formula& other) const {
    // Explicit worklist: shared subtrees compare by pointer, long chains
    // must not recurse.
    std::vector<std::pair<const Node*, const Node*>> stack;
    stack.emplace_back(node_.get(), other.node_.get());
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (a == b) continue;
        if (a->kind != b->kind) return false;
        switch (a->kind) {
            case Connective::Atom:
                if (a->name != b->name) return false;
                break;
            case Connective::Not:
                stack.emplace_back(a->lhs.get(), b->lhs.get());
                break;
            default:
                stack.emplace_back(a->lhs.get(), b->lhs.get());
                stack.emplace_back(a->rhs.get(), b->rhs.get());
                break;
        }
    }
    return true;
}

// ── Parser ──────────────────────────────────────────────────────────────────
//
// iff   := imp ('<->' iff)?
// imp   := or ('->' imp)?
// or    := and ('|' and)*
// and   := unary ('&' unary)*
// unary := '~' unary | atom | '(' iff ')'

ParseError::ParseError(std::size_t off, std::string expectedTokens)
    : std::runtime_error("parse error at byte " + std::to_string(off) + ": expected " + expectedTokens),
      offset(off),
      expected(std::move(expectedTokens)) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula run() {
        Formula f = parseIff();
        skipSpace();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(std::string_view token) {
        skipSpace();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool peekArrow() const {
        // '->' but not the tail of '<->'
        return text_.substr(pos_, 2) == "->";
    }

    Formula parseIff() {
        Formula lhs = parseImp();
        skipSpace();
        if (eat("<->")) return Formula::biconditional(std::move(lhs), parseIff());
        return lhs;
    }

    Formula parseImp() {
        Formula lhs = parseOr();
        skipSpace();
        if (peekArrow() && eat("->")) return Formula::implication(std::move(lhs), parseImp());
        return lhs;
    }

    Formula parseOr() {
        Formula lhs = parseAnd();
        for (;;) {
            skipSpace();
            // '|' only; guard nothing else starts with it
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                lhs = Formula::disjunction(std::move(lhs), parseAnd());
            } else {
                return lhs;
            }
        }
    }

    Formula parseAnd() {
        Formula lhs = parseUnary();
        for (;;) {
            skipSpace();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                lhs = Formula::conjunction(std::move(lhs), parseUnary());
            } else {
                return lhs;
            }
        }
    }

    Formula parseUnary() {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError(pos_, "'~', '(' or atom");
        char c = text_[pos_];
        if (c == '~') {
            ++pos_;
            return Formula::negation(parseUnary());
        }
        if (c == '(') {
            ++pos_;
            Formula inner = parseIff();
            skipSpace();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(pos_, "')'");
            ++pos_;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return Formula::atom(std::string(text_.substr(start, pos_ - start)));
        }
        throw ParseError(pos_, "'~', '(' or atom");
    }
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

namespace {

void printInto(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Connective::Atom:
            out += f.atomName();
            return;
        case Connective::Not:
            // Binary children print their own parentheses, so '~' composes.
            out += '~';
            printInto(f.child(), out);
            return;
        default:
            break;
    }
    const char* op = nullptr;
    switch (f.kind()) {
        case Connective::And: op = " & "; break;
        case Connective::Or: op = " | "; break;
        case Connective::Implies: op = " -> "; break;
        case Connective::Iff: op = " <-> "; break;
        default: break;
    }
    out += '(';
    printInto(f.left(), out);
    out += op;
    printInto(f.right(), out);
    out += ')';
}

}  // namespace

std::string toString(const Formula& f) {
    std::string out;
    printInto(f, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << toString(f); }

std::set<std::string> atoms(const Formula& f) {
    std::set<std::string> names;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula cur = stack.back();
        stack.pop_back();
        switch (cur.kind()) {
            case Connective::Atom:
                names.insert(cur.atomName());
                break;
            case Connective::Not:
                stack.push_back(cur.child());
                break;
            default:
                stack.push_back(cur.left());
                stack.push_back(cur.right());
                break;
        }
    }
    return names;
}

bool evaluate(const Formula& f, const Assignment& a) {
    switch (f.kind()) {
        case Connective::Atom: {
            auto it = a.find(f.atomName());
            if (it == a.end()) throw std::out_of_range("assignment missing atom '" + f.atomName() + "'");
            return it->second;
        }
        case Connective::Not: return !evaluate(f.child(), a);
        case Connective::And: return evaluate(f.left(), a) && evaluate(f.right(), a);
        case Connective::Or: return evaluate(f.left(), a) || evaluate(f.right(), a);
        case Connective::Implies: return !evaluate(f.left(), a) || evaluate(f.right(), a);
        case Connective::Iff: return evaluate(f.left(), a) == evaluate(f.right(), a);
    }
    throw std::logic_error("unreachable connective");
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion) {
    std::set<std::string> names = atoms(conclusion);
    for (const Formula& p : premises) {
        std::set<std::string> more = atoms(p);
        names.insert(more.begin(), more.end());
    }
    if (names.size() > kEntailsAtomCap) {
        throw AtomLimitError("entails: " + std::to_string(names.size()) + " atoms exceeds cap of " +
                             std::to_string(kEntailsAtomCap));
    }
    std::vector<std::string> ordered(names.begin(), names.end());
    const std::uint64_t total = std::uint64_t{1} << ordered.size();
    Assignment a;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            a[ordered[i]] = (bits >> i) & 1;
        }
        bool allPremises = true;
        for (const Formula& p : premises) {
            if (!evaluate(p, a)) {
                allPremises = false;
                break;
            }
        }
        if (allPremises && !evaluate(conclusion, a)) return false;
    }
    return true;
}

}  // namespace proofs
