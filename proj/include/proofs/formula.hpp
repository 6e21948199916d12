#ifndef PROOFS_FORMULA_HPP
#define PROOFS_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace proofs {

enum class Connective : std::uint8_t { Atom, Not, And, Or, Implies, Iff };

// Immutable propositional formula. Copies share the underlying node, so
// copying is cheap and subformulas built from existing formulas are shared.
// Equality is structural everywhere; there is no semantic normalization.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula negation(Formula child);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula biconditional(Formula lhs, Formula rhs);

    Connective kind() const { return node_->kind; }
    bool isAtom() const { return node_->kind == Connective::Atom; }

    // Atom only.
    const std::string& atomName() const;

    // Not only.
    Formula child() const;

    // Binary connectives only.
    Formula left() const;
    Formula right() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node;
    using NodePtr = std::shared_ptr<Node>;

    struct Node {
        Connective kind;
        std::string name;  // Atom only
        NodePtr lhs, rhs;  // Not uses lhs only

        Node(Connective k, std::string n, NodePtr l, NodePtr r)
            : kind(k), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {}
        ~Node();  // iterative teardown; long chains must not recurse
    };

    explicit Formula(NodePtr node) : node_(std::move(node)) {}

    NodePtr node_;
};

// Raised by parse() with the byte offset of the failure and a description
// of what was expected there.
struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, std::string expectedTokens);
    std::size_t offset;
    std::string expected;
};

// Raised by entails() when the combined atom count exceeds kEntailsAtomCap.
struct AtomLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Concrete syntax: atoms match [A-Za-z_][A-Za-z0-9_]*, operators are
// ~ & | -> <-> with precedence ~ > & > | > -> > <->. The conditionals are
// right-associative, & and | left-associative; whitespace is ignored.
Formula parse(std::string_view text);

// Fully parenthesized ASCII form; parse(toString(f)) == f.
std::string toString(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

// Names of the atoms occurring in f.
std::set<std::string> atoms(const Formula& f);

using Assignment = std::map<std::string, bool>;

// Classical truth value of f under a; throws std::out_of_range when a is
// missing an atom of f.
bool evaluate(const Formula& f, const Assignment& a);

inline constexpr std::size_t kEntailsAtomCap = 20;

// Semantic entailment by exhaustive truth-table enumeration: true iff every
// assignment satisfying all premises satisfies the conclusion. Test oracle;
// capped at kEntailsAtomCap distinct atoms.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion);

}  // namespace proofs

#endif  // PROOFS_FORMULA_HPP
