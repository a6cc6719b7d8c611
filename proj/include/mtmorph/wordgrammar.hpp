// Unification-based word grammar over morpheme categories: feasible-follow
// precomputation for pruning the two-level search, and shift-reduce parsing
// of the category sequence a word produces.

#ifndef MTMORPH_WORDGRAMMAR_HPP
#define MTMORPH_WORDGRAMMAR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mtmorph/featstruct.hpp"
#include "mtmorph/symbols.hpp"

namespace mtm {

struct SynRule {
    Symbol id;
    FeatureCategory mother;
    std::vector<FeatureCategory> daughters;  // nonempty
    Bindings seed;  // rule-wide, from pre-unified repeated attributes
};

Symbol bos();
Symbol eos();

// Map category-symbol (plus bos) -> feasible next category symbols (plus
// eos).  Computed over bare symbols; feature checking happens at reduction.
using FollowTable = std::map<Symbol, std::set<Symbol>>;

struct ParseTree {
    FeatureCategory category;
    Symbol rule_id;               // invalid on leaves
    std::string leaf;             // morpheme string, leaves only
    std::vector<ParseTree> children;

    bool is_leaf() const { return children.empty(); }
    // Indented bracketed rendering mirroring (stem:[xbar=-1] (reflexive et) ...)
    std::string to_text(int indent = 0) const;
};

struct Parse {
    ParseTree tree;   // categories resolved through `binds`
    Bindings binds;
    std::vector<Symbol> rule_sequence;  // preorder, the determinism key
};

// One leaf of the parse stack: a category instance plus its morpheme string.
struct StackItem {
    FeatureCategory category;
    std::string morpheme;
};

class WordGrammar {
public:
    WordGrammar() = default;

    // Builds follow sets and determines start categories: explicit
    // start_category declarations, mothers with xbar=0, and mothers that
    // unify with no rule's daughter.  Returns false (with a message) for a
    // grammar that yields no start category.
    bool build(std::vector<SynRule> rules, std::set<Symbol> lexical_symbols,
               std::set<Symbol> declared_starts, std::string* error = nullptr);

    bool empty() const { return rules_.empty() && declared_starts_.empty(); }

    const std::vector<SynRule>& rules() const { return rules_; }
    const FollowTable& table() const { return table_; }

    // Table entry; unknown symbols yield the empty set.
    const std::set<Symbol>& follow(Symbol cat) const;

    // Every complete parse of the category sequence: reductions of stack-top
    // suffixes under category unification, all orders explored, duplicates
    // removed, ordered by rule-id sequence.
    std::vector<Parse> shift_reduce(const std::vector<StackItem>& stack,
                                    const Bindings& binds,
                                    unsigned* rename_counter) const;

    // True iff a single category of this shape ends a complete parse.
    bool complete(const FeatureCategory& cat, const Bindings& binds,
                  unsigned* rename_counter) const;

private:
    std::vector<SynRule> rules_;
    std::set<Symbol> lexical_symbols_;
    std::set<Symbol> declared_starts_;
    std::vector<const SynRule*> start_rules_;  // rules with start mothers
    FollowTable table_;
};

}  // namespace mtm

#endif  // MTMORPH_WORDGRAMMAR_HPP
