// Two-level rule model: source form, compiled internal representation,
// precedence ordering, enable/disable toggling and rule-schema expansion.
//
// A rule pairs a lexical center (one sequence per lexical tape) with a
// surface center, each sandwiched between optional contexts:
//
//   tl_rule(id, LLC, Lex, RLC, op, LSC, Surf, RSC, variables, features)
//
// op is => (optional: the rule licenses a pair) or <=> (obligatory: the rule
// additionally coerces away partitions that realize the same lexical
// material differently in the same contexts).

#ifndef MTMORPH_RULEBASE_HPP
#define MTMORPH_RULEBASE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mtmorph/featstruct.hpp"
#include "mtmorph/symbols.hpp"

namespace mtm {

enum class Direction { Analysis, Generation };
enum class RuleOp { Optional, Obligatory };

// One sequence of symbols/variables per lexical tape.  [[],[],[]] denotes an
// uninstantiated (unconstrained) context.
struct LexicalExpr {
    std::vector<std::vector<Symbol>> tapes;

    bool empty() const {
        for (const auto& t : tapes)
            if (!t.empty()) return false;
        return true;
    }
    bool operator==(const LexicalExpr& o) const { return tapes == o.tapes; }
};

using SurfaceExpr = std::vector<Symbol>;

struct VarConstraint {
    Symbol set_id;
    Symbol var;
    bool operator==(const VarConstraint& o) const {
        return set_id == o.set_id && var == o.var;
    }
};

struct Alphabet {
    int tape = 0;  // 0 = surface, 1..N lexical
    std::vector<Symbol> symbols;

    bool contains(Symbol s) const;
};

struct VariableSet {
    Symbol id;
    std::vector<Symbol> members;  // declaration order, nonempty

    bool contains(Symbol s) const;
};

struct TwoLevelRule {
    Symbol id;
    LexicalExpr llc, lex, rlc;
    RuleOp op = RuleOp::Optional;
    SurfaceExpr lsc, surf, rsc;
    std::vector<VarConstraint> variables;
    // Exactly N entries; entry i constrains the morpheme ending on tape i.
    std::vector<std::optional<CategoryTemplate>> features;
    bool enabled = true;

    // Schematic rules are written over single-tape-style expressions (stored
    // on tape 0 of each LexicalExpr) and only become interpretable after
    // expansion.
    bool schematic = false;

    std::optional<Direction> compiled;
    unsigned precedence = 0;

    // Set id declared for `var`, or invalid symbol.
    Symbol set_of(Symbol var) const;
};

// expand(<symbol>, <expansion>, <variables>): rewrites one schematic symbol
// occurrence into a multi-tape column.
struct ExpansionRule {
    Symbol symbol;
    LexicalExpr expansion;
    std::vector<VarConstraint> variables;
};

// Stores left contexts reversed (they match as prefixes of the reversed
// consumed history) and assigns the 6-bit precedence value: one bit per
// expression of {LSC,Surf,RSC,LLC,Lex,RLC}, set iff non-empty; the trio of
// the direction's known side takes the most significant bits, and within a
// trio the order is left-context, center, right-context (MSB to LSB).
// Idempotent on already-compiled rules.
TwoLevelRule compile_rule(const TwoLevelRule& src, Direction direction);

// Stable sort by descending precedence; ties keep source order.
std::vector<TwoLevelRule> order_rules(std::vector<TwoLevelRule> rules);

struct ExpandError {
    Symbol rule_id;
    std::string message;
};

// Expands a schematic rule against the expansion set.  Within one lexical
// expression every schematic occurrence takes the expansion with the same
// ordinal (the expression-wide layout choice); choices multiply across
// expressions.  A schema without schematic symbols expands to itself.
// `n_tapes` pads converted expressions.
std::vector<TwoLevelRule> expand_rule(const TwoLevelRule& schema,
                                      const std::vector<ExpansionRule>& expansions,
                                      std::size_t n_tapes,
                                      std::vector<ExpandError>& errors);

// The loaded rule collection: source rules plus the per-direction compiled
// orders.  Immutable after load except toggle(), which returns a new
// snapshot; engine runs read one consistent RuleBase.
struct RuleBase {
    std::vector<TwoLevelRule> source;       // post-expansion, load order
    std::vector<TwoLevelRule> analysis;     // compiled + precedence-ordered
    std::vector<TwoLevelRule> generation;

    void compile();  // fills analysis/generation from source

    bool has_rule(Symbol id) const;
    // Returns the updated base, or nullopt for an unknown id.
    std::optional<RuleBase> toggle(Symbol id, bool enabled) const;
};

}  // namespace mtm

#endif  // MTMORPH_RULEBASE_HPP
