#include "mtmorph/rulebase.hpp"

#include <algorithm>
#include <map>

namespace mtm {

bool Alphabet::contains(Symbol s) const {
    return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

bool VariableSet::contains(Symbol s) const {
    return std::find(members.begin(), members.end(), s) != members.end();
}

Symbol TwoLevelRule::set_of(Symbol var) const {
    for (const auto& vc : variables)
        if (vc.var == var) return vc.set_id;
    return Symbol();
}

namespace {

std::vector<Symbol> reversed(std::vector<Symbol> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

LexicalExpr reversed(LexicalExpr e) {
    for (auto& t : e.tapes) std::reverse(t.begin(), t.end());
    return e;
}

unsigned precedence_of(const TwoLevelRule& r, Direction d) {
    const bool lex_bits[3] = {!r.llc.empty(), !r.lex.empty(), !r.rlc.empty()};
    const bool surf_bits[3] = {!r.lsc.empty(), !r.surf.empty(),
                               !r.rsc.empty()};
    const bool* high = d == Direction::Analysis ? surf_bits : lex_bits;
    const bool* low = d == Direction::Analysis ? lex_bits : surf_bits;
    unsigned p = 0;
    for (int i = 0; i < 3; ++i) p = (p << 1) | (high[i] ? 1u : 0u);
    for (int i = 0; i < 3; ++i) p = (p << 1) | (low[i] ? 1u : 0u);
    return p;
}

}  // namespace

TwoLevelRule compile_rule(const TwoLevelRule& src, Direction direction) {
    if (src.compiled == direction) return src;
    TwoLevelRule r = src;
    if (!src.compiled) {
        r.llc = reversed(r.llc);
        r.lsc = reversed(r.lsc);
    }  // recompiling for the other direction: contexts already reversed
    r.precedence = precedence_of(src, direction);
    r.compiled = direction;
    return r;
}

std::vector<TwoLevelRule> order_rules(std::vector<TwoLevelRule> rules) {
    std::stable_sort(rules.begin(), rules.end(),
                     [](const TwoLevelRule& a, const TwoLevelRule& b) {
                         return a.precedence > b.precedence;
                     });
    return rules;
}

namespace {

// Expansions applicable to one schema token: exact symbol match, or both
// variables constrained to the same set.
std::vector<const ExpansionRule*> matches_for(
    Symbol token, const TwoLevelRule& schema,
    const std::vector<ExpansionRule>& expansions) {
    std::vector<const ExpansionRule*> out;
    for (const auto& e : expansions) {
        if (e.symbol == token) {
            out.push_back(&e);
            continue;
        }
        if (is_variable(e.symbol) && is_variable(token)) {
            Symbol head_set;
            for (const auto& vc : e.variables)
                if (vc.var == e.symbol) head_set = vc.set_id;
            Symbol token_set = schema.set_of(token);
            if (head_set.valid() && head_set == token_set) out.push_back(&e);
        }
    }
    return out;
}

Symbol rename_token(Symbol s, Symbol from, Symbol to) {
    return s == from ? to : s;
}

// Applies expansion alternative `alt` to every schematic token of the flat
// expression; non-schematic tokens stay on tape 1.
bool expand_expression(const std::vector<Symbol>& flat,
                       const TwoLevelRule& schema,
                       const std::vector<ExpansionRule>& expansions,
                       std::size_t n_tapes, std::size_t alt, LexicalExpr& out,
                       std::vector<VarConstraint>& extra_vars) {
    out.tapes.assign(n_tapes, {});
    for (Symbol tok : flat) {
        auto ms = matches_for(tok, schema, expansions);
        if (ms.empty()) {
            out.tapes[0].push_back(tok);
            continue;
        }
        const ExpansionRule& e = *ms[alt];
        for (std::size_t t = 0; t < e.expansion.tapes.size(); ++t)
            for (Symbol s : e.expansion.tapes[t])
                out.tapes[t].push_back(rename_token(s, e.symbol, tok));
        for (const auto& vc : e.variables)
            extra_vars.push_back(
                {vc.set_id, rename_token(vc.var, e.symbol, tok)});
    }
    return true;
}

// Number of synchronized alternatives for one expression: the common
// expansion count of its schematic tokens (0 = no schematic token).
std::optional<std::size_t> alternatives_of(
    const std::vector<Symbol>& flat, const TwoLevelRule& schema,
    const std::vector<ExpansionRule>& expansions, std::string* err) {
    std::size_t count = 0;
    for (Symbol tok : flat) {
        auto ms = matches_for(tok, schema, expansions);
        if (ms.empty()) continue;
        if (count == 0) {
            count = ms.size();
        } else if (count != ms.size()) {
            if (err)
                *err = "schematic symbols with differing expansion counts in "
                       "one expression";
            return std::nullopt;
        }
    }
    return count;
}

void append_unique_vars(std::vector<VarConstraint>& vars,
                        const std::vector<VarConstraint>& extra,
                        std::vector<ExpandError>& errors, Symbol rule_id) {
    for (const auto& vc : extra) {
        bool dup = false;
        for (const auto& have : vars) {
            if (have.var != vc.var) continue;
            if (have.set_id == vc.set_id) {
                dup = true;
            } else {
                errors.push_back({rule_id, "variable " + vc.var.str() +
                                               " constrained by two sets"});
                dup = true;
            }
            break;
        }
        if (!dup) vars.push_back(vc);
    }
}

}  // namespace

std::vector<TwoLevelRule> expand_rule(
    const TwoLevelRule& schema, const std::vector<ExpansionRule>& expansions,
    std::size_t n_tapes, std::vector<ExpandError>& errors) {
    const std::vector<Symbol>* flats[3] = {&schema.llc.tapes[0],
                                           &schema.lex.tapes[0],
                                           &schema.rlc.tapes[0]};
    std::size_t alts[3];
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        std::string err;
        auto a = alternatives_of(*flats[i], schema, expansions, &err);
        if (!a) {
            errors.push_back({schema.id, err});
            return {};
        }
        alts[i] = *a;
        any = any || *a > 0;
    }
    if (!any) return {schema};

    std::vector<TwoLevelRule> out;
    unsigned ordinal = 0;
    for (std::size_t i = 0; i < std::max<std::size_t>(alts[0], 1); ++i) {
        for (std::size_t j = 0; j < std::max<std::size_t>(alts[1], 1); ++j) {
            for (std::size_t k = 0; k < std::max<std::size_t>(alts[2], 1);
                 ++k) {
                TwoLevelRule r = schema;
                r.schematic = false;
                r.id = intern(schema.id.str() + "_" +
                              std::to_string(++ordinal));
                std::vector<VarConstraint> extra;
                const std::size_t choice[3] = {i, j, k};
                LexicalExpr* exprs[3] = {&r.llc, &r.lex, &r.rlc};
                for (int f = 0; f < 3; ++f)
                    expand_expression(*flats[f], schema, expansions, n_tapes,
                                      choice[f], *exprs[f], extra);
                append_unique_vars(r.variables, extra, errors, r.id);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

void RuleBase::compile() {
    analysis.clear();
    generation.clear();
    for (const auto& r : source) {
        analysis.push_back(compile_rule(r, Direction::Analysis));
        generation.push_back(compile_rule(r, Direction::Generation));
    }
    analysis = order_rules(std::move(analysis));
    generation = order_rules(std::move(generation));
}

bool RuleBase::has_rule(Symbol id) const {
    for (const auto& r : source)
        if (r.id == id) return true;
    return false;
}

std::optional<RuleBase> RuleBase::toggle(Symbol id, bool enabled) const {
    if (!has_rule(id)) return std::nullopt;
    RuleBase nb = *this;
    auto flip = [&](std::vector<TwoLevelRule>& rules) {
        for (auto& r : rules)
            if (r.id == id) r.enabled = enabled;
    };
    flip(nb.source);
    flip(nb.analysis);
    flip(nb.generation);
    return nb;
}

}  // namespace mtm
