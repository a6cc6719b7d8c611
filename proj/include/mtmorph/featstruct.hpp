// Feature categories and unification.
//
// Categories are PATR-style: a category symbol plus a flat attribute/value
// structure.  Values are atoms, variables, disjunctions of atoms (a|b|c) or
// conjunctions of atoms (s&3&m).  Unification threads a persistent variable
// binding store; failure is a normal outcome, reported as std::nullopt.

#ifndef MTMORPH_FEATSTRUCT_HPP
#define MTMORPH_FEATSTRUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtmorph/symbols.hpp"

namespace mtm {

enum class ValueKind { Atom, Variable, Disjunction, Conjunction };

class FeatureValue {
public:
    FeatureValue() : kind_(ValueKind::Atom) {}

    static FeatureValue atom(Symbol s);
    static FeatureValue variable(Symbol name);
    // Sorted, deduplicated; collapses to an atom when a single member remains.
    static FeatureValue disjunction(std::vector<Symbol> atoms);
    static FeatureValue conjunction(std::vector<Symbol> atoms);

    ValueKind kind() const { return kind_; }
    Symbol symbol() const { return symbol_; }                  // Atom/Variable
    const std::vector<Symbol>& members() const { return members_; }

    bool operator==(const FeatureValue& o) const;
    bool operator!=(const FeatureValue& o) const { return !(*this == o); }
    bool operator<(const FeatureValue& o) const;

    std::string to_string() const;

private:
    ValueKind kind_;
    Symbol symbol_;
    std::vector<Symbol> members_;
};

struct FeatureCategory {
    Symbol symbol;
    // Attribute -> value, unique attributes, ordered for deterministic print.
    std::map<Symbol, FeatureValue> features;

    bool operator==(const FeatureCategory& o) const {
        return symbol == o.symbol && features == o.features;
    }
    std::string to_string() const;
};

// Persistent variable store.  Value semantics: each search branch copies the
// store it extends, so snapshots are safe to share across threads.
class Bindings {
public:
    Bindings() = default;

    // Follows variable chains until a non-variable value or an unbound
    // variable is reached.  Chains are acyclic by construction.
    FeatureValue resolve(const FeatureValue& v) const;

    const FeatureValue* lookup(Symbol var) const;
    void bind(Symbol var, FeatureValue value);  // caller resolves first
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const std::map<Symbol, FeatureValue>& items() const { return map_; }

private:
    std::map<Symbol, FeatureValue> map_;
};

struct ValueUnification {
    FeatureValue value;  // the common value both sides denote
    Bindings binds;
};

// Value-level unification.  Atom/Atom iff equal; Atom/Disjunction iff member;
// Disjunction/Disjunction iff intersection nonempty (result the intersection,
// collapsing to an atom when singleton); Conjunction only with an identical
// conjunction or a variable; a variable binds to the other side.
std::optional<ValueUnification> unify_value(const FeatureValue& a,
                                            const FeatureValue& b,
                                            const Bindings& binds);

// Category unification: symbols must be equal, shared attributes must unify,
// attributes present on one side only are carried into the result.
std::optional<Bindings> unify_category(const FeatureCategory& a,
                                       const FeatureCategory& b,
                                       const Bindings& binds);
std::optional<Bindings> unify_category(const FeatureCategory& a,
                                       const FeatureCategory& b,
                                       const Bindings& binds,
                                       FeatureCategory* merged);

// A category plus the seed bindings produced when repeated source attributes
// were pre-unified at load time (keeps links like rule1's shared M).
struct CategoryTemplate {
    FeatureCategory category;
    Bindings seed;
};

// Renames every variable in `v`/`cat` by appending "~<n>"; used to keep rule
// and lexicon instances apart.  `n` comes from a per-analysis counter.
Symbol rename_symbol(Symbol var, unsigned n);
FeatureValue rename_value(const FeatureValue& v, unsigned n);
FeatureCategory rename_category(const FeatureCategory& cat, unsigned n);

// Instantiates a template: renames category and seed with the fresh suffix
// `n` and inserts the renamed seed into `binds` (fresh names cannot clash).
FeatureCategory instantiate(const CategoryTemplate& tmpl, unsigned n,
                            Bindings& binds);
void merge_seed(const Bindings& seed, unsigned n, Bindings& binds);

// Category with every value resolved through `binds`; unresolved variables
// print under their base name (the "~n" rename suffix is stripped).
FeatureCategory resolve_category(const FeatureCategory& cat,
                                 const Bindings& binds);

}  // namespace mtm

#endif  // MTMORPH_FEATSTRUCT_HPP
