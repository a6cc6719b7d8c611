#include "mtmorph/featstruct.hpp"

#include <algorithm>

namespace mtm {

FeatureValue FeatureValue::atom(Symbol s) {
    FeatureValue v;
    v.kind_ = ValueKind::Atom;
    v.symbol_ = s;
    return v;
}

FeatureValue FeatureValue::variable(Symbol name) {
    FeatureValue v;
    v.kind_ = ValueKind::Variable;
    v.symbol_ = name;
    return v;
}

FeatureValue FeatureValue::disjunction(std::vector<Symbol> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (atoms.size() == 1) return atom(atoms[0]);
    FeatureValue v;
    v.kind_ = ValueKind::Disjunction;
    v.members_ = std::move(atoms);
    return v;
}

FeatureValue FeatureValue::conjunction(std::vector<Symbol> atoms) {
    FeatureValue v;
    v.kind_ = ValueKind::Conjunction;
    v.members_ = std::move(atoms);
    return v;
}

bool FeatureValue::operator==(const FeatureValue& o) const {
    return kind_ == o.kind_ && symbol_ == o.symbol_ && members_ == o.members_;
}

bool FeatureValue::operator<(const FeatureValue& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (symbol_ != o.symbol_) return symbol_ < o.symbol_;
    return members_ < o.members_;
}

std::string FeatureValue::to_string() const {
    switch (kind_) {
        case ValueKind::Atom:
        case ValueKind::Variable: {
            const std::string& n = symbol_.str();
            // strip the rename suffix from display
            auto tilde = n.find('~');
            return tilde == std::string::npos ? n : n.substr(0, tilde);
        }
        case ValueKind::Disjunction: {
            std::string r;
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (i) r += '|';
                r += members_[i].str();
            }
            return r;
        }
        case ValueKind::Conjunction: {
            std::string r;
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (i) r += '&';
                r += members_[i].str();
            }
            return r;
        }
    }
    return "";
}

std::string FeatureCategory::to_string() const {
    std::string r = symbol.str();
    r += ":[";
    bool first = true;
    for (const auto& [attr, val] : features) {
        if (!first) r += ',';
        first = false;
        r += attr.str();
        r += '=';
        r += val.to_string();
    }
    r += ']';
    return r;
}

FeatureValue Bindings::resolve(const FeatureValue& v) const {
    FeatureValue cur = v;
    while (cur.kind() == ValueKind::Variable) {
        auto it = map_.find(cur.symbol());
        if (it == map_.end()) return cur;
        cur = it->second;
    }
    return cur;
}

const FeatureValue* Bindings::lookup(Symbol var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

void Bindings::bind(Symbol var, FeatureValue value) {
    map_[var] = std::move(value);
}

namespace {

// Intersection of two sorted atom sets.
std::vector<Symbol> intersect(const std::vector<Symbol>& a,
                              const std::vector<Symbol>& b) {
    std::vector<Symbol> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

bool member(Symbol s, const std::vector<Symbol>& set) {
    return std::binary_search(set.begin(), set.end(), s);
}

}  // namespace

std::optional<ValueUnification> unify_value(const FeatureValue& a,
                                            const FeatureValue& b,
                                            const Bindings& binds) {
    FeatureValue ra = binds.resolve(a);
    FeatureValue rb = binds.resolve(b);

    // Variable binds to the other side.  Binding resolved values keeps the
    // store acyclic (the occurs check reduces to the X=X case).
    if (ra.kind() == ValueKind::Variable) {
        ValueUnification u{rb, binds};
        if (rb.kind() == ValueKind::Variable && rb.symbol() == ra.symbol()) {
            u.value = ra;
            return u;  // X with X: nothing to do
        }
        u.binds.bind(ra.symbol(), rb);
        return u;
    }
    if (rb.kind() == ValueKind::Variable) {
        ValueUnification u{ra, binds};
        u.binds.bind(rb.symbol(), ra);
        return u;
    }

    if (ra.kind() == ValueKind::Atom && rb.kind() == ValueKind::Atom) {
        if (ra.symbol() != rb.symbol()) return std::nullopt;
        return ValueUnification{ra, binds};
    }
    if (ra.kind() == ValueKind::Atom && rb.kind() == ValueKind::Disjunction) {
        if (!member(ra.symbol(), rb.members())) return std::nullopt;
        return ValueUnification{ra, binds};
    }
    if (ra.kind() == ValueKind::Disjunction && rb.kind() == ValueKind::Atom) {
        if (!member(rb.symbol(), ra.members())) return std::nullopt;
        return ValueUnification{rb, binds};
    }
    if (ra.kind() == ValueKind::Disjunction &&
        rb.kind() == ValueKind::Disjunction) {
        std::vector<Symbol> common = intersect(ra.members(), rb.members());
        if (common.empty()) return std::nullopt;
        return ValueUnification{FeatureValue::disjunction(std::move(common)),
                                binds};
    }
    // Conjunctions are opaque composite values: identical or nothing.
    if (ra.kind() == ValueKind::Conjunction &&
        rb.kind() == ValueKind::Conjunction) {
        if (ra.members() != rb.members()) return std::nullopt;
        return ValueUnification{ra, binds};
    }
    return std::nullopt;
}

std::optional<Bindings> unify_category(const FeatureCategory& a,
                                       const FeatureCategory& b,
                                       const Bindings& binds,
                                       FeatureCategory* merged) {
    if (a.symbol != b.symbol) return std::nullopt;
    Bindings cur = binds;
    FeatureCategory out;
    out.symbol = a.symbol;
    for (const auto& [attr, va] : a.features) {
        auto it = b.features.find(attr);
        if (it == b.features.end()) {
            out.features.emplace(attr, va);
            continue;
        }
        auto u = unify_value(va, it->second, cur);
        if (!u) return std::nullopt;
        cur = std::move(u->binds);
        out.features.emplace(attr, u->value);
    }
    for (const auto& [attr, vb] : b.features) {
        if (!a.features.count(attr)) out.features.emplace(attr, vb);
    }
    if (merged) *merged = std::move(out);
    return cur;
}

std::optional<Bindings> unify_category(const FeatureCategory& a,
                                       const FeatureCategory& b,
                                       const Bindings& binds) {
    return unify_category(a, b, binds, nullptr);
}

Symbol rename_symbol(Symbol var, unsigned n) {
    return intern(var.str() + "~" + std::to_string(n));
}

FeatureValue rename_value(const FeatureValue& v, unsigned n) {
    if (v.kind() == ValueKind::Variable)
        return FeatureValue::variable(rename_symbol(v.symbol(), n));
    return v;
}

FeatureCategory rename_category(const FeatureCategory& cat, unsigned n) {
    FeatureCategory out;
    out.symbol = cat.symbol;
    for (const auto& [attr, val] : cat.features)
        out.features.emplace(attr, rename_value(val, n));
    return out;
}

void merge_seed(const Bindings& seed, unsigned n, Bindings& binds) {
    for (const auto& [var, val] : seed.items())
        binds.bind(rename_symbol(var, n), rename_value(val, n));
}

FeatureCategory instantiate(const CategoryTemplate& tmpl, unsigned n,
                            Bindings& binds) {
    merge_seed(tmpl.seed, n, binds);
    return rename_category(tmpl.category, n);
}

FeatureCategory resolve_category(const FeatureCategory& cat,
                                 const Bindings& binds) {
    FeatureCategory out;
    out.symbol = cat.symbol;
    for (const auto& [attr, val] : cat.features)
        out.features.emplace(attr, binds.resolve(val));
    return out;
}

}  // namespace mtm
