#include "mtmorph/wordgrammar.hpp"

#include <algorithm>

namespace mtm {

Symbol bos() {
    static Symbol s = intern("bos");
    return s;
}

Symbol eos() {
    static Symbol s = intern("eos");
    return s;
}

namespace {

Symbol xbar_attr() {
    static Symbol s = intern("xbar");
    return s;
}

Symbol zero_atom() {
    static Symbol s = intern("0");
    return s;
}

std::string label(const FeatureCategory& cat) {
    return cat.features.empty() ? cat.symbol.str() : cat.to_string();
}

}  // namespace

std::string ParseTree::to_text(int indent) const {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (is_leaf()) return pad + "(" + label(category) + " " + leaf + ")";
    std::string r = pad + "(" + label(category);
    for (const auto& c : children) r += "\n" + c.to_text(indent + 1);
    r += ")";
    return r;
}

bool WordGrammar::build(std::vector<SynRule> rules,
                        std::set<Symbol> lexical_symbols,
                        std::set<Symbol> declared_starts, std::string* error) {
    rules_ = std::move(rules);
    lexical_symbols_ = std::move(lexical_symbols);
    declared_starts_ = std::move(declared_starts);
    start_rules_.clear();
    table_.clear();
    if (rules_.empty() && declared_starts_.empty()) return true;  // unused

    // Start mothers: declared symbol, xbar=0, or unifiable with no daughter.
    unsigned n = 1;
    for (const auto& r : rules_) {
        bool is_start = false;
        if (declared_starts_.count(r.mother.symbol)) is_start = true;
        if (!is_start) {
            auto it = r.mother.features.find(xbar_attr());
            if (it != r.mother.features.end() &&
                it->second.kind() == ValueKind::Atom &&
                it->second.symbol() == zero_atom())
                is_start = true;
        }
        if (!is_start) {
            bool referenced = false;
            for (const auto& r2 : rules_) {
                for (const auto& d : r2.daughters) {
                    Bindings b;
                    merge_seed(r.seed, n, b);
                    merge_seed(r2.seed, n + 1, b);
                    FeatureCategory m = rename_category(r.mother, n);
                    FeatureCategory dd = rename_category(d, n + 1);
                    n += 2;
                    if (unify_category(m, dd, b)) {
                        referenced = true;
                        break;
                    }
                }
                if (referenced) break;
            }
            is_start = !referenced;
        }
        if (is_start) start_rules_.push_back(&r);
    }

    std::set<Symbol> start_symbols = declared_starts_;
    for (const SynRule* r : start_rules_) start_symbols.insert(r->mother.symbol);
    if (start_symbols.empty()) {
        if (error) *error = "word grammar has no start category";
        return false;
    }

    std::set<Symbol> mothers;
    for (const auto& r : rules_) mothers.insert(r.mother.symbol);

    // Leftmost-leaf sets, to fixpoint (grammars may be cyclic: stem -> stem).
    std::map<Symbol, std::set<Symbol>> first;
    auto first_of = [&](Symbol s) -> std::set<Symbol>& { return first[s]; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules_) {
            Symbol d0 = r.daughters.front().symbol;
            std::set<Symbol>& src = first_of(d0);
            std::set<Symbol> add;
            if (!mothers.count(d0) || lexical_symbols_.count(d0)) add.insert(d0);
            add.insert(src.begin(), src.end());
            std::set<Symbol>& dst = first_of(r.mother.symbol);
            for (Symbol s : add)
                if (dst.insert(s).second) changed = true;
        }
    }
    auto leaves_of = [&](Symbol s) {
        std::set<Symbol> l = first[s];
        if (!mothers.count(s) || lexical_symbols_.count(s)) l.insert(s);
        return l;
    };

    for (Symbol s : start_symbols) {
        auto l = leaves_of(s);
        table_[bos()].insert(l.begin(), l.end());
        table_[s].insert(eos());
    }

    // Follow fixpoint: within a rule, Follow(d_i) gains First(d_{i+1});
    // the last daughter inherits Follow(mother).
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules_) {
            for (std::size_t i = 0; i + 1 < r.daughters.size(); ++i) {
                auto nxt = leaves_of(r.daughters[i + 1].symbol);
                auto& dst = table_[r.daughters[i].symbol];
                for (Symbol s : nxt)
                    if (dst.insert(s).second) changed = true;
            }
            const auto& mfollow = table_[r.mother.symbol];
            auto& dst = table_[r.daughters.back().symbol];
            for (Symbol s : mfollow)
                if (dst.insert(s).second) changed = true;
        }
    }
    return true;
}

const std::set<Symbol>& WordGrammar::follow(Symbol cat) const {
    static const std::set<Symbol> empty;
    auto it = table_.find(cat);
    return it == table_.end() ? empty : it->second;
}

bool WordGrammar::complete(const FeatureCategory& cat, const Bindings& binds,
                           unsigned* rename_counter) const {
    auto it = cat.features.find(xbar_attr());
    if (it != cat.features.end()) {
        FeatureValue v = binds.resolve(it->second);
        if (v.kind() == ValueKind::Atom && v.symbol() == zero_atom())
            return true;
    }
    if (declared_starts_.count(cat.symbol)) return true;
    for (const SynRule* r : start_rules_) {
        unsigned n = (*rename_counter)++;
        Bindings b = binds;
        merge_seed(r->seed, n, b);
        if (unify_category(cat, rename_category(r->mother, n), b)) return true;
    }
    return false;
}

namespace {

void tree_key(const ParseTree& t, std::string& out) {
    out += '(';
    if (t.is_leaf()) {
        out += t.category.symbol.str();
        out += ' ';
        out += t.leaf;
    } else {
        out += t.rule_id.str();
        for (const auto& c : t.children) tree_key(c, out);
    }
    out += ')';
}

void rule_seq(const ParseTree& t, std::vector<Symbol>& out) {
    if (!t.is_leaf()) {
        out.push_back(t.rule_id);
        for (const auto& c : t.children) rule_seq(c, out);
    }
}

ParseTree resolve_tree(const ParseTree& t, const Bindings& binds) {
    ParseTree out;
    out.category = resolve_category(t.category, binds);
    out.rule_id = t.rule_id;
    out.leaf = t.leaf;
    for (const auto& c : t.children) out.children.push_back(resolve_tree(c, binds));
    return out;
}

bool seq_less(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](Symbol x, Symbol y) { return x.str() < y.str(); });
}

}  // namespace

std::vector<Parse> WordGrammar::shift_reduce(const std::vector<StackItem>& input,
                                             const Bindings& binds,
                                             unsigned* rename_counter) const {
    std::vector<Parse> out;
    std::set<std::string> seen;

    struct Walker {
        const WordGrammar& g;
        const std::vector<StackItem>& input;
        unsigned* counter;
        std::vector<Parse>& out;
        std::set<std::string>& seen;

        void go(std::vector<ParseTree> stack, std::size_t next,
                const Bindings& b) {
            if (next == input.size() && stack.size() == 1 &&
                g.complete(stack[0].category, b, counter)) {
                std::string key;
                tree_key(stack[0], key);
                if (seen.insert(key).second) {
                    Parse p;
                    p.tree = resolve_tree(stack[0], b);
                    p.binds = b;
                    rule_seq(stack[0], p.rule_sequence);
                    out.push_back(std::move(p));
                }
            }
            for (const auto& r : g.rules_) {
                std::size_t k = r.daughters.size();
                if (stack.size() < k) continue;
                unsigned n = (*counter)++;
                Bindings b2 = b;
                merge_seed(r.seed, n, b2);
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i) {
                    FeatureCategory d = rename_category(r.daughters[i], n);
                    auto u = unify_category(
                        stack[stack.size() - k + i].category, d, b2);
                    if (!u)
                        ok = false;
                    else
                        b2 = std::move(*u);
                }
                if (!ok) continue;
                ParseTree parent;
                parent.category = rename_category(r.mother, n);
                parent.rule_id = r.id;
                parent.children.assign(stack.end() - static_cast<long>(k),
                                       stack.end());
                std::vector<ParseTree> ns(stack.begin(),
                                          stack.end() - static_cast<long>(k));
                ns.push_back(std::move(parent));
                go(std::move(ns), next, b2);
            }
            if (next < input.size()) {
                ParseTree leaf;
                leaf.category = input[next].category;
                leaf.leaf = input[next].morpheme;
                stack.push_back(std::move(leaf));
                go(std::move(stack), next + 1, b);
            }
        }
    };

    Walker w{*this, input, rename_counter, out, seen};
    w.go({}, 0, binds);
    std::sort(out.begin(), out.end(), [](const Parse& a, const Parse& b) {
        return seq_less(a.rule_sequence, b.rule_sequence);
    });
    return out;
}

}  // namespace mtm
