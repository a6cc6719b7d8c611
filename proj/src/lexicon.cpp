#include "mtmorph/lexicon.hpp"

namespace mtm {

bool any_cats(const LexCats& cats) {
    for (const auto& c : cats)
        if (c) return true;
    return false;
}

MultiTrieLexicon::MultiTrieLexicon(std::size_t n_tapes) {
    tries_.resize(n_tapes);
    for (auto& t : tries_) t.emplace_back();  // root
}

bool MultiTrieLexicon::empty() const {
    for (const auto& t : tries_)
        if (t.size() > 1 || t[0].accepts) return false;
    return true;
}

bool MultiTrieLexicon::insert_morpheme(int tape,
                                       const std::vector<Symbol>& morpheme,
                                       CategoryTemplate category,
                                       std::string* error) {
    if (tape < 1 || tape > static_cast<int>(tries_.size())) {
        if (error) *error = "tape index out of range";
        return false;
    }
    if (morpheme.empty()) {
        if (error) *error = "empty morpheme";
        return false;
    }
    auto& trie = tries_[tape - 1];
    NodeRef cur = kTrieRoot;
    for (Symbol s : morpheme) {
        if (s == boundary_symbol()) {
            if (error) *error = "boundary symbol inside a morpheme";
            return false;
        }
        auto it = trie[cur].edges.find(s);
        if (it != trie[cur].edges.end()) {
            cur = it->second;
        } else {
            trie.emplace_back();
            NodeRef next = static_cast<NodeRef>(trie.size() - 1);
            trie[cur].edges.emplace(s, next);
            cur = next;
        }
    }
    trie[cur].accepts = std::move(category);
    return true;
}

bool MultiTrieLexicon::at_all_roots(const LexPointers& ptrs) const {
    for (NodeRef p : ptrs)
        if (p != kTrieRoot) return false;
    return true;
}

const TrieNode& MultiTrieLexicon::node(int tape, NodeRef ref) const {
    return tries_[tape - 1][ref];
}

std::optional<NodeRef> MultiTrieLexicon::step(int tape, NodeRef ref,
                                              Symbol s) const {
    const auto& edges = tries_[tape - 1][ref].edges;
    auto it = edges.find(s);
    if (it == edges.end()) return std::nullopt;
    return it->second;
}

std::optional<MultiTrieLexicon::Transitions>
MultiTrieLexicon::lexical_transitions(const LexicalExpr& lex,
                                      const LexPointers& ptrs) const {
    Transitions out;
    out.ptrs = ptrs;
    out.cats.assign(tries_.size(), std::nullopt);
    for (std::size_t t = 0; t < lex.tapes.size() && t < tries_.size(); ++t) {
        for (Symbol s : lex.tapes[t]) {
            if (s == boundary_symbol()) {
                const auto& n = tries_[t][out.ptrs[t]];
                if (!n.accepts) return std::nullopt;
                out.cats[t] = n.accepts;
                out.ptrs[t] = kTrieRoot;
                continue;
            }
            auto next = step(static_cast<int>(t) + 1, out.ptrs[t], s);
            if (!next) return std::nullopt;
            out.ptrs[t] = *next;
        }
    }
    return out;
}

}  // namespace mtm
