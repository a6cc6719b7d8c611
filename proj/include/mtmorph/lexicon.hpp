// Multi-tape morpheme storage: one character trie per lexical tape with
// synchronized transition and boundary/category detection.

#ifndef MTMORPH_LEXICON_HPP
#define MTMORPH_LEXICON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtmorph/featstruct.hpp"
#include "mtmorph/rulebase.hpp"
#include "mtmorph/symbols.hpp"

namespace mtm {

using NodeRef = std::uint32_t;
inline constexpr NodeRef kTrieRoot = 0;

struct TrieNode {
    std::map<Symbol, NodeRef> edges;
    std::optional<CategoryTemplate> accepts;  // set at morpheme end
};

// Per-tape current trie nodes; fresh pointers sit at every root.
using LexPointers = std::vector<NodeRef>;

// Per-tape categories recorded when morphemes end.  Engine convention: the
// whole vector is meaningful only when any() holds ("cats != nil").
using LexCats = std::vector<std::optional<CategoryTemplate>>;

bool any_cats(const LexCats& cats);

class MultiTrieLexicon {
public:
    explicit MultiTrieLexicon(std::size_t n_tapes = 0);

    std::size_t n_tapes() const { return tries_.size(); }
    bool empty() const;

    // Inserts `morpheme` into tape `tape` (1-based).  Morphemes sharing a
    // prefix share nodes; the terminal node stores the category.
    // Empty morphemes and boundary symbols inside morphemes are rejected.
    bool insert_morpheme(int tape, const std::vector<Symbol>& morpheme,
                         CategoryTemplate category, std::string* error = nullptr);

    LexPointers roots() const { return LexPointers(tries_.size(), kTrieRoot); }

    // True iff every tape pointer is at its root.
    bool at_all_roots(const LexPointers& ptrs) const;

    // Walks each tape's (fully instantiated) lex sequence edge by edge.  The
    // boundary symbol requires the current node to be accepting, records its
    // category and resets that tape's pointer to the root.  Returns nullopt
    // if any symbol has no transition (a normal search dead end).
    struct Transitions {
        LexPointers ptrs;
        LexCats cats;
    };
    std::optional<Transitions> lexical_transitions(const LexicalExpr& lex,
                                                   const LexPointers& ptrs) const;

    // Single-symbol step used by the engine's hypothesis walker.
    const TrieNode& node(int tape, NodeRef ref) const;
    std::optional<NodeRef> step(int tape, NodeRef ref, Symbol s) const;

private:
    std::vector<std::vector<TrieNode>> tries_;  // per tape, node 0 = root
};

}  // namespace mtm

#endif  // MTMORPH_LEXICON_HPP
