// Interned symbols for alphabets, morphemes, categories and variables.
//
// Every identifier that flows through the engine (alphabet symbols,
// variables, category/attribute names, rule ids) is interned once into a
// global table and handled as a 32-bit index afterwards.  Identifiers
// starting with an uppercase letter denote variables; everything else is an
// instantiated symbol.

#ifndef MTMORPH_SYMBOLS_HPP
#define MTMORPH_SYMBOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtm {

class Symbol {
public:
    Symbol() : id_(0) {}
    explicit Symbol(std::uint32_t id) : id_(id) {}

    std::uint32_t id() const { return id_; }
    bool valid() const { return id_ != 0; }

    const std::string& str() const;

    bool operator==(const Symbol& o) const { return id_ == o.id_; }
    bool operator!=(const Symbol& o) const { return id_ != o.id_; }
    bool operator<(const Symbol& o) const { return id_ < o.id_; }

private:
    std::uint32_t id_;
};

// Interns `name` (thread-safe) and returns its symbol.
Symbol intern(std::string_view name);

// True iff the symbol's first character is an uppercase ASCII letter.
bool is_variable(Symbol s);

// The morpheme boundary symbol.  Written "#" in grammar files; the Unicode
// flat sign is accepted by the tokenizer as an alias.
Symbol boundary_symbol();

// Splits `text` into symbols of `alphabet` by greedy longest match.
// Returns false (and the failing byte offset) when no symbol matches.
bool tokenize(std::string_view text, const std::vector<Symbol>& alphabet,
              std::vector<Symbol>& out, std::size_t* bad_offset = nullptr);

// Joins symbols back into a string (no separators).
std::string join(const std::vector<Symbol>& syms);

}  // namespace mtm

template <>
struct std::hash<mtm::Symbol> {
    std::size_t operator()(const mtm::Symbol& s) const noexcept {
        return std::hash<std::uint32_t>()(s.id());
    }
};

#endif  // MTMORPH_SYMBOLS_HPP
