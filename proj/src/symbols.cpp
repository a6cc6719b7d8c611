#include "mtmorph/symbols.hpp"

#include <mutex>
#include <unordered_map>

namespace mtm {

namespace {

struct Interner {
    std::mutex mu;
    std::vector<std::string> names{""};  // id 0 reserved for "invalid"
    std::unordered_map<std::string_view, std::uint32_t> index;

    static Interner& instance() {
        static Interner in;
        return in;
    }
};

}  // namespace

Symbol intern(std::string_view name) {
    Interner& in = Interner::instance();
    std::lock_guard<std::mutex> lock(in.mu);
    auto it = in.index.find(name);
    if (it != in.index.end()) return Symbol(it->second);
    in.names.emplace_back(name);
    std::uint32_t id = static_cast<std::uint32_t>(in.names.size() - 1);
    // string_view key points into the stable string stored in `names`;
    // vector growth moves the vector, not the heap buffers of its strings.
    in.index.emplace(std::string_view(in.names.back()), id);
    return Symbol(id);
}

const std::string& Symbol::str() const {
    Interner& in = Interner::instance();
    std::lock_guard<std::mutex> lock(in.mu);
    return in.names[id_];
}

bool is_variable(Symbol s) {
    if (!s.valid()) return false;
    const std::string& n = s.str();
    return !n.empty() && n[0] >= 'A' && n[0] <= 'Z';
}

Symbol boundary_symbol() {
    static Symbol b = intern("#");
    return b;
}

bool tokenize(std::string_view text, const std::vector<Symbol>& alphabet,
              std::vector<Symbol>& out, std::size_t* bad_offset) {
    out.clear();
    std::size_t pos = 0;
    while (pos < text.size()) {
        Symbol best;
        std::size_t best_len = 0;
        for (Symbol s : alphabet) {
            const std::string& n = s.str();
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = s;
                best_len = n.size();
            }
        }
        if (best_len == 0) {
            if (bad_offset) *bad_offset = pos;
            return false;
        }
        out.push_back(best);
        pos += best_len;
    }
    return true;
}

std::string join(const std::vector<Symbol>& syms) {
    std::string r;
    for (Symbol s : syms) r += s.str();
    return r;
}

}  // namespace mtm
