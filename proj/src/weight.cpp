#include "mdsurf/weight.hpp"

#include <cctype>

#include "mdsurf/error.hpp"

namespace mdsurf {

std::string Weight::to_string(const SymbolTable& symbols) const {
    if (is_symbol()) return symbols.name(*sym);
    return value.get_str();
}

bool is_symbol_name(const std::string& s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(head) && s[0] != '_') return false;
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_') return false;
    }
    return true;
}

Weight parse_weight(const std::string& s, const SymbolTable& symbols) {
    require(!s.empty(), "empty weight string");
    if (is_symbol_name(s)) {
        require(symbols.contains(s), "unknown symbol in weight: " + s);
        return Weight::symbol(symbols.id(s));
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw input_error("cannot parse weight: " + s);
    q.canonicalize();
    return Weight::rational(q);
}

} // namespace mdsurf
