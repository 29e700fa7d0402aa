// Exact weights as they appear in input documents: a rational number or a
// named symbol. Conversion into a concrete ring happens in ring.hpp.
#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "mdsurf/symbols.hpp"

namespace mdsurf {

struct Weight {
    std::optional<SymbolId> sym; // engaged => symbolic weight
    mpq_class value;             // used when sym is empty

    static Weight rational(const mpq_class& q) { return Weight{std::nullopt, q}; }
    static Weight integer(long n) { return rational(mpq_class(n)); }
    static Weight symbol(SymbolId s) { return Weight{s, 0}; }

    bool is_symbol() const { return sym.has_value(); }
    bool is_numeric_zero() const { return !is_symbol() && value == 0; }

    std::string to_string(const SymbolTable& symbols) const;
};

// True if `s` is a valid symbol name: [A-Za-z_][A-Za-z0-9_]*.
bool is_symbol_name(const std::string& s);

// Parses "3", "-5", "7/2" or a symbol name (which must already be interned).
Weight parse_weight(const std::string& s, const SymbolTable& symbols);

} // namespace mdsurf
