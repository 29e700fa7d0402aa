// Interned symbol names for polynomial variables.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace mdsurf {

using SymbolId = std::uint32_t;

// Maps variable names to dense ids. Insertion order fixes the canonical
// variable order used by the polynomial printer, so callers intern names in
// sorted order when they want deterministic output (the graph loader does).
class SymbolTable {
public:
    SymbolId intern(const std::string& name);
    bool contains(const std::string& name) const;
    SymbolId id(const std::string& name) const; // name must be interned
    const std::string& name(SymbolId id) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

} // namespace mdsurf
