#include "mdsurf/symbols.hpp"

#include "mdsurf/error.hpp"

namespace mdsurf {

SymbolId SymbolTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

bool SymbolTable::contains(const std::string& name) const {
    return ids_.count(name) != 0;
}

SymbolId SymbolTable::id(const std::string& name) const {
    auto it = ids_.find(name);
    check(it != ids_.end(), "symbol not interned: " + name);
    return it->second;
}

const std::string& SymbolTable::name(SymbolId id) const {
    check(id < names_.size(), "symbol id out of range");
    return names_[id];
}

} // namespace mdsurf
