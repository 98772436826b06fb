#include "rsys/symbol.hpp"

#include <algorithm>

namespace rsys {

SymbolId SymbolTable::intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& SymbolTable::name(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (id < 0 || id >= static_cast<SymbolId>(names_.size()))
        throw std::out_of_range("SymbolTable::name: bad id");
    return names_[id];
}

int SymbolTable::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(names_.size());
}

std::vector<SymbolId> SymbolTable::ids_by_name() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<SymbolId> ids(names_.size());
    for (size_t i = 0; i < names_.size(); ++i) ids[i] = static_cast<SymbolId>(i);
    std::sort(ids.begin(), ids.end(), [&](SymbolId a, SymbolId b) { return names_[a] < names_[b]; });
    return ids;
}

} // namespace rsys
