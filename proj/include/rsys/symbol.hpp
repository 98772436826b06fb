#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rsys {

using SymbolId = int;

// Append-only registry of variable names. Ids are dense and stable; the
// graded-lex-by-name order used for printing and sign normalization is
// derived from the names, so registering new symbols never reorders old ones.
class SymbolTable {
public:
    SymbolId intern(std::string_view name);
    std::optional<SymbolId> find(std::string_view name) const;
    const std::string& name(SymbolId id) const;
    int size() const;

    // ids sorted by name; used by printers
    std::vector<SymbolId> ids_by_name() const;

private:
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

} // namespace rsys
