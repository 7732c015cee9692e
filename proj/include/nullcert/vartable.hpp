#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullcert/errors.hpp"

namespace nullcert {

using VarId = std::uint32_t;

enum class VarRole { Indicator, Auxiliary };

// Ordered symbol table. Names are unique; roles are fixed when a variable
// is added. Polynomials share a const table via shared_ptr.
class VariableTable {
public:
    VarId add(std::string name, VarRole role) {
        if (index_.count(name))
            throw structural_error("duplicate variable name '" + name + "'");
        VarId id = static_cast<VarId>(entries_.size());
        index_.emplace(name, id);
        entries_.emplace_back(std::move(name), role);
        return id;
    }

    std::size_t size() const { return entries_.size(); }

    const std::string& name(VarId v) const {
        check(v);
        return entries_[v].first;
    }

    VarRole role(VarId v) const {
        check(v);
        return entries_[v].second;
    }

    std::optional<VarId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<VarId> indicator_ids() const {
        std::vector<VarId> out;
        for (VarId v = 0; v < entries_.size(); ++v)
            if (entries_[v].second == VarRole::Indicator) out.push_back(v);
        return out;
    }

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    void check(VarId v) const {
        if (v >= entries_.size())
            throw structural_error("variable id out of range");
    }

    std::vector<std::pair<std::string, VarRole>> entries_;
    std::map<std::string, VarId> index_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace nullcert
