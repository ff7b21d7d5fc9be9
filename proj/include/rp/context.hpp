#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rp/error.hpp"

namespace rp {

/// An ordered list of polynomial-ring variables. When a context was formed by
/// juxtaposing two disjoint contexts, blockSplit records the boundary: the
/// first blockSplit variables form the left block, the rest the right block.
struct VariableContext {
    std::vector<std::string> names;
    std::optional<int> blockSplit;

    VariableContext() = default;

    explicit VariableContext(std::vector<std::string> varNames,
                             std::optional<int> split = std::nullopt)
        : names(std::move(varNames)), blockSplit(split) {
        std::set<std::string> seen;
        for (const auto& v : names) {
            if (v.empty()) throw PreconditionError("variable names must be nonempty");
            if (!seen.insert(v).second)
                throw PreconditionError("duplicate variable name '" + v + "'");
        }
        if (blockSplit &&
            (*blockSplit <= 0 || *blockSplit >= static_cast<int>(names.size())))
            throw PreconditionError("blockSplit must lie strictly inside the variable list");
    }

    int size() const { return static_cast<int>(names.size()); }

    int indexOf(const std::string& v) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == v) return i;
        return -1;
    }

    // Context identity for operation compatibility: same names in same order.
    // blockSplit is bookkeeping and does not participate.
    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names == b.names;
    }
    friend bool operator!=(const VariableContext& a, const VariableContext& b) {
        return !(a == b);
    }
};

/// Side-by-side union of two contexts with disjoint name sets; remembers the
/// block boundary so exponent vectors can be split back into (alpha, beta).
inline VariableContext juxtapose(const VariableContext& a, const VariableContext& b) {
    std::vector<std::string> names = a.names;
    for (const auto& v : b.names) {
        if (a.indexOf(v) >= 0)
            throw ContextMismatchError("contexts overlap in variable '" + v + "'");
        names.push_back(v);
    }
    return VariableContext(std::move(names), a.size());
}

}  // namespace rp
