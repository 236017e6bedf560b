#pragma once

#include <optional>
#include <vector>

#include "grpcover/group.hpp"

namespace grpcover::detail {

// Backtracking search for an injective homomorphism f -> g mapping the
// given generating sequence of f into the per-generator candidate lists.
// Complete: explores every candidate tuple, pruning by partial-closure
// consistency. The returned map is checked multiplicative on all pairs
// reachable in the closure, which is all of f once the generators are set.
std::optional<std::vector<int>> search_monomorphism(
    const GroupTable& f, const GroupTable& g, const std::vector<int>& gens,
    const std::vector<std::vector<int>>& candidates);

// Exhaustive re-verification: multiplicative on every pair and injective.
bool verify_monomorphism(const GroupTable& f, const GroupTable& g,
                         const std::vector<int>& map);

}  // namespace grpcover::detail
