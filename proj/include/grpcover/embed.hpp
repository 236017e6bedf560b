#pragma once

#include <optional>
#include <vector>

#include "grpcover/group.hpp"

namespace grpcover {

inline constexpr int kLatticeOrderLimit = 360;
inline constexpr int kDefaultSubgroupCap = 100000;

// Complete embedding search F -> G on generator images, candidates filtered
// by element order. Returns an exhaustively verified injective homomorphism
// (f-element index -> g-element index) or nullopt.
std::optional<std::vector<int>> find_monomorphism(const GroupPtr& f,
                                                  const GroupPtr& g);

// Every subgroup exactly once, ordered by (size, lexicographic members):
// cyclic subgroups closed under pairwise join until fixpoint.
std::vector<ElementSubset> all_subgroups(const GroupPtr& g,
                                         int cap = kDefaultSubgroupCap,
                                         int order_limit = kLatticeOrderLimit);

// Proper subgroups not contained in any other proper subgroup.
std::vector<ElementSubset> maximal_subgroups(const GroupPtr& g);

}  // namespace grpcover
