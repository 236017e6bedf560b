#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "grpcover/group.hpp"

namespace grpcover {

// Cheap isomorphism invariants; equal for isomorphic groups (necessary
// condition only). class_order_sizes refines the two plain multisets.
struct Fingerprint {
    int order = 0;
    std::vector<std::pair<int, int>> order_histogram;    // (order, count)
    std::vector<int> class_sizes;                        // sorted
    std::vector<std::pair<int, int>> class_order_sizes;  // (elt order, size)
    int center_order = 0;
    int derived_order = 0;
    int derived_length = 0;  // -1 marks a non-solvable group
    std::vector<int> ab_invariants;

    auto operator<=>(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const GroupPtr& g);

// Short generating sequence: greedy by maximal element order, with a
// bounded search for one- and two-element generating sets first.
std::vector<int> minimal_generating_sequence(const GroupTable& g);

// Complete test via backtracking on generator images; returns a verified
// bijective homomorphism witness (a -> b, by element index) when one exists.
std::optional<std::vector<int>> are_isomorphic(const GroupPtr& a, const GroupPtr& b);

// One representative per isomorphism class; first occurrence kept.
std::vector<GroupPtr> dedupe_by_iso(const std::vector<GroupPtr>& gs);

}  // namespace grpcover
