#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grpcover/perm.hpp"

namespace grpcover {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// Canonical finite-group representation: a full Cayley table with the
// identity at index 0. Immutable once constructed; safe to share.
//
// Construction validates the group axioms: latin-square rows/columns,
// identity row/column, and associativity (exhaustive up to order 512,
// 10^6 fixed-seed random triples above that).
class GroupTable {
public:
    static GroupPtr from_elements(const std::vector<Permutation>& elems,
                                  std::string label = {});
    static GroupPtr from_table(std::vector<std::uint16_t> table,
                               std::string label = {});

    int order() const { return n_; }
    int mul(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * n_ + b];
    }
    int inv(int a) const { return inverse_[a]; }
    int element_order(int x) const;  // throws on out-of-range index
    int power(int x, long e) const;

    const std::vector<int>& element_orders() const { return orders_; }
    const std::string& label() const { return label_; }
    GroupPtr with_label(std::string label) const;

    bool same_table(const GroupTable& other) const {
        return table_ == other.table_;
    }

private:
    GroupTable() = default;
    void finish_init();  // inverses, orders, validation

    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inverse_;
    std::vector<int> orders_;
    std::string label_;
};

// Subgroup of `parent` as a sorted member list; always contains 0.
struct ElementSubset {
    GroupPtr parent;
    std::vector<int> members;  // sorted ascending

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;
    bool operator==(const ElementSubset& o) const { return members == o.members; }
};

// Validates closure under product/inverse and Lagrange divisibility.
ElementSubset make_subset(GroupPtr parent, std::vector<int> members);

// Conjugation orbits, classes sorted by (size, least member).
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);

ElementSubset center(const GroupPtr& g);
ElementSubset centralizer(const GroupPtr& g, const ElementSubset& s);
ElementSubset derived_subgroup(const GroupPtr& g);
ElementSubset subgroup_closure(const GroupPtr& g, const std::vector<int>& seed);
bool is_normal(const ElementSubset& s);

GroupPtr quotient(const GroupPtr& g, const ElementSubset& n);
// Same, also reporting each element's coset index.
GroupPtr quotient_with_map(const GroupPtr& g, const ElementSubset& n,
                           std::vector<int>* coset_of);

// The subgroup as a group in its own right (identity moved to index 0).
GroupPtr sub_table(const ElementSubset& s);

// Invariant factors d1 | d2 | ... of g / [g,g]; empty when perfect.
std::vector<int> abelianization(const GroupPtr& g);

// Explicit abelianization: invariant factors plus each element's
// coordinate tuple in the factor decomposition of g / [g,g].
struct AbelianizationMap {
    std::vector<int> factors;
    std::vector<std::vector<int>> coords;  // per parent element
};
AbelianizationMap abelianization_map(const GroupPtr& g);

// All subgroups <x> of prime order whose conjugacy closure stays inside,
// deduplicated, sorted by least member.
std::vector<ElementSubset> prime_order_normal_subgroups(const GroupPtr& g);

// Subgroup generated by all elements of p-power order; p must be prime.
ElementSubset p_element_closure(const GroupPtr& g, int p);

bool is_prime(long n);

}  // namespace grpcover
