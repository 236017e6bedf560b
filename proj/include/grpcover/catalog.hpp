#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grpcover/group.hpp"

namespace grpcover {

// One small-groups library entry: permutation generators for the group
// with the standard (order, id) numbering.
struct CatalogEntry {
    int order = 0;
    int id = 0;
    int degree = 0;
    std::string name;  // optional display name
    GeneratorSet generators;
};

// The bundled small-groups database. Line-oriented text format:
//   # comment
//   order <n> count <k>
//   group <n> <id> degree <d> [name <token>] gens <cycles>[;<cycles>]*
//   end <n> sha256 <hex>
// The checksum covers the section's canonical text (see canonical_line).
class Catalog {
public:
    static Catalog parse(const std::string& text);
    static Catalog load_file(const std::string& path);
    static const Catalog& bundled();

    bool has_order(int n) const;
    int declared_count(int n) const;
    const std::vector<CatalogEntry>& entries(int n) const;
    const CatalogEntry* find(int n, int id) const;
    std::vector<int> orders() const;

    // Builds (and caches) the Cayley table, labelled "SG(n,id)".
    GroupPtr group(int n, int id) const;

private:
    struct Section {
        int declared = 0;
        std::vector<CatalogEntry> entries;  // id ascending
    };
    std::map<int, Section> sections_;
    mutable std::map<std::pair<int, int>, GroupPtr> cache_;
};

// Canonical text of one entry line (single spaces, canonical cycles).
std::string canonical_entry_line(const CatalogEntry& e);

struct CatalogIssue {
    int order = 0;
    std::string message;
};

struct CatalogReport {
    int entries_checked = 0;
    std::vector<CatalogIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Table invariants, declared counts, pairwise non-isomorphism per order.
CatalogReport verify_catalog(const Catalog& c);

// True iff 1 is the only divisor of m congruent to 1 mod p; then every
// group of order m*p has a normal Sylow p-subgroup. Requires p prime, p∤m.
bool sylow_forced_normal(long m, long p);

// A homomorphism k -> C_d as the value table over k's elements.
struct HomToCyclic {
    int modulus = 0;
    std::vector<int> values;
};

// All homomorphisms k -> C_d, through the abelianization invariant
// factors; count is the product of gcd(d_i, d).
std::vector<HomToCyclic> hom_classes_to_cyclic(const GroupPtr& k, int d);

long least_primitive_root(long p);

// Streams every group of order m*p as C_p x| K over catalog groups K of
// order m and all homomorphisms K -> Aut(C_p); raw candidates, in
// deterministic order, may repeat isomorphism classes. The callback
// returns false to stop early.
void for_each_order_mp_candidate(
    int m, long p, const Catalog& catalog,
    const std::function<bool(const GroupPtr&)>& fn);

// One representative per isomorphism class of groups of order m*p.
std::vector<GroupPtr> enumerate_order_mp(int m, long p, const Catalog& catalog);

}  // namespace grpcover
