#include "grpcover/classify.hpp"

#include <map>
#include <vector>

#include "grpcover/iso.hpp"

namespace grpcover {

bool is_abelian(const GroupPtr& g) {
    const int n = g->order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g->mul(a, b) != g->mul(b, a)) return false;
    return true;
}

bool is_nilpotent(const GroupPtr& g) {
    long n = g->order();
    for (long p = 2; p <= n; ++p) {
        if (n % p != 0 || !is_prime(p)) continue;
        auto closure = p_element_closure(g, static_cast<int>(p));
        long sz = closure.size();
        while (sz % p == 0) sz /= p;
        if (sz != 1) return false;
    }
    return true;
}

bool is_solvable(const GroupPtr& g) {
    GroupPtr cur = g;
    while (cur->order() > 1) {
        auto d = derived_subgroup(cur);
        if (d.size() == cur->order()) return false;
        cur = sub_table(d);
    }
    return true;
}

namespace {

// memo: quotient towers revisit isomorphic groups; fingerprint buckets with
// an isomorphism confirmation on every hit
struct SupersolvableMemo {
    std::map<Fingerprint, std::vector<std::pair<GroupPtr, bool>>> entries;

    const bool* lookup(const Fingerprint& fp, const GroupPtr& g) {
        auto it = entries.find(fp);
        if (it == entries.end()) return nullptr;
        for (const auto& [rep, value] : it->second)
            if (are_isomorphic(rep, g)) return &value;
        return nullptr;
    }
    void store(const Fingerprint& fp, const GroupPtr& g, bool value) {
        entries[fp].emplace_back(g, value);
    }
};

bool supersolvable_rec(const GroupPtr& g, SupersolvableMemo& memo) {
    if (g->order() == 1) return true;
    Fingerprint fp = fingerprint(g);
    if (const bool* hit = memo.lookup(fp, g)) return *hit;
    bool result = false;
    for (const auto& nsub : prime_order_normal_subgroups(g)) {
        if (supersolvable_rec(quotient(g, nsub), memo)) {
            result = true;
            break;
        }
    }
    memo.store(fp, g, result);
    return result;
}

}  // namespace

bool is_supersolvable(const GroupPtr& g) {
    SupersolvableMemo memo;
    return supersolvable_rec(g, memo);
}

bool is_metabelian(const GroupPtr& g) {
    auto d = derived_subgroup(g);
    for (int a : d.members)
        for (int b : d.members)
            if (g->mul(a, b) != g->mul(b, a)) return false;
    return true;
}

ClassificationFlags classify_group(const GroupPtr& g) {
    ClassificationFlags f;
    f.abelian = is_abelian(g);
    f.nilpotent = f.abelian || is_nilpotent(g);
    f.supersolvable = f.nilpotent || is_supersolvable(g);
    f.metabelian = f.abelian || is_metabelian(g);
    f.solvable = f.supersolvable || f.metabelian || is_solvable(g);
    return f;
}

}  // namespace grpcover
