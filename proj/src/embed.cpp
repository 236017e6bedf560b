#include "grpcover/embed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "grpcover/errors.hpp"
#include "grpcover/iso.hpp"
#include "hom_search.hpp"

namespace grpcover {

namespace {

// Necessary condition: an embedding carries f's element-order histogram
// into g's, so g needs at least as many elements of every order.
bool histogram_dominates(const GroupTable& f, const GroupTable& g) {
    std::map<int, int> hf, hg;
    for (int o : f.element_orders()) ++hf[o];
    for (int o : g.element_orders()) ++hg[o];
    for (auto [o, c] : hf) {
        auto it = hg.find(o);
        if (it == hg.end() || it->second < c) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> find_monomorphism(const GroupPtr& f,
                                                  const GroupPtr& g) {
    if (g->order() % f->order() != 0) return std::nullopt;  // Lagrange
    if (!histogram_dominates(*f, *g)) return std::nullopt;
    auto gens = minimal_generating_sequence(*f);
    std::vector<std::vector<int>> cands;
    for (int gen : gens) {
        std::vector<int> lst;
        for (int h = 0; h < g->order(); ++h)
            if (g->element_order(h) == f->element_order(gen)) lst.push_back(h);
        if (lst.empty()) return std::nullopt;
        cands.push_back(std::move(lst));
    }
    auto witness = detail::search_monomorphism(*f, *g, gens, cands);
    if (!witness) return std::nullopt;
    if (!detail::verify_monomorphism(*f, *g, *witness))
        throw Error("embedding witness failed verification");
    return witness;
}

std::vector<ElementSubset> all_subgroups(const GroupPtr& g, int cap,
                                         int order_limit) {
    const int n = g->order();
    if (n > order_limit)
        throw CapExceeded("order " + std::to_string(n) +
                          " above subgroup lattice limit " +
                          std::to_string(order_limit));

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> atoms;  // cyclic subgroups
    for (int x = 0; x < n; ++x) {
        std::vector<int> cyc;
        int cur = 0;
        do {
            cyc.push_back(cur);
            cur = g->mul(cur, x);
        } while (cur != 0);
        std::sort(cyc.begin(), cyc.end());
        if (found.insert(cyc).second) atoms.push_back(cyc);
    }

    // close under join with atoms; every subgroup is a join of its cyclic
    // subgroups, so atom-joins reach everything
    std::vector<std::vector<int>> work(found.begin(), found.end());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const auto& a : atoms) {
            if (std::includes(work[i].begin(), work[i].end(), a.begin(), a.end()))
                continue;
            std::vector<int> seed = work[i];
            seed.insert(seed.end(), a.begin(), a.end());
            auto join = subgroup_closure(g, seed);
            if (found.insert(join.members).second) {
                work.push_back(join.members);
                if (static_cast<int>(found.size()) > cap)
                    throw CapExceeded("subgroup count exceeds cap " +
                                      std::to_string(cap));
            }
        }
    }

    std::vector<std::vector<int>> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::vector<ElementSubset> out;
    out.reserve(sorted.size());
    for (auto& m : sorted) out.push_back(make_subset(g, std::move(m)));
    return out;
}

std::vector<ElementSubset> maximal_subgroups(const GroupPtr& g) {
    auto subs = all_subgroups(g);
    std::vector<ElementSubset> proper;
    for (auto& s : subs)
        if (s.size() < g->order()) proper.push_back(std::move(s));
    std::vector<ElementSubset> out;
    for (const auto& s : proper) {
        bool maximal = true;
        for (const auto& t : proper) {
            if (t.size() <= s.size() || &t == &s) continue;
            if (std::includes(t.members.begin(), t.members.end(),
                              s.members.begin(), s.members.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace grpcover
