#include "grpcover/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "grpcover/errors.hpp"
#include "hom_search.hpp"

namespace grpcover {

namespace detail {

std::optional<std::vector<int>> search_monomorphism(
    const GroupTable& f, const GroupTable& g, const std::vector<int>& gens,
    const std::vector<std::vector<int>>& candidates) {
    const int nf = f.order();
    const int ng = g.order();
    if (gens.empty()) {  // trivial f
        return std::vector<int>{0};
    }

    std::vector<int> fmap(nf, -1);
    std::vector<bool> gused(ng, false);
    std::vector<int> span;
    fmap[0] = 0;
    gused[0] = true;
    span.push_back(0);

    // Assign fmap[x]=y, then close the span under products, checking
    // consistency and injectivity. Records additions for rollback.
    auto close_with = [&](int x0, int y0, std::vector<int>& added) -> bool {
        auto assign = [&](int x, int y) -> bool {
            if (fmap[x] >= 0) return fmap[x] == y;
            if (gused[y]) return false;
            fmap[x] = y;
            gused[y] = true;
            added.push_back(x);
            span.push_back(x);
            return true;
        };
        if (!assign(x0, y0)) return false;
        std::size_t k = span.size() - added.size();
        while (k < span.size()) {
            const int x = span[k];
            const int X = fmap[x];
            for (std::size_t i = 0; i < span.size(); ++i) {
                const int y = span[i];
                const int Y = fmap[y];
                if (!assign(f.mul(x, y), g.mul(X, Y))) return false;
                if (!assign(f.mul(y, x), g.mul(Y, X))) return false;
            }
            ++k;
        }
        return true;
    };

    auto undo = [&](const std::vector<int>& added) {
        for (auto it = added.rbegin(); it != added.rend(); ++it) {
            gused[fmap[*it]] = false;
            fmap[*it] = -1;
            span.pop_back();
        }
    };

    std::vector<int> result;
    std::function<bool(std::size_t)> rec = [&](std::size_t level) -> bool {
        if (level == gens.size()) {
            if (static_cast<int>(span.size()) != nf) return false;
            result = fmap;
            return true;
        }
        const int gen = gens[level];
        if (fmap[gen] >= 0) return rec(level + 1);
        for (int h : candidates[level]) {
            if (gused[h]) continue;
            std::vector<int> added;
            if (close_with(gen, h, added) && rec(level + 1)) return true;
            undo(added);
        }
        return false;
    };

    if (rec(0)) return result;
    return std::nullopt;
}

bool verify_monomorphism(const GroupTable& f, const GroupTable& g,
                         const std::vector<int>& map) {
    const int nf = f.order();
    if (static_cast<int>(map.size()) != nf) return false;
    std::vector<bool> used(g.order(), false);
    for (int x = 0; x < nf; ++x) {
        if (map[x] < 0 || map[x] >= g.order() || used[map[x]]) return false;
        used[map[x]] = true;
    }
    if (map[0] != 0) return false;
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nf; ++b)
            if (map[f.mul(a, b)] != g.mul(map[a], map[b])) return false;
    return true;
}

}  // namespace detail

namespace {

std::vector<int> class_size_per_element(const GroupTable& g) {
    auto classes = conjugacy_classes(g);
    std::vector<int> out(g.order());
    for (const auto& c : classes)
        for (int x : c) out[x] = static_cast<int>(c.size());
    return out;
}

}  // namespace

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "order=" << order << " hist={";
    for (auto [o, c] : order_histogram) os << o << ":" << c << " ";
    os << "} classes={";
    for (int s : class_sizes) os << s << " ";
    os << "} center=" << center_order << " derived=" << derived_order
       << " dlen=" << derived_length << " ab=[";
    for (int d : ab_invariants) os << d << " ";
    os << "]";
    return os.str();
}

Fingerprint fingerprint(const GroupPtr& g) {
    Fingerprint fp;
    fp.order = g->order();
    std::map<int, int> hist;
    for (int o : g->element_orders()) ++hist[o];
    fp.order_histogram.assign(hist.begin(), hist.end());

    auto classes = conjugacy_classes(*g);
    for (const auto& c : classes) {
        fp.class_sizes.push_back(static_cast<int>(c.size()));
        fp.class_order_sizes.emplace_back(g->element_order(c[0]),
                                          static_cast<int>(c.size()));
    }
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    std::sort(fp.class_order_sizes.begin(), fp.class_order_sizes.end());

    fp.center_order = center(g).size();
    auto der = derived_subgroup(g);
    fp.derived_order = der.size();

    // derived series length; -1 when the series stabilises above 1
    GroupPtr cur = g;
    int len = 0;
    while (cur->order() > 1) {
        auto d = derived_subgroup(cur);
        if (d.size() == cur->order()) {
            len = -1;
            break;
        }
        ++len;
        cur = sub_table(d);
    }
    fp.derived_length = len;
    fp.ab_invariants = abelianization(g);
    return fp;
}

std::vector<int> minimal_generating_sequence(const GroupTable& g) {
    const int n = g.order();
    if (n == 1) return {};
    std::vector<int> cand;
    for (int x = 1; x < n; ++x) cand.push_back(x);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        if (g.element_order(a) != g.element_order(b))
            return g.element_order(a) > g.element_order(b);
        return a < b;
    });
    for (int x : cand)
        if (g.element_order(x) == n) return {x};

    auto span_size = [&](const std::vector<int>& gens) {
        std::vector<bool> in(n, false);
        std::vector<int> el{0};
        in[0] = true;
        for (std::size_t i = 0; i < el.size(); ++i)
            for (int q : gens) {
                int v = g.mul(el[i], q);
                if (!in[v]) {
                    in[v] = true;
                    el.push_back(v);
                }
            }
        return static_cast<int>(el.size());
    };

    const int pair_limit = std::min<int>(static_cast<int>(cand.size()), 24);
    for (int i = 0; i < pair_limit; ++i)
        for (int y : cand) {
            if (y == cand[i]) continue;
            if (span_size({cand[i], y}) == n) return {cand[i], y};
        }

    std::vector<int> seq;
    for (int x : cand) {
        std::vector<int> trial = seq;
        trial.push_back(x);
        int sz = span_size(trial);
        if (sz > span_size(seq)) {
            seq = std::move(trial);
            if (sz == n) return seq;
        }
    }
    throw Error("generating sequence search failed");
}

std::optional<std::vector<int>> are_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return std::nullopt;
    if (a->order() == 1) return std::vector<int>{0};
    if (fingerprint(a) != fingerprint(b)) return std::nullopt;

    auto gens = minimal_generating_sequence(*a);
    auto cszA = class_size_per_element(*a);
    auto cszB = class_size_per_element(*b);
    std::vector<std::vector<int>> cands;
    for (int gen : gens) {
        std::vector<int> lst;
        for (int h = 0; h < b->order(); ++h)
            if (b->element_order(h) == a->element_order(gen) && cszB[h] == cszA[gen])
                lst.push_back(h);
        if (lst.empty()) return std::nullopt;
        cands.push_back(std::move(lst));
    }
    auto witness = detail::search_monomorphism(*a, *b, gens, cands);
    if (!witness) return std::nullopt;
    if (!detail::verify_monomorphism(*a, *b, *witness))
        throw Error("isomorphism witness failed verification");
    return witness;
}

std::vector<GroupPtr> dedupe_by_iso(const std::vector<GroupPtr>& gs) {
    std::vector<GroupPtr> reps;
    std::vector<Fingerprint> fps;
    for (const auto& g : gs) {
        Fingerprint fp = fingerprint(g);
        bool dup = false;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (fps[i] == fp && are_isomorphic(reps[i], g)) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            reps.push_back(g);
            fps.push_back(std::move(fp));
        }
    }
    return reps;
}

}  // namespace grpcover
