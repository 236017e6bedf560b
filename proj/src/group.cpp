#include "grpcover/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "grpcover/errors.hpp"

namespace grpcover {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

constexpr int kExhaustiveAssocLimit = 512;

}  // namespace

void GroupTable::finish_init() {
    const int n = n_;
    if (n <= 0 || table_.size() != static_cast<std::size_t>(n) * n)
        throw Error("table size mismatch");
    // identity at index 0
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw Error("index 0 is not the identity");
    }
    // latin square
    std::vector<bool> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            int v = mul(a, b);
            if (v < 0 || v >= n || seen[v]) throw Error("row is not a permutation");
            seen[v] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            int v = mul(b, a);
            if (seen[v]) throw Error("column is not a permutation");
            seen[v] = true;
        }
    }
    // associativity
    if (n <= kExhaustiveAssocLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw Error("associativity violated");
            }
    } else {
        std::mt19937 rng(0xC0FFEE);
        std::uniform_int_distribution<int> dist(0, n - 1);
        for (int k = 0; k < 1000000; ++k) {
            int a = dist(rng), b = dist(rng), c = dist(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw Error("associativity violated");
        }
    }
    // inverses
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw Error("one-sided inverse");
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0) throw Error("missing inverse");
    }
    // element orders
    orders_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int cur = x, k = 1;
        while (cur != 0) {
            cur = mul(cur, x);
            ++k;
            if (k > n) throw Error("order computation diverged");
        }
        orders_[x] = k;
        if (n % k != 0) throw Error("element order does not divide group order");
    }
}

GroupPtr GroupTable::from_table(std::vector<std::uint16_t> table, std::string label) {
    auto g = std::shared_ptr<GroupTable>(new GroupTable());
    std::size_t sz = table.size();
    int n = 0;
    while (static_cast<std::size_t>(n) * n < sz) ++n;
    if (static_cast<std::size_t>(n) * n != sz) throw Error("table is not square");
    g->n_ = n;
    g->table_ = std::move(table);
    g->label_ = std::move(label);
    g->finish_init();
    return g;
}

GroupPtr GroupTable::from_elements(const std::vector<Permutation>& elems,
                                   std::string label) {
    if (elems.empty()) throw Error("element list is empty");
    const int deg = elems[0].degree();
    int ident = -1;
    std::unordered_map<std::vector<int>, int, VecHash> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].degree() != deg) throw Error("element degree mismatch");
        if (!index.emplace(elems[i].images(), static_cast<int>(i)).second)
            throw Error("duplicate elements");
        if (elems[i].is_identity()) ident = static_cast<int>(i);
    }
    if (ident < 0) throw Error("identity missing");

    // reindex with identity first, preserving input order otherwise
    const int n = static_cast<int>(elems.size());
    std::vector<int> newpos(n);
    int next = 1;
    for (int i = 0; i < n; ++i) newpos[i] = (i == ident) ? 0 : next++;

    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Permutation prod = compose(elems[a], elems[b]);
            auto it = index.find(prod.images());
            if (it == index.end()) throw Error("element list is not closed");
            table[static_cast<std::size_t>(newpos[a]) * n + newpos[b]] =
                static_cast<std::uint16_t>(newpos[it->second]);
        }
    }
    return from_table(std::move(table), std::move(label));
}

int GroupTable::element_order(int x) const {
    if (x < 0 || x >= n_) throw Error("element index out of range");
    return orders_[x];
}

int GroupTable::power(int x, long e) const {
    const int o = orders_[x];
    e %= o;
    if (e < 0) e += o;
    int result = 0, base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GroupPtr GroupTable::with_label(std::string label) const {
    auto g = std::shared_ptr<GroupTable>(new GroupTable(*this));
    g->label_ = std::move(label);
    return g;
}

bool ElementSubset::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

ElementSubset make_subset(GroupPtr parent, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ElementSubset s{std::move(parent), std::move(members)};
    if (s.members.empty() || s.members[0] != 0)
        throw Error("subset must contain the identity");
    for (int a : s.members) {
        if (a < 0 || a >= s.parent->order()) throw Error("member out of range");
        if (!s.contains(s.parent->inv(a))) throw Error("subset not inverse-closed");
        for (int b : s.members)
            if (!s.contains(s.parent->mul(a, b)))
                throw Error("subset not closed under product");
    }
    if (s.parent->order() % s.size() != 0)
        throw Error("subgroup size violates Lagrange");
    return s;
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> orbit;
        const int id = static_cast<int>(classes.size());
        cls[x] = id;
        orbit.push_back(x);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            // conjugating by generators of G would suffice; at these sizes
            // conjugating by everything is simpler
            for (int t = 0; t < n; ++t) {
                int y = g.mul(g.mul(t, orbit[i]), g.inv(t));
                if (cls[y] < 0) {
                    cls[y] = id;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a[0] < b[0];
              });
    return classes;
}

ElementSubset center(const GroupPtr& g) {
    std::vector<int> members;
    const int n = g->order();
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int y = 0; y < n && central; ++y)
            central = g->mul(x, y) == g->mul(y, x);
        if (central) members.push_back(x);
    }
    return make_subset(g, std::move(members));
}

ElementSubset centralizer(const GroupPtr& g, const ElementSubset& s) {
    std::vector<int> members;
    for (int x = 0; x < g->order(); ++x) {
        bool commutes = true;
        for (int a : s.members) {
            if (g->mul(x, a) != g->mul(a, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) members.push_back(x);
    }
    return make_subset(g, std::move(members));
}

ElementSubset subgroup_closure(const GroupPtr& g, const std::vector<int>& seed) {
    const int n = g->order();
    std::vector<bool> in(n, false);
    std::vector<int> elems;
    in[0] = true;
    elems.push_back(0);
    for (int s : seed) {
        if (s < 0 || s >= n) throw Error("seed index out of range");
        if (!in[s]) {
            in[s] = true;
            elems.push_back(s);
        }
    }
    std::vector<int> gens(elems.begin() + 1, elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (int q : gens) {
            int v = g->mul(elems[i], q);
            if (!in[v]) {
                in[v] = true;
                elems.push_back(v);
            }
        }
    }
    // closure under right multiplication by generators yields all words, but
    // inverses come free only in finite groups; the subset check reverifies.
    return make_subset(g, std::move(elems));
}

ElementSubset derived_subgroup(const GroupPtr& g) {
    const int n = g->order();
    std::vector<bool> seen(n, false);
    std::vector<int> seed;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = g->mul(g->mul(a, b), g->inv(g->mul(b, a)));
            if (!seen[c]) {
                seen[c] = true;
                seed.push_back(c);
            }
        }
    return subgroup_closure(g, seed);
}

bool is_normal(const ElementSubset& s) {
    const auto& g = *s.parent;
    for (int t = 0; t < g.order(); ++t)
        for (int a : s.members)
            if (!s.contains(g.mul(g.mul(t, a), g.inv(t)))) return false;
    return true;
}

GroupPtr quotient_with_map(const GroupPtr& g, const ElementSubset& nsub,
                           std::vector<int>* coset_of_out) {
    if (!is_normal(nsub)) throw Error("subgroup is not normal");
    const int n = g->order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int a : nsub.members) coset_of[g->mul(x, a)] = id;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] =
                static_cast<std::uint16_t>(coset_of[g->mul(reps[i], reps[j])]);
    std::string label = g->label().empty() ? "?" : g->label();
    label += "/N" + std::to_string(nsub.size());
    if (coset_of_out) *coset_of_out = std::move(coset_of);
    return GroupTable::from_table(std::move(table), std::move(label));
}

GroupPtr quotient(const GroupPtr& g, const ElementSubset& nsub) {
    return quotient_with_map(g, nsub, nullptr);
}

GroupPtr sub_table(const ElementSubset& s) {
    const auto& g = *s.parent;
    const int m = s.size();
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[s.members[i]] = i;
    std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int v = pos[g.mul(s.members[i], s.members[j])];
            if (v < 0) throw Error("subset not closed");
            table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(v);
        }
    std::string label = g.label().empty() ? "?" : g.label();
    label += "<" + std::to_string(m) + ">";
    return GroupTable::from_table(std::move(table), std::move(label));
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Basis of an abelian group table: elements b1..bk with every element a
// unique product b1^e1 ... bk^ek, ei < order(bi).
struct AbelianBasis {
    std::vector<int> elems;   // basis elements
    std::vector<int> orders;  // their orders
};

// Cyclic factor orders of an abelian p-group from its order statistics:
// #{x : x^(p^i) = 1} = p^(sum_j min(lambda_j, i)) pins the partition lambda.
std::vector<long> primary_partition(const std::vector<int>& part_orders, long p) {
    long e = 0, m = static_cast<long>(part_orders.size());
    while (m > 1) {
        m /= p;
        ++e;
    }
    std::vector<long> nparts_ge;
    long prev = 0;
    for (long i = 1; i <= e; ++i) {
        long pi = 1;
        for (long k = 0; k < i; ++k) pi *= p;
        long ci = 0;
        for (int o : part_orders)
            if (pi % o == 0) ++ci;
        long expi = 0;
        while (ci % p == 0) {
            ci /= p;
            ++expi;
        }
        nparts_ge.push_back(expi - prev);
        prev = expi;
    }
    std::vector<long> lambda;
    for (long j = 0; j < nparts_ge[0]; ++j) {
        long sz = 0;
        for (long c : nparts_ge)
            if (c > j) ++sz;
        lambda.push_back(sz);  // descending part sizes
    }
    return lambda;
}

AbelianBasis abelian_basis(const GroupTable& q) {
    const int n = q.order();
    AbelianBasis basis;
    if (n == 1) return basis;

    std::vector<long> primes;
    {
        long m = n;
        for (long d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
    }
    for (long p : primes) {
        std::vector<int> part;
        std::vector<int> part_orders;
        for (int x = 0; x < n; ++x) {
            int o = q.element_order(x);
            while (o % p == 0) o /= static_cast<int>(p);
            if (o == 1) {
                part.push_back(x);
                part_orders.push_back(q.element_order(x));
            }
        }
        std::vector<long> lambda = primary_partition(part_orders, p);
        std::vector<long> want;  // required basis element orders, descending
        for (long l : lambda) {
            long o = 1;
            for (long k = 0; k < l; ++k) o *= p;
            want.push_back(o);
        }
        // complete backtracking: choose b_i of order want[i] with the span
        // growing by exactly that factor each step
        std::vector<int> chosen;
        auto span_of = [&](const std::vector<int>& b) -> long {
            std::vector<bool> in(n, false);
            std::vector<int> el{0};
            in[0] = true;
            for (std::size_t i = 0; i < el.size(); ++i)
                for (int g : b) {
                    int v = q.mul(el[i], g);
                    if (!in[v]) {
                        in[v] = true;
                        el.push_back(v);
                    }
                }
            return static_cast<long>(el.size());
        };
        std::function<bool(std::size_t, long)> rec = [&](std::size_t lvl,
                                                         long size) -> bool {
            if (lvl == want.size()) return true;
            for (int c : part) {
                if (q.element_order(c) != want[lvl]) continue;
                chosen.push_back(c);
                if (span_of(chosen) == size * want[lvl] &&
                    rec(lvl + 1, size * want[lvl]))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!rec(0, 1)) throw Error("abelian basis search failed");
        for (int b : chosen) {
            basis.elems.push_back(b);
            basis.orders.push_back(q.element_order(b));
        }
    }
    return basis;
}

}  // namespace

AbelianizationMap abelianization_map(const GroupPtr& g) {
    ElementSubset der = derived_subgroup(g);
    std::vector<int> coset_of;
    GroupPtr q = quotient_with_map(g, der, &coset_of);

    AbelianBasis basis = abelian_basis(*q);
    const int k = static_cast<int>(basis.elems.size());
    const int qn = q->order();

    // coordinates of each quotient element by enumerating all exponent tuples;
    // every element must be reached exactly once or the basis is no basis
    std::vector<std::vector<int>> qcoords(qn);
    std::vector<bool> hit(qn, false);
    std::vector<int> tup(k, 0);
    bool done = false;
    while (!done) {
        int v = 0;
        for (int i = 0; i < k; ++i) v = q->mul(v, q->power(basis.elems[i], tup[i]));
        if (hit[v]) throw Error("abelian basis is not independent");
        hit[v] = true;
        qcoords[v] = tup;
        int i = k - 1;
        while (i >= 0) {
            if (++tup[i] < basis.orders[i]) break;
            tup[i] = 0;
            --i;
        }
        if (i < 0) done = true;
    }
    for (bool h : hit)
        if (!h) throw Error("abelian basis does not span");

    // merge primary cyclic factors into invariant factors d1 | d2 | ...
    // basis currently lists p-primary factors; combine largest-with-largest
    struct Fac {
        long size;
        int basis_index;
    };
    std::map<long, std::vector<Fac>> primaries;
    for (int i = 0; i < k; ++i) {
        long o = basis.orders[i];
        long p = 2;
        while (o % p != 0) ++p;
        primaries[p].push_back({static_cast<long>(basis.orders[i]), i});
    }
    std::size_t rank = 0;
    for (auto& [p, v] : primaries) {
        std::sort(v.begin(), v.end(), [](const Fac& a, const Fac& b) {
            return a.size > b.size;
        });
        rank = std::max(rank, v.size());
    }
    AbelianizationMap out;
    std::vector<std::vector<int>> factor_basis_indices(rank);
    out.factors.assign(rank, 1);
    for (auto& [p, v] : primaries) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            out.factors[i] = static_cast<int>(out.factors[i] * v[i].size);
            factor_basis_indices[i].push_back(v[i].basis_index);
        }
    }
    // factors currently descending; spec wants ascending d1 | d2 | ...
    std::reverse(out.factors.begin(), out.factors.end());
    std::reverse(factor_basis_indices.begin(), factor_basis_indices.end());

    // per-element coordinates via CRT inside each invariant factor
    const int n = g->order();
    out.coords.assign(n, std::vector<int>(rank, 0));
    for (int x = 0; x < n; ++x) {
        const auto& qc = qcoords[coset_of[x]];
        for (std::size_t f = 0; f < rank; ++f) {
            long d = out.factors[f];
            // coordinate u mod d with u = e_i mod (p-part) for each primary
            // factor in this invariant factor (CRT)
            long u = 0;
            for (int bi : factor_basis_indices[f]) {
                long m = basis.orders[bi];
                long rest = d / m;
                // solve u ≡ e (mod m), u ≡ 0 (mod rest') — build via CRT:
                // u += e * rest * (rest^{-1} mod m)
                long e = qc[bi];
                long inv = 1;
                if (m > 1) {
                    // extended euclid for (rest mod m)^-1 mod m; gcd is 1
                    long t0 = 0, t1 = 1, r0 = m, r1 = rest % m;
                    while (r1 != 0) {
                        long qd = r0 / r1;
                        long r2 = r0 - qd * r1;
                        r0 = r1;
                        r1 = r2;
                        long t2 = t0 - qd * t1;
                        t0 = t1;
                        t1 = t2;
                    }
                    inv = ((t0 % m) + m) % m;
                }
                u = (u + e * (rest % d) % d * inv) % d;
            }
            out.coords[x][f] = static_cast<int>(u);
        }
    }
    return out;
}

std::vector<int> abelianization(const GroupPtr& g) {
    AbelianizationMap m = abelianization_map(g);
    return m.factors;
}

std::vector<ElementSubset> prime_order_normal_subgroups(const GroupPtr& g) {
    const int n = g->order();
    std::vector<ElementSubset> out;
    std::vector<std::vector<int>> seen;
    for (int x = 1; x < n; ++x) {
        if (!is_prime(g->element_order(x))) continue;
        // conjugacy closure of x must stay inside <x>
        std::vector<int> cyc;
        int cur = x;
        while (cur != 0) {
            cyc.push_back(cur);
            cur = g->mul(cur, x);
        }
        cyc.push_back(0);
        std::sort(cyc.begin(), cyc.end());
        bool normal = true;
        for (int t = 0; t < n && normal; ++t) {
            int y = g->mul(g->mul(t, x), g->inv(t));
            normal = std::binary_search(cyc.begin(), cyc.end(), y);
        }
        if (!normal) continue;
        if (std::find(seen.begin(), seen.end(), cyc) == seen.end()) {
            seen.push_back(cyc);
            out.push_back(make_subset(g, cyc));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ElementSubset& a, const ElementSubset& b) {
                  return a.members < b.members;
              });
    return out;
}

ElementSubset p_element_closure(const GroupPtr& g, int p) {
    if (!is_prime(p)) throw Error("p is not prime");
    std::vector<int> seed;
    for (int x = 0; x < g->order(); ++x) {
        int o = g->element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) seed.push_back(x);
    }
    return subgroup_closure(g, seed);
}

}  // namespace grpcover
