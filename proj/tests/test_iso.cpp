#include "grpcover/iso.hpp"

#include <algorithm>

#include "doctest.h"
#include "grpcover/errors.hpp"
#include "test_builders.hpp"

using namespace grpcover;

TEST_CASE("fingerprint distinguishes C4 from C2xC2") {
    auto c4 = make_cyclic(4);
    auto v4 = direct_product_table(make_cyclic(2), make_cyclic(2));
    auto f1 = fingerprint(c4), f2 = fingerprint(v4);
    CHECK(f1 != f2);
    CHECK(f1.order_histogram !=
          f2.order_histogram);  // {1:1,2:1,4:2} vs {1:1,2:3}
}

TEST_CASE("fingerprint is deterministic") {
    auto a = make_s4();
    auto b = make_s4();
    CHECK(fingerprint(a) == fingerprint(b));
}

TEST_CASE("fingerprint distinguishes C6 from S3 by class sizes") {
    auto f1 = fingerprint(make_cyclic(6));
    auto f2 = fingerprint(make_s3());
    CHECK(f1.class_sizes != f2.class_sizes);
}

TEST_CASE("are_isomorphic basics") {
    auto g = make_s4();
    auto w = are_isomorphic(g, g);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);

    CHECK(are_isomorphic(make_cyclic(6),
                         direct_product_table(make_cyclic(2), make_cyclic(3)))
              .has_value());
    CHECK_FALSE(are_isomorphic(make_cyclic(6), make_s3()).has_value());
    CHECK_FALSE(
        are_isomorphic(make_cyclic(4),
                       direct_product_table(make_cyclic(2), make_cyclic(2)))
            .has_value());
}

TEST_CASE("witness is multiplicative and bijective") {
    auto a = make_cyclic(6);
    auto b = direct_product_table(make_cyclic(2), make_cyclic(3));
    auto w = are_isomorphic(a, b);
    REQUIRE(w.has_value());
    std::vector<bool> hit(6, false);
    for (int x = 0; x < 6; ++x) {
        CHECK_FALSE(hit[(*w)[x]]);
        hit[(*w)[x]] = true;
    }
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            CHECK((*w)[a->mul(x, y)] == b->mul((*w)[x], (*w)[y]));
}

TEST_CASE("dedupe_by_iso") {
    auto c6 = make_cyclic(6);
    auto c2c3 = direct_product_table(make_cyclic(2), make_cyclic(3));
    auto s3 = make_s3();
    auto out = dedupe_by_iso({c6, c2c3, s3});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == c6);
    CHECK(out[1] == s3);
    CHECK(dedupe_by_iso({}).empty());
}

TEST_CASE("minimal generating sequence generates") {
    for (const GroupPtr& g :
         {make_s4(), make_a5(), make_dihedral(16), make_cyclic(30),
          direct_product_table(make_cyclic(2), make_cyclic(2))}) {
        auto gens = minimal_generating_sequence(*g);
        CHECK(subgroup_closure(g, gens).size() == g->order());
        CHECK(gens.size() <= 3);
    }
}

namespace {

// independent oracle: brute-force search over identity-fixing bijections
// constrained to match element orders, element-by-element with pruning
bool brute_force_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    const int n = a->order();
    if (b->order() != n) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;

    // candidate images by element order
    std::function<bool(int)> rec = [&](int x) -> bool {
        if (x == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || b->element_order(y) != a->element_order(x)) continue;
            bool ok = true;
            for (int z = 0; z < x && ok; ++z) {
                int xz = a->mul(x, z), zx = a->mul(z, x);
                if (xz < x || xz == x) {
                    int img = xz == x ? y : map[xz];
                    if (b->mul(y, map[z]) != img) ok = false;
                }
                if (ok && (zx < x || zx == x)) {
                    int img = zx == x ? y : map[zx];
                    if (b->mul(map[z], y) != img) ok = false;
                }
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (rec(x + 1)) return true;
            used[y] = false;
            map[x] = -1;
        }
        return false;
    };
    if (!rec(1)) return false;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            if (map[a->mul(x, z)] != b->mul(map[x], map[z])) return false;
    return true;
}

}  // namespace

TEST_CASE("backtracking agrees with brute force on small groups") {
    std::vector<GroupPtr> pool{
        make_cyclic(8),
        direct_product_table(make_cyclic(4), make_cyclic(2)),
        make_dihedral(8),
        direct_product_table(
            make_cyclic(2), direct_product_table(make_cyclic(2), make_cyclic(2))),
        make_cyclic(12),
        make_dihedral(12),
        make_a4(),
        direct_product_table(make_cyclic(6), make_cyclic(2)),
        direct_product_table(make_s3(), make_cyclic(2)),
    };
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (pool[i]->order() != pool[j]->order()) continue;
            bool fast = are_isomorphic(pool[i], pool[j]).has_value();
            bool brute = brute_force_isomorphic(pool[i], pool[j]);
            CHECK(fast == brute);
        }
}

TEST_CASE("different fingerprints imply non-isomorphic") {
    std::vector<GroupPtr> pool{make_cyclic(8), make_dihedral(8), make_a4(),
                               make_cyclic(12), make_s4()};
    for (const auto& a : pool)
        for (const auto& b : pool)
            if (fingerprint(a) != fingerprint(b))
                CHECK_FALSE(are_isomorphic(a, b).has_value());
}
