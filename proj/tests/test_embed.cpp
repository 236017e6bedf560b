#include "grpcover/embed.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "grpcover/errors.hpp"
#include "grpcover/iso.hpp"
#include "test_builders.hpp"

using namespace grpcover;

namespace {

// the Frobenius group of order 36, C3^2 with a 90-degree rotation action
GroupPtr make_f36() {
    // on 9 points {0..8} = F3^2: translations and the rotation
    auto enc = [](int x, int y) { return 3 * x + y; };
    std::vector<int> t1(9), t2(9), rot(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            t1[enc(x, y)] = enc((x + 1) % 3, y);
            t2[enc(x, y)] = enc(x, (y + 1) % 3);
            rot[enc(x, y)] = enc((3 - y) % 3, x);  // (x,y) -> (-y,x)
        }
    GeneratorSet gs{9, {Permutation(t1), Permutation(t2), Permutation(rot)}};
    return GroupTable::from_elements(generate_elements(gs), "F36");
}

}  // namespace

TEST_CASE("find_monomorphism examples") {
    auto f36 = make_f36();
    CHECK(f36->order() == 36);
    CHECK(find_monomorphism(make_s3(), f36).has_value());
    CHECK(find_monomorphism(make_cyclic(4), f36).has_value());
    auto v4 = direct_product_table(make_cyclic(2), make_cyclic(2));
    CHECK_FALSE(find_monomorphism(v4, make_cyclic(4)).has_value());
    CHECK(find_monomorphism(make_dihedral(10), make_a5()).has_value());
    CHECK(find_monomorphism(make_a4(), make_a5()).has_value());
    CHECK_FALSE(find_monomorphism(make_s4(), make_a5()).has_value());
}

TEST_CASE("witness image size equals the embedded order") {
    auto w = find_monomorphism(make_dihedral(10), make_a5());
    REQUIRE(w.has_value());
    std::vector<bool> seen(60, false);
    int count = 0;
    for (int img : *w)
        if (!seen[img]) {
            seen[img] = true;
            ++count;
        }
    CHECK(count == 10);
}

TEST_CASE("all_subgroups counts") {
    CHECK(all_subgroups(make_cyclic(5)).size() == 2);
    CHECK(all_subgroups(make_s3()).size() == 6);
    CHECK(all_subgroups(make_dihedral(8)).size() == 10);
    // order above the lattice limit
    CHECK_THROWS_AS(all_subgroups(make_cyclic(7), 100000, 5), CapExceeded);
    // subgroup count cap
    CHECK_THROWS_AS(all_subgroups(make_dihedral(8), 3), CapExceeded);
}

TEST_CASE("all_subgroups members are subgroups, joins present") {
    auto g = make_a4();
    auto subs = all_subgroups(g);
    CHECK(subs.size() == 10);  // A4: 1,3xC2,4xC3,V4,A4
    for (const auto& s : subs) CHECK(g->order() % s.size() == 0);
    // pairwise joins are present
    auto contains = [&](const std::vector<int>& m) {
        for (const auto& s : subs)
            if (s.members == m) return true;
        return false;
    };
    for (const auto& a : subs)
        for (const auto& b : subs) {
            std::vector<int> seed = a.members;
            seed.insert(seed.end(), b.members.begin(), b.members.end());
            CHECK(contains(subgroup_closure(g, seed).members));
        }
}

TEST_CASE("maximal_subgroups") {
    auto c1 = maximal_subgroups(make_cyclic(5));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].size() == 1);

    auto c12m = maximal_subgroups(make_cyclic(12));
    std::vector<int> sizes;
    for (const auto& s : c12m) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{4, 6});

    auto a5m = maximal_subgroups(make_a5());
    std::set<int> msizes;
    for (const auto& s : a5m) msizes.insert(s.size());
    CHECK(msizes == std::set<int>{6, 10, 12});
}

TEST_CASE("embedding agrees with subgroup lattice") {
    // find_monomorphism(f,g) succeeds iff some subgroup of size |f| is
    // isomorphic to f -- the two independent implementations cross-check
    std::vector<GroupPtr> small{make_cyclic(2),  make_cyclic(3),
                                make_cyclic(4),  make_cyclic(6),
                                make_s3(),       make_a4(),
                                make_dihedral(8), make_dihedral(10)};
    std::vector<GroupPtr> hosts{make_s4(), make_a5(), make_dihedral(20),
                                make_cyclic(24)};
    for (const auto& g : hosts) {
        auto subs = all_subgroups(g);
        for (const auto& f : small) {
            if (g->order() % f->order() != 0) continue;
            bool embeds = find_monomorphism(f, g).has_value();
            bool in_lattice = false;
            for (const auto& s : subs) {
                if (s.size() != f->order()) continue;
                if (are_isomorphic(f, sub_table(s)).has_value()) {
                    in_lattice = true;
                    break;
                }
            }
            CHECK(embeds == in_lattice);
        }
    }
}

TEST_CASE("embedding is transitive through subgroups") {
    // F embeds in H and H <= G implies F embeds in G
    auto a5 = make_a5();
    auto subs = all_subgroups(a5);
    for (const auto& s : subs) {
        if (s.size() != 12) continue;
        auto h = sub_table(s);
        auto f = make_cyclic(3);
        if (find_monomorphism(f, h))
            CHECK(find_monomorphism(f, a5).has_value());
    }
}
