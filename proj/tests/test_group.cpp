#include "grpcover/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "grpcover/errors.hpp"
#include "test_builders.hpp"

using namespace grpcover;

TEST_CASE("from_elements basics") {
    auto s3 = make_s3();
    CHECK(s3->order() == 6);
    CHECK(s3->mul(0, 3) == 3);

    // non-closed: {id, (1,2,3)} misses (1,3,2)
    std::vector<Permutation> open{Permutation::identity(3),
                                  parse_cycles("(1,2,3)", 3)};
    CHECK_THROWS_AS(GroupTable::from_elements(open), Error);

    std::vector<Permutation> no_id{parse_cycles("(1,2)", 3)};
    CHECK_THROWS_AS(GroupTable::from_elements(no_id), Error);

    std::vector<Permutation> dup{Permutation::identity(3),
                                 Permutation::identity(3)};
    CHECK_THROWS_AS(GroupTable::from_elements(dup), Error);
}

TEST_CASE("element orders") {
    auto c20 = make_cyclic(20);
    CHECK(c20->element_order(0) == 1);
    CHECK(c20->element_order(1) == 20);
    auto d10 = make_dihedral(10);
    for (int x = 5; x < 10; ++x) CHECK(d10->element_order(x) == 2);
    CHECK_THROWS_AS(d10->element_order(99), Error);
}

namespace {

// independent oracle: direct conjugation partition
std::vector<std::vector<int>> brute_classes(const GroupPtr& g) {
    const int n = g->order();
    std::vector<std::vector<int>> out;
    std::vector<bool> done(n, false);
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::set<int> orbit;
        for (int t = 0; t < n; ++t) orbit.insert(g->mul(g->mul(t, x), g->inv(t)));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int y : cls) done[y] = true;
        out.push_back(cls);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a[0] < b[0];
    });
    return out;
}

}  // namespace

TEST_CASE("conjugacy classes") {
    auto c12 = make_cyclic(12);
    CHECK(conjugacy_classes(*c12).size() == 12);

    auto s3 = make_s3();
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes(*s3)) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    auto a5 = make_a5();
    std::vector<std::size_t> sizes5;
    for (const auto& c : conjugacy_classes(*a5)) sizes5.push_back(c.size());
    CHECK(sizes5 == std::vector<std::size_t>{1, 12, 12, 15, 20});

    for (const GroupPtr& g : {make_s3(), make_s4(), make_dihedral(8)})
        CHECK(conjugacy_classes(*g) == brute_classes(g));
}

TEST_CASE("class sizes sum to order and divide order") {
    for (const GroupPtr& g : {make_s4(), make_a5(), make_dihedral(12)}) {
        std::size_t total = 0;
        for (const auto& c : conjugacy_classes(*g)) {
            total += c.size();
            CHECK(g->order() % c.size() == 0);
        }
        CHECK(total == static_cast<std::size_t>(g->order()));
    }
}

TEST_CASE("center and centralizer") {
    CHECK(center(make_cyclic(12)).size() == 12);
    auto s3 = make_s3();
    CHECK(center(s3).size() == 1);
    auto d8 = make_dihedral(8);
    CHECK(center(d8).size() == 2);

    CHECK(centralizer(s3, make_subset(s3, {0})).size() == 6);
    CHECK(centralizer(d8, center(d8)).size() == 8);
    // centralizer of <transposition> in S3 has order 2
    int transposition = -1;
    for (int x = 1; x < 6; ++x)
        if (s3->element_order(x) == 2) {
            transposition = x;
            break;
        }
    auto sub = subgroup_closure(s3, {transposition});
    CHECK(centralizer(s3, sub).size() == 2);
}

TEST_CASE("derived subgroup") {
    CHECK(derived_subgroup(make_cyclic(15)).size() == 1);
    auto s4 = make_s4();
    auto d = derived_subgroup(s4);
    CHECK(d.size() == 12);  // A4, the unique subgroup of order 12
    CHECK(is_normal(d));
    CHECK(derived_subgroup(make_a5()).size() == 60);  // perfect
}

TEST_CASE("subgroup closure") {
    auto s3 = make_s3();
    CHECK(subgroup_closure(s3, {}).size() == 1);
    auto d10 = make_dihedral(10);
    for (int x = 1; x < 10; ++x)
        CHECK(subgroup_closure(d10, {x}).size() == d10->element_order(x));
    // two distinct reflections generate all of D10
    CHECK(subgroup_closure(d10, {5, 6}).size() == 10);
}

TEST_CASE("normality and quotients") {
    auto s3 = make_s3();
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK(is_normal(make_subset(s3, all)));

    int transposition = -1, three = -1;
    for (int x = 1; x < 6; ++x) {
        if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
        if (s3->element_order(x) == 3 && three < 0) three = x;
    }
    CHECK_FALSE(is_normal(subgroup_closure(s3, {transposition})));
    auto n3 = subgroup_closure(s3, {three});
    CHECK(is_normal(n3));

    auto q = quotient(s3, n3);
    CHECK(q->order() == 2);
    CHECK(q->order() * n3.size() == s3->order());
    CHECK_THROWS_AS(quotient(s3, subgroup_closure(s3, {transposition})), Error);

    CHECK(quotient(s3, make_subset(s3, {0}))->order() == 6);
    CHECK(quotient(s3, make_subset(s3, all))->order() == 1);
}

TEST_CASE("abelianization invariant factors") {
    CHECK(abelianization(make_cyclic(12)) == std::vector<int>{12});
    CHECK(abelianization(make_s4()) == std::vector<int>{2});
    CHECK(abelianization(make_a5()).empty());
    auto c2c6 = direct_product_table(make_cyclic(2), make_cyclic(6));
    CHECK(abelianization(c2c6) == std::vector<int>{2, 6});
    CHECK(abelianization(direct_product_table(make_cyclic(4), make_cyclic(6))) ==
          std::vector<int>{2, 12});

    for (const GroupPtr& g : {make_s4(), make_dihedral(12), c2c6}) {
        auto f = abelianization(g);
        long prod = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            prod *= f[i];
            if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
        }
        CHECK(prod == g->order() / derived_subgroup(g).size());
    }
}

TEST_CASE("abelianization coordinates form a homomorphism") {
    for (const GroupPtr& g :
         {make_s4(), make_dihedral(12), make_cyclic(24),
          direct_product_table(make_cyclic(4), make_cyclic(6))}) {
        auto m = abelianization_map(g);
        const int n = g->order();
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                int c = g->mul(a, b);
                for (std::size_t i = 0; i < m.factors.size(); ++i)
                    if (m.coords[c][i] !=
                        (m.coords[a][i] + m.coords[b][i]) % m.factors[i])
                        ok = false;
            }
        CHECK(ok);
    }
}

TEST_CASE("prime order normal subgroups") {
    CHECK(prime_order_normal_subgroups(make_cyclic(5)).size() == 1);
    auto s3 = make_s3();
    auto pn = prime_order_normal_subgroups(s3);
    REQUIRE(pn.size() == 1);
    CHECK(pn[0].size() == 3);
    CHECK(prime_order_normal_subgroups(make_a4()).empty());
}

TEST_CASE("p element closure") {
    auto c12 = make_cyclic(12);
    CHECK(p_element_closure(c12, 2).size() == 4);
    CHECK(p_element_closure(c12, 3).size() == 3);
    CHECK(p_element_closure(make_s3(), 2).size() == 6);
    CHECK(p_element_closure(make_dihedral(8), 2).size() == 8);
    CHECK_THROWS_AS(p_element_closure(make_s3(), 4), Error);
}

TEST_CASE("lagrange holds for produced subgroups") {
    for (const GroupPtr& g : {make_s4(), make_dihedral(12), make_a4()})
        for (const auto& s :
             {center(g), derived_subgroup(g), p_element_closure(g, 2)})
            CHECK(g->order() % s.size() == 0);
}

TEST_CASE("bad tables rejected") {
    std::vector<std::uint16_t> t{1, 0, 0, 1};  // 0 is not an identity
    CHECK_THROWS_AS(GroupTable::from_table(t), Error);
    // latin square with identity but not associative (smallest loops)
    std::vector<std::uint16_t> loop{
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 3, 4, 0, 1,
        3, 4, 0, 1, 2,  // deliberately scrambled
        4, 2, 1, 2, 0};
    CHECK_THROWS_AS(GroupTable::from_table(loop), Error);
}

TEST_CASE("sub_table of a subgroup is a group") {
    auto s4 = make_s4();
    auto d = derived_subgroup(s4);
    auto a4 = sub_table(d);
    CHECK(a4->order() == 12);
    CHECK(derived_subgroup(a4).size() == 4);
}
