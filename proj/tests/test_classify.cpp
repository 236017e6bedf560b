#include "grpcover/classify.hpp"

#include "doctest.h"
#include "grpcover/embed.hpp"
#include "test_builders.hpp"

using namespace grpcover;

TEST_CASE("is_abelian") {
    CHECK(is_abelian(make_cyclic(20)));
    CHECK_FALSE(is_abelian(make_s3()));
    CHECK(is_abelian(direct_product_table(make_cyclic(4), make_cyclic(6))));
}

TEST_CASE("is_nilpotent") {
    CHECK(is_nilpotent(make_dihedral(8)));  // 2-group
    CHECK(is_nilpotent(make_cyclic(12)));
    CHECK_FALSE(is_nilpotent(make_s3()));
    CHECK_FALSE(is_nilpotent(make_a4()));
    CHECK(is_nilpotent(direct_product_table(make_dihedral(8), make_cyclic(3))));
}

TEST_CASE("is_solvable") {
    CHECK(is_solvable(make_s4()));
    CHECK(is_solvable(make_dihedral(12)));
    CHECK_FALSE(is_solvable(make_a5()));
    CHECK_FALSE(is_solvable(direct_product_table(make_a5(), make_cyclic(3))));
}

TEST_CASE("is_supersolvable") {
    CHECK(is_supersolvable(make_cyclic(30)));
    CHECK(is_supersolvable(make_s3()));
    CHECK(is_supersolvable(make_dihedral(12)));
    CHECK_FALSE(is_supersolvable(make_a4()));  // no prime-order normal subgroup
    CHECK_FALSE(is_supersolvable(make_s4()));
    CHECK(is_supersolvable(direct_product_table(make_s3(), make_cyclic(4))));
}

TEST_CASE("is_metabelian") {
    CHECK(is_metabelian(make_dihedral(10)));
    CHECK(is_metabelian(make_a4()));     // derived = V4 abelian
    CHECK_FALSE(is_metabelian(make_s4()));  // derived = A4 nonabelian
    CHECK(is_metabelian(make_cyclic(9)));
    CHECK_FALSE(is_metabelian(make_a5()));
}

TEST_CASE("implication chain") {
    // abelian => nilpotent => supersolvable => solvable; metabelian => solvable
    std::vector<GroupPtr> pool{
        make_cyclic(1),  make_cyclic(12), make_s3(),     make_a4(),
        make_s4(),       make_a5(),       make_dihedral(8),
        make_dihedral(20),
        direct_product_table(make_s3(), make_s3()),
        direct_product_table(make_a4(), make_cyclic(2)),
        direct_product_table(make_cyclic(4), make_cyclic(6)),
    };
    for (const auto& g : pool) {
        auto f = classify_group(g);
        if (f.abelian) CHECK(f.nilpotent);
        if (f.nilpotent) CHECK(f.supersolvable);
        if (f.supersolvable) CHECK(f.solvable);
        if (f.metabelian) CHECK(f.solvable);
    }
}

TEST_CASE("closure under subgroups") {
    // every predicate passes to subgroups
    std::vector<GroupPtr> pool{make_s4(), make_dihedral(16), make_a4(),
                               direct_product_table(make_s3(), make_cyclic(2))};
    for (const auto& g : pool) {
        auto fg = classify_group(g);
        for (const auto& s : all_subgroups(g)) {
            auto h = sub_table(s);
            auto fh = classify_group(h);
            if (fg.abelian) CHECK(fh.abelian);
            if (fg.nilpotent) CHECK(fh.nilpotent);
            if (fg.supersolvable) CHECK(fh.supersolvable);
            if (fg.metabelian) CHECK(fh.metabelian);
            if (fg.solvable) CHECK(fh.solvable);
        }
    }
}

TEST_CASE("closure under direct products") {
    std::vector<GroupPtr> pool{make_s3(), make_cyclic(4), make_dihedral(8),
                               make_a4()};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            auto p = direct_product_table(a, b);
            auto fa = classify_group(a);
            auto fb = classify_group(b);
            auto fp = classify_group(p);
            CHECK(fp.abelian == (fa.abelian && fb.abelian));
            CHECK(fp.nilpotent == (fa.nilpotent && fb.nilpotent));
            CHECK(fp.solvable == (fa.solvable && fb.solvable));
            CHECK(fp.supersolvable == (fa.supersolvable && fb.supersolvable));
            CHECK(fp.metabelian == (fa.metabelian && fb.metabelian));
        }
}
