#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grpcover/group.hpp"

namespace grpcover {

class Catalog;

struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

// Abstract syntax for group constructions. Grammar (whitespace ignored):
//   expr := term ('x' term)*
//   term := atom | atom ':' atom '[' preset ']' | '(' expr ')'
//   atom := 'C'int | 'D'int | 'S'int | 'A'int
//         | 'SG(' int ',' int ')' | 'GENS{' degree ';' cycles (';' cycles)* '}'
// 'D' takes the group order (D10 has order 10). A bare ':' is rejected:
// semidirect products always need a named action preset.
struct GroupExpr {
    enum class Kind {
        Cyclic,
        Dihedral,
        Sym,
        Alt,
        Product,
        Semidirect,
        CatalogRef,
        Generators,
    };

    Kind kind;
    int n = 0;             // Cyclic/Dihedral order, Sym/Alt degree, SG order
    int id = 0;            // SG id
    ExprPtr left, right;   // Product factors / Semidirect normal, actor
    std::string preset;    // Semidirect action preset name
    GeneratorSet gens;     // Generators payload

    std::string render() const;  // canonical text form
};

ExprPtr parse_expr(const std::string& text);

// Assignment of automorphisms of the normal factor to actor generators.
struct ActionSpec {
    std::vector<std::pair<int, std::vector<int>>> generator_images;
};

inline constexpr int kBuildOrderCap = 4000;

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& actor,
                            const ActionSpec& action);

// Named presets: rot4 (order-4 rotation of C3^2), frob8 (order-8 field
// multiplication on C3^2), comp5 (companion matrix of x^4+x^3+x^2+x+1 on
// C2^4), sign (inversion through the actor's unique index-2 subgroup).
ActionSpec make_preset_action(const std::string& name, const GroupPtr& normal,
                              const GroupPtr& actor);

GroupPtr build(const ExprPtr& e, const Catalog& catalog);
GroupPtr build_expr(const std::string& text, const Catalog& catalog);

// Plain builders (also used by build()).
GroupPtr build_cyclic(int n);
GroupPtr build_dihedral(int order);
GroupPtr build_sym(int n);
GroupPtr build_alt(int n);

}  // namespace grpcover
