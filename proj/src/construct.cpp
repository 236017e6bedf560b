#include "grpcover/construct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "grpcover/catalog.hpp"
#include "grpcover/errors.hpp"

namespace grpcover {

// ---------------------------------------------------------------- builders

GroupPtr build_cyclic(int n) {
    if (n < 1) throw Error("cyclic order must be at least 1");
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>((a + b) % n);
    return GroupTable::from_table(std::move(t), "C" + std::to_string(n));
}

GroupPtr build_dihedral(int order) {
    if (order < 6 || order % 2 != 0)
        throw Error("dihedral order must be even and at least 6");
    const int n = order / 2;
    std::vector<std::uint16_t> t(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            const int ri = i % n, rj = j % n;
            const bool si = i >= n, sj = j >= n;
            const int r = si ? (ri - rj + n) % n : (ri + rj) % n;
            const bool s = si != sj;
            t[static_cast<std::size_t>(i) * order + j] =
                static_cast<std::uint16_t>(r + (s ? n : 0));
        }
    return GroupTable::from_table(std::move(t), "D" + std::to_string(order));
}

namespace {

// all permutations of n points in lexicographic image order
std::vector<Permutation> lexicographic_perms(int n, bool even_only) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    std::vector<Permutation> out;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (im[i] > im[j]) ++inversions;
            if (inversions % 2 != 0) continue;
        }
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

GroupPtr build_sym(int n) {
    if (n < 1) throw Error("symmetric degree must be at least 1");
    if (factorial(n) > kBuildOrderCap)
        throw CapExceeded("order cap exceeded building S" + std::to_string(n));
    return GroupTable::from_elements(lexicographic_perms(n, false),
                                     "S" + std::to_string(n));
}

GroupPtr build_alt(int n) {
    if (n < 1) throw Error("alternating degree must be at least 1");
    if (n >= 2 && factorial(n) / 2 > kBuildOrderCap)
        throw CapExceeded("order cap exceeded building A" + std::to_string(n));
    return GroupTable::from_elements(lexicographic_perms(n, true),
                                     "A" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const long order = static_cast<long>(a->order()) * b->order();
    if (order > kBuildOrderCap)
        throw CapExceeded("order cap exceeded: direct product of order " +
                          std::to_string(order));
    const int na = a->order(), nb = b->order(), n = static_cast<int>(order);
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(
                a->mul(i / nb, j / nb) * nb + b->mul(i % nb, j % nb));
    return GroupTable::from_table(std::move(t),
                                  a->label() + " x " + b->label());
}

namespace {

bool is_automorphism(const GroupTable& n, const std::vector<int>& img) {
    if (static_cast<int>(img.size()) != n.order()) return false;
    std::vector<bool> seen(n.order(), false);
    for (int v : img) {
        if (v < 0 || v >= n.order() || seen[v]) return false;
        seen[v] = true;
    }
    if (img[0] != 0) return false;
    for (int a = 0; a < n.order(); ++a)
        for (int b = 0; b < n.order(); ++b)
            if (img[n.mul(a, b)] != n.mul(img[a], img[b])) return false;
    return true;
}

}  // namespace

GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& actor,
                            const ActionSpec& action) {
    const int nn = normal->order();
    const int na = actor->order();
    if (static_cast<long>(nn) * na > kBuildOrderCap)
        throw CapExceeded("order cap exceeded: semidirect product");

    for (const auto& [k, img] : action.generator_images) {
        if (k < 0 || k >= na) throw Error("action generator index out of range");
        if (!is_automorphism(*normal, img))
            throw Error("action image is not an automorphism");
    }

    // extend generator images to the whole actor by breadth-first words
    std::vector<std::vector<int>> phi(na);
    std::vector<int> ident(nn);
    for (int x = 0; x < nn; ++x) ident[x] = x;
    std::vector<bool> known(na, false);
    phi[0] = ident;
    known[0] = true;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int a = queue[qi];
        for (const auto& [k, img] : action.generator_images) {
            const int b = actor->mul(a, k);
            std::vector<int> comp(nn);
            for (int x = 0; x < nn; ++x) comp[x] = phi[a][img[x]];
            if (!known[b]) {
                phi[b] = std::move(comp);
                known[b] = true;
                queue.push_back(b);
            } else if (phi[b] != comp) {
                throw Error("action assignment does not extend to a homomorphism");
            }
        }
    }
    for (bool k : known)
        if (!k) throw Error("action generators do not generate the actor");

    // full homomorphism check
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            const int ab = actor->mul(a, b);
            for (int x = 0; x < nn; ++x)
                if (phi[ab][x] != phi[a][phi[b][x]])
                    throw Error("action assignment does not extend to a homomorphism");
        }

    // element (h, k) at index h*na + k
    const int n = nn * na;
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int h1 = 0; h1 < nn; ++h1)
        for (int k1 = 0; k1 < na; ++k1)
            for (int h2 = 0; h2 < nn; ++h2)
                for (int k2 = 0; k2 < na; ++k2) {
                    const int h = normal->mul(h1, phi[k1][h2]);
                    const int k = actor->mul(k1, k2);
                    t[static_cast<std::size_t>(h1 * na + k1) * n + h2 * na + k2] =
                        static_cast<std::uint16_t>(h * na + k);
                }
    return GroupTable::from_table(std::move(t),
                                  normal->label() + ":" + actor->label());
}

// ---------------------------------------------------------------- presets

namespace {

// basis of an elementary abelian group of order p^dim
std::vector<int> elementary_basis(const GroupTable& n, int p, int dim) {
    std::vector<int> basis;
    std::vector<bool> in_span(n.order(), false);
    in_span[0] = true;
    std::vector<int> span{0};
    for (int x = 1; x < n.order() && static_cast<int>(basis.size()) < dim; ++x) {
        if (in_span[x]) continue;
        basis.push_back(x);
        std::vector<int> snapshot = span;
        for (int s : snapshot) {
            int cur = s;
            for (int k = 1; k < p; ++k) {
                cur = n.mul(cur, x);
                if (!in_span[cur]) {
                    in_span[cur] = true;
                    span.push_back(cur);
                }
            }
        }
    }
    return basis;
}

// automorphism of an elementary abelian group from a matrix over F_p
std::vector<int> matrix_automorphism(const GroupTable& n, int p,
                                     const std::vector<int>& basis,
                                     const std::vector<std::vector<int>>& mat) {
    const int dim = static_cast<int>(basis.size());
    // coordinates of every element
    std::vector<std::vector<int>> coord(n.order());
    std::vector<int> tup(dim, 0);
    bool done = false;
    while (!done) {
        int v = 0;
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < tup[i]; ++k) v = n.mul(v, basis[i]);
        coord[v] = tup;
        int i = dim - 1;
        while (i >= 0) {
            if (++tup[i] < p) break;
            tup[i] = 0;
            --i;
        }
        if (i < 0) done = true;
    }
    std::vector<int> img(n.order());
    for (int x = 0; x < n.order(); ++x) {
        std::vector<int> w(dim, 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                w[i] = (w[i] + mat[i][j] * coord[x][j]) % p;
        int v = 0;
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < w[i]; ++k) v = n.mul(v, basis[i]);
        img[x] = v;
    }
    return img;
}

void require_elementary(const GroupTable& n, int p, int dim,
                        const std::string& preset) {
    long want = 1;
    for (int i = 0; i < dim; ++i) want *= p;
    if (n.order() != want)
        throw Error("preset " + preset + " needs a normal factor of order " +
                    std::to_string(want));
    for (int x = 1; x < n.order(); ++x)
        if (n.element_order(x) != p)
            throw Error("preset " + preset +
                        " needs an elementary abelian normal factor");
}

int cyclic_generator(const GroupTable& a, int order, const std::string& preset) {
    if (a.order() != order)
        throw Error("preset " + preset + " needs an actor of order " +
                    std::to_string(order));
    for (int x = 1; x < a.order(); ++x)
        if (a.element_order(x) == order) return x;
    throw Error("preset " + preset + " needs a cyclic actor");
}

}  // namespace

ActionSpec make_preset_action(const std::string& name, const GroupPtr& normal,
                              const GroupPtr& actor) {
    ActionSpec spec;
    if (name == "rot4") {
        // quarter-turn of the plane over F3: (x,y) -> (-y,x); order 4
        require_elementary(*normal, 3, 2, name);
        const int t = cyclic_generator(*actor, 4, name);
        auto basis = elementary_basis(*normal, 3, 2);
        spec.generator_images.emplace_back(
            t, matrix_automorphism(*normal, 3, basis, {{0, 2}, {1, 0}}));
        return spec;
    }
    if (name == "frob8") {
        // multiplication by a generator of the order-8 unit group of the
        // 9-element field: 1 -> x, x -> x + 1
        require_elementary(*normal, 3, 2, name);
        const int t = cyclic_generator(*actor, 8, name);
        auto basis = elementary_basis(*normal, 3, 2);
        spec.generator_images.emplace_back(
            t, matrix_automorphism(*normal, 3, basis, {{0, 1}, {1, 1}}));
        return spec;
    }
    if (name == "comp5") {
        // companion matrix of x^4+x^3+x^2+x+1 over F2; fixed-point-free of
        // order 5
        require_elementary(*normal, 2, 4, name);
        const int t = cyclic_generator(*actor, 5, name);
        auto basis = elementary_basis(*normal, 2, 4);
        spec.generator_images.emplace_back(
            t, matrix_automorphism(*normal, 2, basis,
                                   {{0, 0, 0, 1},
                                    {1, 0, 0, 1},
                                    {0, 1, 0, 1},
                                    {0, 0, 1, 1}}));
        return spec;
    }
    if (name == "sign") {
        // actor's unique quotient of order 2 acts by inversion; the kernel
        // is the subgroup generated by all squares
        const int nn = normal->order();
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                if (normal->mul(a, b) != normal->mul(b, a))
                    throw Error("preset sign needs an abelian normal factor");
        std::vector<int> squares;
        for (int x = 0; x < actor->order(); ++x)
            squares.push_back(actor->mul(x, x));
        auto kernel = subgroup_closure(actor, squares);
        if (kernel.size() * 2 != actor->order())
            throw Error("preset sign needs an actor with a unique subgroup of index 2");
        std::vector<int> invert(nn);
        for (int x = 0; x < nn; ++x) invert[x] = normal->inv(x);
        std::vector<int> ident(nn);
        for (int x = 0; x < nn; ++x) ident[x] = x;
        // images for a generating set: all elements, odd ones invert
        for (int x = 1; x < actor->order(); ++x)
            spec.generator_images.emplace_back(
                x, kernel.contains(x) ? ident : invert);
        return spec;
    }
    throw Error("unknown action preset '" + name + "'");
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        long v = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a number", pos);
        return static_cast<int>(v);
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected a name", pos);
        return text.substr(start, pos - start);
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        const std::size_t start = pos;
        const char c = text[pos];
        auto make = [](GroupExpr e) { return std::make_shared<GroupExpr>(e); };

        if (text.compare(pos, 3, "SG(") == 0) {
            pos += 3;
            GroupExpr e;
            e.kind = GroupExpr::Kind::CatalogRef;
            e.n = integer();
            expect(',');
            e.id = integer();
            expect(')');
            return make(e);
        }
        if (text.compare(pos, 5, "GENS{") == 0) {
            pos += 5;
            GroupExpr e;
            e.kind = GroupExpr::Kind::Generators;
            e.gens.degree = integer();
            if (e.gens.degree < 1 || e.gens.degree > 10000)
                throw ParseError("bad degree", start);
            while (consume(';')) {
                skip_ws();
                std::size_t cstart = pos;
                int depth = 0;
                while (pos < text.size()) {
                    if (text[pos] == '(') ++depth;
                    if (text[pos] == ')') --depth;
                    ++pos;
                    if (depth == 0 &&
                        (pos >= text.size() || text[pos] == ';' || text[pos] == '}'))
                        break;
                }
                e.gens.generators.push_back(parse_cycles(
                    text.substr(cstart, pos - cstart), e.gens.degree));
            }
            expect('}');
            if (e.gens.generators.empty())
                throw ParseError("GENS needs at least one generator", start);
            return make(e);
        }
        if (c == 'C' || c == 'D' || c == 'S' || c == 'A') {
            ++pos;
            GroupExpr e;
            e.n = integer();
            switch (c) {
                case 'C':
                    e.kind = GroupExpr::Kind::Cyclic;
                    if (e.n < 1) throw ParseError("cyclic order must be >= 1", start);
                    break;
                case 'D':
                    e.kind = GroupExpr::Kind::Dihedral;
                    if (e.n < 6 || e.n % 2 != 0)
                        throw ParseError("dihedral order must be even and >= 6",
                                         start);
                    break;
                case 'S':
                    e.kind = GroupExpr::Kind::Sym;
                    if (e.n < 1) throw ParseError("degree must be >= 1", start);
                    break;
                default:
                    e.kind = GroupExpr::Kind::Alt;
                    if (e.n < 1) throw ParseError("degree must be >= 1", start);
            }
            return make(e);
        }
        throw ParseError("expected a group atom", pos);
    }

    ExprPtr parse_term() {
        if (consume('(')) {
            ExprPtr inner = parse_expr_rule();
            expect(')');
            return inner;
        }
        ExprPtr atom = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == ':') {
            const std::size_t colon = pos;
            ++pos;
            ExprPtr actor = parse_atom();
            skip_ws();
            if (pos >= text.size() || text[pos] != '[')
                throw ParseError("ambiguous semidirect product", colon);
            ++pos;
            GroupExpr e;
            e.kind = GroupExpr::Kind::Semidirect;
            e.left = atom;
            e.right = actor;
            e.preset = word();
            expect(']');
            return std::make_shared<GroupExpr>(e);
        }
        return atom;
    }

    ExprPtr parse_expr_rule() {
        ExprPtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                ExprPtr rhs = parse_term();
                GroupExpr e;
                e.kind = GroupExpr::Kind::Product;
                e.left = lhs;
                e.right = rhs;
                lhs = std::make_shared<GroupExpr>(e);
            } else {
                break;
            }
        }
        return lhs;
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.parse_expr_rule();
    if (!p.eof()) throw ParseError("unexpected trailing input", p.pos);
    return e;
}

std::string GroupExpr::render() const {
    switch (kind) {
        case Kind::Cyclic:
            return "C" + std::to_string(n);
        case Kind::Dihedral:
            return "D" + std::to_string(n);
        case Kind::Sym:
            return "S" + std::to_string(n);
        case Kind::Alt:
            return "A" + std::to_string(n);
        case Kind::CatalogRef:
            return "SG(" + std::to_string(n) + "," + std::to_string(id) + ")";
        case Kind::Product:
            return left->render() + " x " + right->render();
        case Kind::Semidirect:
            return left->render() + ":" + right->render() + "[" + preset + "]";
        case Kind::Generators: {
            std::string out = "GENS{" + std::to_string(gens.degree);
            for (const auto& g : gens.generators) out += ";" + g.cycle_string();
            return out + "}";
        }
    }
    return "?";
}

GroupPtr build(const ExprPtr& e, const Catalog& catalog) {
    switch (e->kind) {
        case GroupExpr::Kind::Cyclic:
            return build_cyclic(e->n);
        case GroupExpr::Kind::Dihedral:
            return build_dihedral(e->n);
        case GroupExpr::Kind::Sym:
            return build_sym(e->n);
        case GroupExpr::Kind::Alt:
            return build_alt(e->n);
        case GroupExpr::Kind::CatalogRef:
            return catalog.group(e->n, e->id);
        case GroupExpr::Kind::Product: {
            GroupPtr a = build(e->left, catalog);
            GroupPtr b = build(e->right, catalog);
            return direct_product(a, b)->with_label(e->render());
        }
        case GroupExpr::Kind::Semidirect: {
            GroupPtr n = build(e->left, catalog);
            GroupPtr a = build(e->right, catalog);
            ActionSpec spec = make_preset_action(e->preset, n, a);
            return semidirect_product(n, a, spec)->with_label(e->render());
        }
        case GroupExpr::Kind::Generators: {
            auto elems = generate_elements(e->gens);
            if (static_cast<long>(elems.size()) > kBuildOrderCap)
                throw CapExceeded("order cap exceeded building generators");
            return GroupTable::from_elements(elems, e->render());
        }
    }
    throw Error("unreachable expression kind");
}

GroupPtr build_expr(const std::string& text, const Catalog& catalog) {
    return build(parse_expr(text), catalog);
}

}  // namespace grpcover
