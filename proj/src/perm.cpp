#include "grpcover/perm.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "grpcover/errors.hpp"

namespace grpcover {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw Error("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    const int n = degree();
    std::vector<bool> done(n, false);
    std::string out;
    for (int start = 0; start < n; ++start) {
        if (done[start] || images_[start] == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(x + 1);
            done[x] = true;
            x = images_[x];
            first = false;
        } while (x != start);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw Error("degree mismatch in compose");
    std::vector<int> im(a.degree());
    for (int x = 0; x < a.degree(); ++x) im[x] = a(b(x));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(p.degree());
    for (int x = 0; x < p.degree(); ++x) im[p(x)] = x;
    return Permutation(std::move(im));
}

Permutation parse_cycles(const std::string& text, int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size())
        throw ParseError("empty cycle text", i);
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(')
            throw ParseError("expected '('", i);
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t pos = i;
            int val = 0;
            bool digits = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                digits = true;
                ++i;
            }
            if (!digits)
                throw ParseError("expected point number", pos);
            if (val < 1 || val > degree)
                throw ParseError("point " + std::to_string(val) + " out of range", pos);
            if (used[val - 1])
                throw ParseError("repeated point " + std::to_string(val), pos);
            used[val - 1] = true;
            cycle.push_back(val - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            } else {
                break;
            }
        }
        if (i == text.size() || text[i] != ')')
            throw ParseError("expected ')'", i);
        ++i;
        any = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            im[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!any)
        throw ParseError("no cycles found", 0);
    return Permutation(std::move(im));
}

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

}  // namespace

std::vector<Permutation> generate_elements(const GeneratorSet& gens, int cap) {
    if (gens.generators.empty())
        throw Error("generator set is empty");
    for (const auto& g : gens.generators)
        if (g.degree() != gens.degree)
            throw Error("generator degree mismatch");
    if (cap < 1)
        throw Error("cap must be at least 1");

    std::vector<Permutation> elems;
    std::unordered_map<std::vector<int>, int, VecHash> index;
    elems.push_back(Permutation::identity(gens.degree));
    index.emplace(elems[0].images(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens.generators) {
            Permutation next = compose(elems[i], g);
            if (index.emplace(next.images(), static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > cap)
                    throw CapExceeded("order exceeds cap " + std::to_string(cap));
            }
        }
    }
    return elems;
}

}  // namespace grpcover
