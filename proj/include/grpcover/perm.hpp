#pragma once

#include <string>
#include <vector>

namespace grpcover {

// A permutation of {0, ..., degree-1} stored as its image vector.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // validates bijection
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

    // Canonical cycle text, 1-based points: "(1,2,3)(4,5)", identity "()".
    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

// result maps x to a(b(x)); degrees must match
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; unmentioned
// points are fixed; "()" is the identity.
Permutation parse_cycles(const std::string& text, int degree);

struct GeneratorSet {
    int degree = 0;
    std::vector<Permutation> generators;  // nonempty, all of `degree`
};

inline constexpr int kDefaultClosureCap = 2000;

// Full closure of the generators under composition: breadth-first from the
// identity, generators applied in listed order, so the element order is
// reproducible. Throws CapExceeded when the closure grows past `cap`.
std::vector<Permutation> generate_elements(const GeneratorSet& gens,
                                           int cap = kDefaultClosureCap);

}  // namespace grpcover
