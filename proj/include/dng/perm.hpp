#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dng/errors.hpp"

namespace dng {

// A bijection on {0..n-1}, stored as the image array: images()[i] is where
// point i goes. Points are 0-based internally; all text I/O is 1-based
// disjoint cycle notation.
class Permutation {
public:
    // Validates that `images` is a bijection on {0..n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Points moved by this permutation, ascending. Empty iff identity.
    std::vector<int> moved_points() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    // Lexicographic on the image array; the identity is the minimum of any group.
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// result(i) = p(q(i)): apply q first, then p. Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// Conjugate g p g^-1.
Permutation conjugate(const Permutation& g, const Permutation& p);

// Commutator a b a^-1 b^-1.
Permutation commutator(const Permutation& a, const Permutation& b);

// Parses whitespace-tolerant disjoint cycle notation over 1-based points,
// e.g. "(1 2 3)(4 5)". "()" is the identity. Points absent from cycles are
// fixed. Throws InputError with the offending position for repeated points,
// out-of-range points, or malformed parentheses.
Permutation parse_cycles(const std::string& text, int degree);

// 1-based disjoint cycle notation, cycles ordered by least element,
// each cycle starting at its least element. Identity renders as "()".
std::string to_cycle_string(const Permutation& p);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.images())
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};

} // namespace dng
