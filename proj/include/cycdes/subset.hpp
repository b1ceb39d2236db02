#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cycdes/errors.hpp"
#include "cycdes/partition.hpp"

namespace cycdes {

inline constexpr int kMaxSubsetN = 16;  // dense 2^n tables must stay in memory

// Subset of [n] = {1, ..., n}, stored as a bitmask (bit i-1 holds element i).
class Subset {
public:
    Subset() = default;
    Subset(int n, std::uint32_t mask);

    static Subset empty(int n) { return Subset(n, 0); }
    static Subset full(int n) { return Subset(n, n == 0 ? 0u : ((1u << n) - 1u)); }
    static Subset of(int n, std::initializer_list<int> elems);
    static Subset from_elements(int n, const std::vector<int>& elems);

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool is_empty() const { return mask_ == 0; }
    bool is_full() const { return mask_ == full(n_).mask_; }
    bool contains(int i) const { return i >= 1 && i <= n_ && (mask_ >> (i - 1)) & 1u; }

    Subset with(int i) const;
    Subset without(int i) const;
    Subset complement() const { return Subset(n_, full(n_).mask_ & ~mask_); }

    // j -> ((j + k - 1) mod n) + 1, elementwise.
    Subset rotated(int k) const;
    // j -> n - j, with 0 identified with n.
    Subset negated() const;

    std::vector<int> elements() const;  // ascending

    bool operator==(const Subset&) const = default;

    // lexicographic order on the ascending element lists
    static bool lex_less(const Subset& a, const Subset& b);

    std::string str() const;  // "{1,3,5}"

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

// The composition of n determined by a subset of [n-1]: consecutive differences
// with endpoints 0 and n.  The empty set maps to the single part (n).
Composition comp_of_subset(int n, const Subset& j_set);

// The cyclic analogue: differences around the circle, ending with the wrap-around
// part j_1 + n - j_t.  Requires a nonempty subset of [n]; a singleton maps to (n).
CyclicComposition ccomp_of_subset(int n, const Subset& j_set);

}  // namespace cycdes
