#pragma once

#include <cstdint>
#include <vector>

#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"

namespace cycdes {

inline constexpr std::int64_t kDefaultSytLimit = 10'000'000;

// Standard Young tableau of a skew shape: entries 1..n, rows increase left to
// right, columns increase top to bottom.
class StandardTableau {
public:
    StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int entry(int r, int c) const;                  // absolute column c
    int row_of(int value) const;

    std::vector<int> reading_word() const;          // rows top-down, left to right

    bool operator==(const StandardTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;            // rows_[r][c - row_begin(r)]
};

// Descent set over [n-1]: i is a descent when i+1 sits in a strictly lower row.
Subset des_set(const StandardTableau& t);

// All standard tableaux, sorted lexicographically by reading word.  Throws
// ResourceError when more than `limit` tableaux would be produced.
std::vector<StandardTableau> enumerate_syt(const SkewShape& shape,
                                           std::int64_t limit = kDefaultSytLimit);

std::int64_t count_syt(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);

// --- horizontal strips (direct sums of single rows, >= 2 blocks) ---

// Cyclic descent set: i in [n] is a cyclic descent when i+1 (n+1 meaning 1)
// sits in a strictly lower row.
Subset strip_cdes(const StandardTableau& t);

// Cyclic rotation companion: add 1 to every entry mod n, then re-sort each row.
StandardTableau strip_p(const StandardTableau& t);

// Embed a permutation (one-line, values 1..n) as a standard tableau of the
// n-cell antidiagonal strip: cell k from the southwest holds w^{-1}(k).
StandardTableau permutation_to_strip_tableau(const std::vector<int>& w);

// --- rectangles ---

// Jeu-de-taquin promotion on rectangular straight shapes with both sides >= 2:
// delete n, slide the hole to the top-left corner, shift entries up by one and
// place 1 in the corner.
StandardTableau promotion(const StandardTableau& t);

// --- semistandard tableaux ---

class SemistandardTableau {
public:
    SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const;
    std::vector<int> content(int max_entry) const;  // multiplicity of 1..max_entry

    bool operator==(const SemistandardTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Number of semistandard tableaux with entries in [max_entry], computed by a
// dynamic program over chains of partitions separated by horizontal strips.
std::int64_t count_ssyt(const SkewShape& shape, int max_entry);

// Same, with prescribed content (content[i] cells holding value i+1).
std::int64_t count_ssyt(const SkewShape& shape, int max_entry, const std::vector<int>& content);

// Semistandard fillings of the finite ribbon of ccomp_of_subset(n, J) with
// entries in [max_entry] whose extreme southwest entry is strictly smaller than
// the extreme northeast entry.  Deterministic order.
std::vector<SemistandardTableau> enumerate_cylindric_tableaux(int n, const Subset& j_set,
                                                              int max_entry);

}  // namespace cycdes
