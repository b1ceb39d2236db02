#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cycdes/partition.hpp"
#include "cycdes/subset.hpp"

namespace cycdes {

enum class ShapeKind { ConnectedRibbon, GeneralizedRibbon, Other };

struct ShapeInfo {
    ShapeKind kind;
    int components;  // number of edge-connected components
    int height;      // number of nonempty rows
};

// Skew diagram outer/inner, stored as given (no implicit normalization).
// Rows are indexed top-down; row r occupies columns [inner_r, outer_r).
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    static SkewShape straight(Partition outer) { return SkewShape(std::move(outer), Partition()); }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int size() const { return size_; }                       // number of cells
    int rows() const { return outer_.rows(); }
    int row_begin(int r) const { return inner_.part(r); }
    int row_end(int r) const { return outer_.part(r); }
    int row_size(int r) const { return row_end(r) - row_begin(r); }
    bool cell_at(int r, int c) const;

    std::vector<std::pair<int, int>> cells() const;          // (row, col), row-major

    int components() const;
    int height() const;                                      // nonempty rows
    int width() const;                                       // nonempty columns
    bool contains_square() const;                            // a 2x2 block of cells
    bool is_connected() const { return components() == 1; }
    bool is_connected_ribbon() const;
    bool is_generalized_ribbon() const;                      // every component a ribbon
    ShapeInfo classify() const;

    // Cell-set equality after translating both diagrams to a minimal bounding box.
    bool operator==(const SkewShape& o) const;

    std::string str() const;                                 // "outer/inner" in part lists

private:
    Partition outer_, inner_;
    int size_ = 0;
};

// Stack the given blocks so that each is strictly southwest of the next, sharing
// no row or column, with no empty rows or columns introduced between them.
SkewShape direct_sum(const std::vector<SkewShape>& blocks);

// Connected ribbon whose row sizes, read southwest to northeast, are the parts.
SkewShape ribbon_of_composition(const Composition& alpha);
SkewShape ribbon_of_composition(const std::vector<int>& parts);

// Horizontal strip with one single-row block per part, southwest to northeast.
SkewShape strip_of_composition(const Composition& alpha);

// n singleton cells along the antidiagonal.
SkewShape antidiagonal_strip(int n);

// A k-cell column with an (n-k)-cell row strictly to its northeast.
SkewShape column_row_sum(int n, int k);

// Shape grammar: "4,3,2/1,1" (outer/inner, ^ for repeats) and "(1^2)+(5)" for
// direct sums of parenthesized blocks.
SkewShape parse_shape(const std::string& text);

// All skew shapes with n cells, up to translation, with every row and every
// column in the bounding box nonempty.  Deterministic order.
std::vector<SkewShape> enumerate_skew_shapes(int n);

}  // namespace cycdes
