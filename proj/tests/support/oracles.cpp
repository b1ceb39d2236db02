#include "support/oracles.hpp"

#include <functional>
#include <vector>

namespace oracles {

namespace {

using cycdes::DegreeContext;
using cycdes::Partition;
using cycdes::SchurVector;
using cycdes::SkewShape;

// visit every semistandard filling (rows weakly increasing, columns strictly
// increasing) with entries in [max_entry]; grid holds absolute columns
void visit_fillings(const SkewShape& shape, int max_entry,
                    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.rows(); ++r) {
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) cells.emplace_back(r, c);
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()),
                                       std::vector<int>(static_cast<std::size_t>(shape.width()), 0));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            visit(grid);
            return;
        }
        auto [r, c] = cells[i];
        int lo = 1;
        if (c > shape.row_begin(r)) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c >= shape.row_begin(r - 1) && c < shape.row_end(r - 1)) {
            lo = std::max(lo, grid[r - 1][c] + 1);
        }
        for (int v = lo; v <= max_entry; ++v) {
            grid[r][c] = v;
            rec(i + 1);
        }
        grid[r][c] = 0;
    };
    rec(0);
}

}  // namespace

SchurVector lattice_word_schur(const DegreeContext& ctx, const SkewShape& shape) {
    const int n = shape.size();
    SchurVector out = SchurVector::zero(ctx);
    visit_fillings(shape, n, [&](const std::vector<std::vector<int>>& grid) {
        // reverse reading word: rows top to bottom, each row right to left
        std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
        for (int r = 0; r < shape.rows(); ++r) {
            for (int c = shape.row_end(r) - 1; c >= shape.row_begin(r); --c) {
                int w = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                ++count[static_cast<std::size_t>(w)];
                if (w > 1 && count[static_cast<std::size_t>(w)] >
                                 count[static_cast<std::size_t>(w) - 1]) {
                    return;  // not a ballot sequence
                }
            }
        }
        std::vector<int> parts;
        for (int v = 1; v <= n && count[static_cast<std::size_t>(v)] > 0; ++v) {
            parts.push_back(count[static_cast<std::size_t>(v)]);
        }
        int idx = ctx.index_of(Partition(parts));
        out += SchurVector::unit(ctx, ctx.partition(idx));
    });
    return out;
}

std::int64_t brute_count_ssyt(const SkewShape& shape, int max_entry) {
    std::int64_t total = 0;
    visit_fillings(shape, max_entry, [&](const std::vector<std::vector<int>>&) { ++total; });
    return total;
}

}  // namespace oracles
