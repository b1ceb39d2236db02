#include "cycdes/tableaux.hpp"

#include <algorithm>
#include <map>

#include "cycdes/checked.hpp"

namespace cycdes {

namespace {

void validate_rows(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != shape.rows())
        throw DomainError("tableau row count does not match shape");
    for (int r = 0; r < shape.rows(); ++r)
        if (static_cast<int>(rows[r].size()) != shape.row_size(r))
            throw DomainError("tableau row length does not match shape");
}

}  // namespace

StandardTableau::StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate_rows(shape_, rows_);
    const int n = shape_.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > n || seen[v]) throw DomainError("tableau entries must be 1..n, each once");
            seen[v] = 1;
        }
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = shape_.row_begin(r) + 1; c < shape_.row_end(r); ++c)
            if (entry(r, c - 1) >= entry(r, c)) throw DomainError("tableau rows must increase");
        for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c)
            if (shape_.cell_at(r + 1, c) && entry(r, c) >= entry(r + 1, c))
                throw DomainError("tableau columns must increase");
    }
}

int StandardTableau::entry(int r, int c) const {
    if (!shape_.cell_at(r, c)) throw DomainError("no cell at requested position");
    return rows_[r][c - shape_.row_begin(r)];
}

int StandardTableau::row_of(int value) const {
    for (int r = 0; r < shape_.rows(); ++r)
        for (int v : rows_[r])
            if (v == value) return r;
    throw DomainError("value not present in tableau");
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(size()));
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

Subset des_set(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < t.shape().rows(); ++r)
        for (int v : t.rows()[r]) row[v] = r;
    Subset s = Subset::empty(n);
    for (int i = 1; i < n; ++i)
        if (row[i + 1] > row[i]) s = s.with(i);
    return s;
}

namespace {

struct SytEnumerator {
    const SkewShape& shape;
    std::int64_t limit;
    std::vector<std::vector<int>> rows;
    std::vector<int> fill_count;  // cells placed so far in each row
    std::vector<StandardTableau>* out;
    std::int64_t count = 0;

    void place(int value, int n) {
        if (value > n) {
            ++count;
            if (out) {
                if (count > limit) throw ResourceError("standard tableau enumeration limit exceeded");
                out->emplace_back(shape, rows);
            }
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            if (fill_count[r] == shape.row_size(r)) continue;
            int c = shape.row_begin(r) + fill_count[r];
            // the cell above (if part of the shape) must already be filled
            if (r > 0 && shape.cell_at(r - 1, c) &&
                fill_count[r - 1] <= c - shape.row_begin(r - 1))
                continue;
            rows[r].push_back(value);
            ++fill_count[r];
            place(value + 1, n);
            --fill_count[r];
            rows[r].pop_back();
        }
    }
};

}  // namespace

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape, std::int64_t limit) {
    std::vector<StandardTableau> out;
    SytEnumerator e{shape, limit, {}, {}, &out};
    e.rows.resize(static_cast<std::size_t>(shape.rows()));
    e.fill_count.assign(static_cast<std::size_t>(shape.rows()), 0);
    e.place(1, shape.size());
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::int64_t count_syt(const SkewShape& shape, std::int64_t limit) {
    SytEnumerator e{shape, limit, {}, {}, nullptr};
    e.rows.resize(static_cast<std::size_t>(shape.rows()));
    e.fill_count.assign(static_cast<std::size_t>(shape.rows()), 0);
    e.place(1, shape.size());
    return e.count;
}

namespace {

// direct sum of single rows: no two cells vertically adjacent
bool is_horizontal_strip_shape(const SkewShape& sh) {
    for (auto [r, c] : sh.cells())
        if (sh.cell_at(r + 1, c)) return false;
    return true;
}

void require_strip(const SkewShape& sh) {
    if (!is_horizontal_strip_shape(sh) || sh.components() < 2)
        throw DomainError("operation needs a horizontal strip with at least two rows");
}

}  // namespace

Subset strip_cdes(const StandardTableau& t) {
    const SkewShape& sh = t.shape();
    require_strip(sh);
    const int n = t.size();
    std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < sh.rows(); ++r)
        for (int v : t.rows()[r]) row[v] = r;
    Subset s = Subset::empty(n);
    for (int i = 1; i <= n; ++i) {
        int next = i == n ? 1 : i + 1;
        if (row[next] > row[i]) s = s.with(i);
    }
    return s;
}

StandardTableau strip_p(const StandardTableau& t) {
    require_strip(t.shape());
    const int n = t.size();
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows) {
        for (int& v : row) v = v % n + 1;
        std::sort(row.begin(), row.end());
    }
    return StandardTableau(t.shape(), std::move(rows));
}

StandardTableau permutation_to_strip_tableau(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 2) throw DomainError("permutation embedding needs n >= 2");
    std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (w[i] < 1 || w[i] > n || inv[w[i]]) throw DomainError("not a permutation of 1..n");
        inv[w[i]] = i + 1;
    }
    std::vector<SkewShape> cells(static_cast<std::size_t>(n), SkewShape::straight(Partition({1})));
    SkewShape strip = direct_sum(cells);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) rows[n - k] = {inv[k]};  // southwest cell is the bottom row
    return StandardTableau(std::move(strip), std::move(rows));
}

StandardTableau promotion(const StandardTableau& t) {
    const SkewShape& sh = t.shape();
    if (sh.inner().rows() != 0) throw DomainError("promotion is defined on straight rectangles");
    const Partition& outer = sh.outer();
    for (int i = 1; i < outer.rows(); ++i)
        if (outer.parts()[i] != outer.parts()[0])
            throw DomainError("promotion is defined on straight rectangles");
    if (outer.rows() < 2 || outer.parts()[0] < 2)
        throw DomainError("promotion requires a rectangle with both sides >= 2");
    const int n = sh.size();
    std::vector<std::vector<int>> rows = t.rows();
    int hr = -1, hc = -1;
    for (int r = 0; r < sh.rows(); ++r)
        for (int c = 0; c < sh.row_size(r); ++c)
            if (rows[r][c] == n) {
                hr = r;
                hc = c;
            }
    // slide the hole to (0,0), always moving the larger neighbor into it
    while (hr > 0 || hc > 0) {
        int up = hr > 0 ? rows[hr - 1][hc] : -1;
        int left = hc > 0 ? rows[hr][hc - 1] : -1;
        if (up >= left) {
            rows[hr][hc] = up;
            --hr;
        } else {
            rows[hr][hc] = left;
            --hc;
        }
    }
    for (auto& row : rows)
        for (int& v : row) ++v;
    rows[0][0] = 1;
    return StandardTableau(sh, std::move(rows));
}

SemistandardTableau::SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate_rows(shape_, rows_);
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
            if (entry(r, c) < 1) throw DomainError("semistandard entries must be positive");
            if (c > shape_.row_begin(r) && entry(r, c - 1) > entry(r, c))
                throw DomainError("semistandard rows must weakly increase");
            if (shape_.cell_at(r + 1, c) && entry(r, c) >= entry(r + 1, c))
                throw DomainError("semistandard columns must strictly increase");
        }
    }
}

int SemistandardTableau::entry(int r, int c) const {
    if (!shape_.cell_at(r, c)) throw DomainError("no cell at requested position");
    return rows_[r][c - shape_.row_begin(r)];
}

std::vector<int> SemistandardTableau::content(int max_entry) const {
    std::vector<int> cnt(static_cast<std::size_t>(max_entry), 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > max_entry) throw DomainError("entry exceeds requested content length");
            ++cnt[v - 1];
        }
    return cnt;
}

namespace {

// Lattice of partitions between inner and outer, with horizontal-strip moves.
struct ChainDp {
    std::vector<std::vector<int>> states;  // padded to outer.rows() entries
    std::map<std::vector<int>, int> index;
    const SkewShape& shape;

    explicit ChainDp(const SkewShape& sh) : shape(sh) {
        std::vector<int> cur(static_cast<std::size_t>(sh.rows()));
        gen(0, cur);
    }

    void gen(int r, std::vector<int>& cur) {
        if (r == shape.rows()) {
            index.emplace(cur, static_cast<int>(states.size()));
            states.push_back(cur);
            return;
        }
        int lo = shape.row_begin(r);
        int hi = shape.row_end(r);
        if (r > 0) hi = std::min(hi, cur[r - 1]);  // keep the state a partition
        for (int v = lo; v <= hi; ++v) {
            cur[r] = v;
            gen(r + 1, cur);
        }
    }

    // successors of state `from` by adding a horizontal strip; calls f(state_index, cells_added)
    template <typename F>
    void for_strips(const std::vector<int>& from, F&& f) {
        std::vector<int> cur = from;
        rec_strip(0, 0, from, cur, f);
    }

    template <typename F>
    void rec_strip(int r, int added, const std::vector<int>& from, std::vector<int>& cur, F&& f) {
        if (r == shape.rows()) {
            f(index.at(cur), added);
            return;
        }
        int lo = from[r];
        int hi = shape.row_end(r);
        if (r > 0) hi = std::min(hi, from[r - 1]);  // strip condition: new row r <= old row r-1
        for (int v = lo; v <= hi; ++v) {
            cur[r] = v;
            rec_strip(r + 1, added + (v - from[r]), from, cur, f);
        }
        cur[r] = from[r];
    }
};

}  // namespace

std::int64_t count_ssyt(const SkewShape& shape, int max_entry) {
    if (max_entry < 0) throw DomainError("max entry must be nonnegative");
    ChainDp dp(shape);
    std::vector<int> start(static_cast<std::size_t>(shape.rows()));
    std::vector<int> goal(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r) {
        start[r] = shape.row_begin(r);
        goal[r] = shape.row_end(r);
    }
    std::vector<std::int64_t> ways(dp.states.size(), 0);
    ways[static_cast<std::size_t>(dp.index.at(start))] = 1;
    for (int step = 0; step < max_entry; ++step) {
        std::vector<std::int64_t> next(dp.states.size(), 0);
        for (std::size_t s = 0; s < dp.states.size(); ++s) {
            if (ways[s] == 0) continue;
            dp.for_strips(dp.states[s], [&](int to, int) {
                next[static_cast<std::size_t>(to)] =
                    checked_add(next[static_cast<std::size_t>(to)], ways[s]);
            });
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(dp.index.at(goal))];
}

std::int64_t count_ssyt(const SkewShape& shape, int max_entry, const std::vector<int>& content) {
    if (max_entry < 0) throw DomainError("max entry must be nonnegative");
    if (static_cast<int>(content.size()) != max_entry)
        throw DomainError("content length must equal max entry");
    ChainDp dp(shape);
    std::vector<int> start(static_cast<std::size_t>(shape.rows()));
    std::vector<int> goal(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r) {
        start[r] = shape.row_begin(r);
        goal[r] = shape.row_end(r);
    }
    std::vector<std::int64_t> ways(dp.states.size(), 0);
    ways[static_cast<std::size_t>(dp.index.at(start))] = 1;
    for (int step = 0; step < max_entry; ++step) {
        if (content[step] < 0) throw DomainError("content entries must be nonnegative");
        std::vector<std::int64_t> next(dp.states.size(), 0);
        for (std::size_t s = 0; s < dp.states.size(); ++s) {
            if (ways[s] == 0) continue;
            dp.for_strips(dp.states[s], [&](int to, int added) {
                if (added != content[step]) return;
                next[static_cast<std::size_t>(to)] =
                    checked_add(next[static_cast<std::size_t>(to)], ways[s]);
            });
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(dp.index.at(goal))];
}

std::vector<SemistandardTableau> enumerate_cylindric_tableaux(int n, const Subset& j_set,
                                                              int max_entry) {
    if (j_set.n() != n) throw DomainError("subset ambient size mismatch");
    if (j_set.is_empty()) throw DomainError("cylindric enumeration requires a nonempty subset");
    if (max_entry < 1) throw DomainError("max entry must be positive");
    CyclicComposition cc = ccomp_of_subset(n, j_set);
    SkewShape ribbon = ribbon_of_composition(Composition(cc.parts()));
    // extreme southwest cell: bottom row, leftmost; extreme northeast: top row, rightmost
    const int bot = ribbon.rows() - 1;
    const int sw_col = ribbon.row_begin(bot);
    const int ne_col = ribbon.row_end(0) - 1;
    std::vector<SemistandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(ribbon.rows()));
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == ribbon.rows()) {
            SemistandardTableau t(ribbon, rows);
            if (t.entry(bot, sw_col) < t.entry(0, ne_col)) out.push_back(t);
            return;
        }
        if (c == ribbon.row_end(r)) {
            self(self, r + 1, r + 1 < ribbon.rows() ? ribbon.row_begin(r + 1) : 0);
            return;
        }
        int lo = 1;
        if (c > ribbon.row_begin(r)) lo = std::max(lo, rows[r][c - 1 - ribbon.row_begin(r)]);
        if (r > 0 && ribbon.cell_at(r - 1, c))
            lo = std::max(lo, rows[r - 1][c - ribbon.row_begin(r - 1)] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            rows[r].push_back(v);
            self(self, r, c + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 0, ribbon.row_begin(0));
    return out;
}

}  // namespace cycdes
