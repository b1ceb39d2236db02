#include "cycdes/skew.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cycdes {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw DomainError("inner shape must fit inside outer shape");
    size_ = outer_.size() - inner_.size();
    if (size_ < 1) throw DomainError("skew shape must have at least one cell");
}

bool SkewShape::cell_at(int r, int c) const {
    return r >= 0 && r < rows() && c >= row_begin(r) && c < row_end(r);
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < rows(); ++r)
        for (int c = row_begin(r); c < row_end(r); ++c) out.emplace_back(r, c);
    return out;
}

int SkewShape::components() const {
    // Rows are intervals, so adjacency reduces to interval overlap between
    // consecutive nonempty rows; empty rows always separate.
    int comps = 0;
    bool open = false;
    for (int r = 0; r < rows(); ++r) {
        if (row_size(r) == 0) {
            open = false;
            continue;
        }
        bool joined = open && r > 0 && row_begin(r) < row_end(r - 1) && row_end(r) > row_begin(r - 1);
        if (!joined) ++comps;
        open = true;
    }
    return comps;
}

int SkewShape::height() const {
    int h = 0;
    for (int r = 0; r < rows(); ++r)
        if (row_size(r) > 0) ++h;
    return h;
}

int SkewShape::width() const {
    std::set<int> cols;
    for (auto [r, c] : cells()) cols.insert(c);
    return static_cast<int>(cols.size());
}

bool SkewShape::contains_square() const {
    for (int r = 0; r + 1 < rows(); ++r)
        for (int c = row_begin(r); c + 1 < row_end(r); ++c)
            if (cell_at(r + 1, c) && cell_at(r + 1, c + 1)) return true;
    return false;
}

bool SkewShape::is_connected_ribbon() const { return is_connected() && !contains_square(); }

bool SkewShape::is_generalized_ribbon() const { return !contains_square(); }

ShapeInfo SkewShape::classify() const {
    ShapeInfo info{ShapeKind::Other, components(), height()};
    if (!contains_square())
        info.kind = info.components == 1 ? ShapeKind::ConnectedRibbon : ShapeKind::GeneralizedRibbon;
    return info;
}

bool SkewShape::operator==(const SkewShape& o) const {
    auto normalized = [](const SkewShape& s) {
        auto cs = s.cells();
        int rmin = cs[0].first, cmin = cs[0].second;
        for (auto [r, c] : cs) {
            rmin = std::min(rmin, r);
            cmin = std::min(cmin, c);
        }
        for (auto& [r, c] : cs) {
            r -= rmin;
            c -= cmin;
        }
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    return normalized(*this) == normalized(o);
}

std::string SkewShape::str() const {
    std::string s = outer_.str();
    if (inner_.rows() > 0) s += "/" + inner_.str();
    return s;
}

SkewShape direct_sum(const std::vector<SkewShape>& blocks) {
    if (blocks.empty()) throw DomainError("direct sum requires at least one block");
    // blocks[0] is the southwestern-most; each later block sits strictly above and
    // to the right of the previous one, with no empty row or column in between
    std::vector<int> shifts(blocks.size(), 0);
    for (std::size_t j = 1; j < blocks.size(); ++j) shifts[j] = shifts[j - 1] + blocks[j - 1].width();
    std::vector<int> outer, inner;
    for (std::size_t i = blocks.size(); i-- > 0;) {  // top rows come from the last block
        const SkewShape& b = blocks[i];
        int cmin = 0;
        bool found = false;
        for (int r = 0; r < b.rows(); ++r)
            if (b.row_size(r) > 0) {
                cmin = found ? std::min(cmin, b.row_begin(r)) : b.row_begin(r);
                found = true;
            }
        for (int r = 0; r < b.rows(); ++r) {
            if (b.row_size(r) == 0) continue;
            inner.push_back(shifts[i] + b.row_begin(r) - cmin);
            outer.push_back(shifts[i] + b.row_end(r) - cmin);
        }
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape ribbon_of_composition(const Composition& alpha) {
    const auto& parts = alpha.parts();
    if (parts.empty()) throw DomainError("ribbon requires a nonempty composition");
    int t = static_cast<int>(parts.size());
    // row i (1-based from the bottom) starts at column c_i; adjacent rows overlap
    // in exactly one column
    std::vector<int> start(t);
    start[0] = 0;
    for (int i = 1; i < t; ++i) start[i] = start[i - 1] + parts[i - 1] - 1;
    std::vector<int> outer, inner;
    for (int r = 0; r < t; ++r) {  // top-down: r = t-1-i
        int i = t - 1 - r;
        outer.push_back(start[i] + parts[i]);
        inner.push_back(start[i]);
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape ribbon_of_composition(const std::vector<int>& parts) {
    return ribbon_of_composition(Composition(parts));
}

SkewShape strip_of_composition(const Composition& alpha) {
    if (alpha.length() == 0) throw DomainError("composition must be nonempty");
    std::vector<SkewShape> blocks;
    blocks.reserve(static_cast<std::size_t>(alpha.length()));
    for (int part : alpha.parts()) {
        blocks.emplace_back(Partition({part}), Partition());
    }
    return direct_sum(blocks);
}

SkewShape antidiagonal_strip(int n) {
    if (n < 1) throw DomainError("need n >= 1");
    std::vector<SkewShape> blocks(static_cast<std::size_t>(n),
                                  SkewShape(Partition({1}), Partition()));
    return direct_sum(blocks);
}

SkewShape column_row_sum(int n, int k) {
    if (k < 1 || k >= n) throw DomainError("need 1 <= k < n");
    std::vector<SkewShape> blocks;
    blocks.emplace_back(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), Partition());
    blocks.emplace_back(Partition({n - k}), Partition());
    return direct_sum(blocks);
}

namespace {

// parts list "4,3,2" or "1^3,2" -> expanded vector
std::vector<int> parse_parts(const std::string& s, std::size_t& pos, const std::string& full) {
    std::vector<int> out;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw DomainError("expected a number in shape string '" + full + "'");
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        int p = read_int();
        int rep = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            rep = read_int();
        }
        for (int i = 0; i < rep; ++i) out.push_back(p);
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    return out;
}

SkewShape parse_block(const std::string& s, const std::string& full) {
    std::size_t pos = 0;
    std::vector<int> outer = parse_parts(s, pos, full);
    std::vector<int> inner;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        inner = parse_parts(s, pos, full);
    }
    if (pos != s.size()) throw DomainError("unexpected character in shape string '" + full + "'");
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty shape string");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '/' || c == '^' ||
              c == '(' || c == ')' || c == '+'))
            throw DomainError(std::string("unsupported character '") + c + "' in shape string '" +
                              text + "'");
    if (s.find('+') == std::string::npos && s.find('(') == std::string::npos)
        return parse_block(s, text);
    // direct-sum grammar: (block)+(block)+...
    std::vector<SkewShape> blocks;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw DomainError("expected '(' in shape string '" + text + "'");
        std::size_t close = s.find(')', pos);
        if (close == std::string::npos) throw DomainError("unbalanced '(' in shape string '" + text + "'");
        blocks.push_back(parse_block(s.substr(pos + 1, close - pos - 1), text));
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != '+') throw DomainError("expected '+' between blocks in '" + text + "'");
            ++pos;
            if (pos == s.size()) throw DomainError("trailing '+' in shape string '" + text + "'");
        }
    }
    return direct_sum(blocks);
}

std::vector<SkewShape> enumerate_skew_shapes(int n) {
    if (n < 1) throw DomainError("shape size must be positive");
    std::vector<SkewShape> out;
    // build row spans bottom-up: (begin, end) with begin weakly increasing upward,
    // end weakly increasing upward, every row nonempty, no empty column between
    // consecutive rows (upper begin <= lower end)
    std::vector<std::pair<int, int>> spans;  // bottom-up
    auto emit = [&]() {
        std::vector<int> outer, inner;
        for (auto it = spans.rbegin(); it != spans.rend(); ++it) {
            inner.push_back(it->first);
            outer.push_back(it->second);
        }
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        out.emplace_back(Partition(std::move(outer)), Partition(std::move(inner)));
    };
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        auto [pbeg, pend] = spans.back();
        for (int beg = pbeg; beg <= pend; ++beg)  // begin within the row below: no empty column
            for (int len = 1; len <= remaining; ++len) {
                if (beg + len < pend) continue;  // row ends must weakly increase upward
                spans.emplace_back(beg, beg + len);
                self(self, remaining - len);
                spans.pop_back();
            }
    };
    for (int len = 1; len <= n; ++len) {
        spans.emplace_back(0, len);
        rec(rec, n - len);
        spans.pop_back();
    }
    return out;
}

}  // namespace cycdes
