#include "cycdes/exceptional.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "cycdes/checked.hpp"
#include "cycdes/errors.hpp"
#include "cycdes/schur.hpp"

namespace cycdes {

namespace {

void require_word(const std::vector<int>& word) {
    if (word.empty()) throw DomainError("word must be nonempty");
    for (int a : word) {
        if (a < 1) throw DomainError("word letters must be positive");
    }
}

void require_permutation(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw DomainError("permutation must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("not a permutation in one-line notation");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::uint32_t rotate_mask(std::uint32_t mask, int shift, int n) {
    shift %= n;
    if (shift == 0) return mask;
    const std::uint32_t all = (1u << n) - 1u;
    return ((mask << shift) | (mask >> (n - shift))) & all;
}

std::vector<std::int64_t> word_dist_impl(int m, int n, bool weak, bool parallel) {
    if (m < 1 || n < 1) throw DomainError("need m >= 1 and n >= 1");
    if (n > kMaxSubsetN) throw ResourceError("word length exceeds the subset table limit");
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total = checked_mul(total, static_cast<std::int64_t>(m));
        if (total > 200'000'000) throw ResourceError("too many words to enumerate");
    }
    std::vector<std::int64_t> dist(1u << n, 0);
    (void)parallel;
#pragma omp parallel if (parallel && m > 1)
    {
        std::vector<std::int64_t> loc(1u << n, 0);
        std::vector<int> w(static_cast<std::size_t>(n), 1);
#pragma omp for schedule(dynamic, 1)
        for (int first = 1; first <= m; ++first) {
            w.assign(static_cast<std::size_t>(n), 1);
            w[0] = first;
            while (true) {
                std::uint32_t mask = 0;
                for (int i = 0; i < n; ++i) {
                    int a = w[static_cast<std::size_t>(i)];
                    int b = w[static_cast<std::size_t>((i + 1) % n)];
                    if (weak ? a >= b : a > b) mask |= 1u << i;
                }
                ++loc[mask];
                int pos = n - 1;
                while (pos >= 1 && w[static_cast<std::size_t>(pos)] == m) {
                    w[static_cast<std::size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 1) break;
                ++w[static_cast<std::size_t>(pos)];
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < dist.size(); ++i) dist[i] += loc[i];
        }
    }
    return dist;
}

}  // namespace

Subset word_cdes_star(const std::vector<int>& word, bool weak) {
    require_word(word);
    const int n = static_cast<int>(word.size());
    if (n > kMaxSubsetN) throw ResourceError("word length exceeds the subset table limit");
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
        int a = word[static_cast<std::size_t>(i)];
        int b = word[static_cast<std::size_t>((i + 1) % n)];
        if (weak ? a >= b : a > b) mask |= 1u << i;
    }
    return Subset(n, mask);
}

std::vector<std::int64_t> word_cdes_distribution(int m, int n, bool weak) {
    return word_dist_impl(m, n, weak, true);
}

std::vector<std::int64_t> word_cdes_distribution_serial(int m, int n, bool weak) {
    return word_dist_impl(m, n, weak, false);
}

bool check_words_identity(int m, int n, std::int64_t limit) {
    if (n < 2) throw DomainError("need n >= 2");
    if (m < 1) throw DomainError("need m >= 1");
    std::vector<std::int64_t> lhs = word_cdes_distribution(m, n);

    std::vector<std::int64_t> rhs(1u << n, 0);
    rhs[0] = m;  // constant words
    DegreeContext ctx(n);
    for (int idx = 0; idx < ctx.count(); ++idx) {
        if (ctx.is_hook(idx)) continue;
        SkewShape shape(ctx.partition(idx), Partition());
        std::int64_t cnt = count_ssyt(shape, m);
        if (cnt == 0) continue;
        FiberTable ft = fiber_table_formula(shape, limit);
        for (std::uint32_t mask = 0; mask < rhs.size(); ++mask) {
            rhs[mask] = checked_add(rhs[mask], checked_mul(cnt, ft.at_mask(mask)));
        }
    }
    const int p = std::min(m, n);
    for (int k = 1; k <= p - 1; ++k) {
        std::int64_t coef = 0;
        for (int t = k + 1; t <= p; ++t) {
            coef = checked_add(coef, checked_mul(binomial(t - 2, k - 1),
                                                 checked_mul(binomial(m, t), binomial(n - 1, t - 1))));
        }
        if (coef == 0) continue;
        FiberTable ft = fiber_table_formula(column_row_sum(n, k), limit);
        for (std::uint32_t mask = 0; mask < rhs.size(); ++mask) {
            rhs[mask] = checked_add(rhs[mask], checked_mul(coef, ft.at_mask(mask)));
        }
    }
    return lhs == rhs;
}

int layered_count(const std::vector<int>& w) {
    require_permutation(w);
    const int n = static_cast<int>(w.size());
    int pos = 0;
    int prev_max = 0;
    int runs = 0;
    while (pos < n) {
        int q = w[static_cast<std::size_t>(pos)];
        if (q <= prev_max) return 0;
        for (int j = 0; j < q - prev_max; ++j) {
            if (pos + j >= n || w[static_cast<std::size_t>(pos + j)] != q - j) return 0;
        }
        pos += q - prev_max;
        prev_max = q;
        ++runs;
    }
    return runs;
}

bool is_even_layered(const std::vector<int>& w) {
    int k = layered_count(w);
    return k > 0 && k % 2 == 0;
}

bool is_even_colayered(const std::vector<int>& w) {
    std::vector<int> r(w.rbegin(), w.rend());
    return is_even_layered(r);
}

Subset perm_cdes_star(const std::vector<int>& w) {
    require_permutation(w);
    const int n = static_cast<int>(w.size());
    if (n % 2 != 0) throw DomainError("the Escher variant on permutations needs even length");
    if (n > kMaxSubsetN) throw ResourceError("permutation length exceeds the subset table limit");
    std::uint32_t des = 0;
    for (int i = 1; i < n; ++i) {
        if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) {
            des |= 1u << (i - 1);
        }
    }
    const std::uint32_t top = 1u << (n - 1);
    if (is_even_layered(w)) return Subset(n, des);
    if (is_even_colayered(w)) return Subset(n, des | top);
    if (w[static_cast<std::size_t>(n - 1)] > w[0]) des |= top;
    return Subset(n, des);
}

bool check_exceptional_sn(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("need even n >= 2");
    if (n > 10) throw ResourceError("symmetric group too large to enumerate");
    const std::uint32_t top = 1u << (n - 1);
    const std::uint32_t full = (1u << n) - 1u;

    std::vector<std::uint32_t> star_of;
    std::vector<std::int64_t> dist_star(1u << n, 0), dist_cdes(1u << n, 0);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::uint32_t des = 0;
        for (int i = 1; i < n; ++i) {
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) {
                des |= 1u << (i - 1);
            }
        }
        std::uint32_t rotation_cdes = des;
        if (w[static_cast<std::size_t>(n - 1)] > w[0]) rotation_cdes |= top;
        std::uint32_t star = perm_cdes_star(w).mask();
        if ((star & ~top) != des) return false;  // extension axiom
        star_of.push_back(star);
        ++dist_star[star];
        ++dist_cdes[rotation_cdes];
    } while (std::next_permutation(w.begin(), w.end()));

    // fiber shift / product identity: star minus plain is the expansion of
    // prod_i (1 - t_i)
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::int64_t sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
        if (dist_star[mask] != dist_cdes[mask] + sign) return false;
    }
    if (dist_star[0] != 1 || dist_star[full] != 1) return false;

    // stitch a companion bijection p: orbits of subsets under rotation must
    // carry equal fiber sizes, elements paired in enumeration order
    std::vector<std::vector<std::size_t>> groups(1u << n);
    for (std::size_t e = 0; e < star_of.size(); ++e) {
        groups[star_of[e]].push_back(e);
    }
    std::vector<std::size_t> p(star_of.size(), SIZE_MAX);
    std::vector<char> seen(1u << n, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (seen[mask]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint32_t cur = mask;
        do {
            orbit.push_back(cur);
            seen[cur] = 1;
            cur = rotate_mask(cur, 1, n);
        } while (cur != mask);
        for (std::size_t j = 0; j < orbit.size(); ++j) {
            std::uint32_t src = orbit[j];
            std::uint32_t dst = orbit[(j + 1) % orbit.size()];
            if (groups[src].size() != groups[dst].size()) return false;  // no equivariant map
            for (std::size_t i = 0; i < groups[src].size(); ++i) {
                p[groups[src][i]] = groups[dst][i];
            }
        }
    }
    std::vector<char> hit(star_of.size(), 0);
    for (std::size_t e = 0; e < star_of.size(); ++e) {
        if (p[e] == SIZE_MAX || hit[p[e]]) return false;
        hit[p[e]] = 1;
        if (star_of[p[e]] != rotate_mask(star_of[e], 1, n)) return false;  // equivariance
    }

    // fiber sizes as inner products against the strip-minus-row vector
    DegreeContext ctx(n);
    SchurVector v = skew_schur(ctx, antidiagonal_strip(n)) -
                    SchurVector::unit(ctx, Partition({n}));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::int64_t expected = hall_inner(v, affine_ribbon_schur(ctx, Subset(n, mask)));
        if (dist_star[mask] != expected) return false;
    }
    return true;
}

FiberTable exceptional_fiber_table(const SkewShape& shape, std::int64_t e0, std::int64_t limit) {
    const int n = shape.size();
    if (e0 < 0) throw DomainError("empty-fiber size must be nonnegative");
    std::vector<std::int64_t> desf = des_fiber_counts(shape, limit);
    FiberTable table = fiber_table_from_des(n, desf);
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::int64_t sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
        std::int64_t v = checked_add(table.at_mask(mask), sign * e0);
        if (v < 0) {
            throw DomainError("empty-fiber size " + std::to_string(e0) +
                              " gives a negative fiber for shape " + shape.str());
        }
        table.set_mask(mask, v);
    }
    if (table.at_mask(0) + table.at_mask(full) < 1) {
        throw DomainError("empty-fiber size " + std::to_string(e0) +
                          " gives no tableau with an extreme cyclic descent set");
    }
    // defense in depth: rotation invariance and descent marginals
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (table.at_mask(mask) != table.at_mask(rotate_mask(mask, 1, n))) {
            throw DomainError("fiber table is not rotation-invariant");
        }
    }
    const std::uint32_t top = 1u << (n - 1);
    for (std::uint32_t d = 0; d < top; ++d) {
        if (checked_add(table.at_mask(d), table.at_mask(d | top)) != desf[d]) {
            throw DomainError("fiber table does not refine the descent fibers");
        }
    }
    return table;
}

std::vector<std::int64_t> exceptional_feasibility(const SkewShape& shape, std::int64_t limit) {
    const int n = shape.size();
    std::vector<std::int64_t> desf = des_fiber_counts(shape, limit);
    FiberTable base = fiber_table_from_des(n, desf);
    const std::uint32_t full = (1u << n) - 1u;

    std::int64_t lo = 0;
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 == 1) {
            hi = std::min(hi, base.at_mask(mask));  // odd fibers lose e0
        } else {
            lo = std::max(lo, -base.at_mask(mask));  // even fibers gain e0
        }
    }
    // at least one tableau must land on the empty set or on [n]
    if (n % 2 == 0) {
        std::int64_t need = 1 - base.at_mask(full);  // e0 + (base + e0) >= 1
        if (need > 0) lo = std::max(lo, (need + 1) / 2);
    } else if (base.at_mask(full) < 1) {
        return {};
    }
    if (lo > hi) return {};
    if (hi - lo > 4096) throw ResourceError("feasible range of empty-fiber sizes too large");

    std::vector<std::int64_t> out;
    for (std::int64_t e0 = lo; e0 <= hi; ++e0) {
        try {
            exceptional_fiber_table(shape, e0, limit);
            out.push_back(e0);
        } catch (const DomainError&) {
        }
    }
    return out;
}

bool exceptional_family(const SkewShape& shape) {
    const int n = shape.size();
    if (shape.height() == 1) return true;
    if (shape.width() == 1) return true;
    return n % 2 == 0 && shape.components() == n;
}

}  // namespace cycdes
