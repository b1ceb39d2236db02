#include "cycdes/schur.hpp"

#include <algorithm>
#include <functional>

#include "cycdes/checked.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// every nu >= mu with nu/mu a horizontal strip of exactly k cells
void add_strips(const std::vector<int>& mu, int k,
                const std::function<void(const std::vector<int>&)>& emit) {
    const std::size_t rows = mu.size() + 1;
    std::vector<int> nu(rows, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
        if (r == rows) {
            if (left == 0) {
                std::vector<int> clean;
                for (int v : nu)
                    if (v > 0) clean.push_back(v);
                emit(clean);
            }
            return;
        }
        int base = r < mu.size() ? mu[r] : 0;
        int cap = base + left;
        if (r > 0) cap = std::min(cap, mu[r - 1]);  // added cells interleave below old rows
        for (int v = base; v <= cap; ++v) {
            nu[r] = v;
            rec(r + 1, left - (v - base));
        }
        nu[r] = base;
    };
    rec(0, k);
}

}  // namespace

DegreeContext::DegreeContext(int degree) : degree_(degree) {
    if (degree < 1) throw DomainError("degree must be positive");
    std::vector<int> cur;
    gen_partitions(degree, degree, cur, partitions_);
    std::sort(partitions_.begin(), partitions_.end());
    hook_flag_.resize(partitions_.size(), 0);
    hook_index_.assign(static_cast<std::size_t>(degree), -1);
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        index_.emplace(partitions_[i].parts(), static_cast<int>(i));
        if (partitions_[i].is_hook()) {
            hook_flag_[i] = 1;
            int k = partitions_[i].rows() - 1;
            hook_index_[static_cast<std::size_t>(k)] = static_cast<int>(i);
        }
    }
    // Schur expansion of h_alpha for every part multiset of n, by iterated
    // horizontal-strip additions starting from the empty partition
    std::vector<Partition> all_multisets = partitions_;  // multisets of parts == partitions
    for (const Partition& alpha : all_multisets) {
        std::map<std::vector<int>, std::int64_t> acc;
        acc[{}] = 1;
        for (int part : alpha.parts()) {
            std::map<std::vector<int>, std::int64_t> next;
            for (const auto& [mu, coef] : acc)
                add_strips(mu, part, [&](const std::vector<int>& nu) {
                    next[nu] = checked_add(next.count(nu) ? next[nu] : 0, coef);
                });
            acc = std::move(next);
        }
        std::vector<std::int64_t> vec(partitions_.size(), 0);
        for (const auto& [nu, coef] : acc) vec[static_cast<std::size_t>(index_.at(nu))] = coef;
        h_cache_.emplace(alpha.parts(), std::move(vec));
    }
}

int DegreeContext::index_of(const Partition& p) const {
    auto it = index_.find(p.parts());
    if (it == index_.end()) throw DomainError("partition is not of this degree");
    return it->second;
}

int DegreeContext::hook_index(int k) const {
    if (k < 0 || k >= degree_) throw DomainError("hook leg length out of range");
    return hook_index_[static_cast<std::size_t>(k)];
}

const std::vector<std::int64_t>& DegreeContext::h_coeffs(const std::vector<int>& parts) const {
    std::vector<int> key = parts;
    std::sort(key.begin(), key.end(), std::greater<int>());
    auto it = h_cache_.find(key);
    if (it == h_cache_.end()) throw DomainError("h product is not of this degree");
    return it->second;
}

SchurVector::SchurVector(int degree, std::vector<std::int64_t> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {}

SchurVector SchurVector::zero(const DegreeContext& ctx) {
    return SchurVector(ctx.degree(), std::vector<std::int64_t>(static_cast<std::size_t>(ctx.count()), 0));
}

SchurVector SchurVector::unit(const DegreeContext& ctx, const Partition& p) {
    SchurVector v = zero(ctx);
    v.c_[static_cast<std::size_t>(ctx.index_of(p))] = 1;
    return v;
}

std::int64_t SchurVector::coeff(const DegreeContext& ctx, const Partition& p) const {
    return c_[static_cast<std::size_t>(ctx.index_of(p))];
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
    if (degree_ != o.degree_) throw DomainError("degree mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& o) {
    if (degree_ != o.degree_) throw DomainError("degree mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
}

SchurVector& SchurVector::operator*=(std::int64_t k) {
    for (auto& v : c_) v = checked_mul(v, k);
    return *this;
}

SchurVector h_to_schur(const DegreeContext& ctx, const Composition& alpha) {
    if (alpha.size() != ctx.degree()) throw DomainError("composition size must match degree");
    return SchurVector(ctx.degree(), ctx.h_coeffs(alpha.parts()));
}

SchurVector h_to_schur(const DegreeContext& ctx, const std::vector<int>& parts) {
    return h_to_schur(ctx, Composition(parts));
}

SchurVector skew_schur(const DegreeContext& ctx, const SkewShape& shape) {
    if (shape.size() != ctx.degree()) throw DomainError("shape size must match degree");
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    const int l = outer.rows();
    // determinant of (h_{outer_i - inner_j + j - i}) over permutations, pruning
    // zero entries (negative subscripts)
    SchurVector acc = SchurVector::zero(ctx);
    std::vector<int> perm;           // perm[i] = column chosen for row i
    std::vector<char> used(static_cast<std::size_t>(l), 0);
    std::vector<int> mono;           // positive h-subscripts collected so far
    auto rec = [&](auto&& self, int i, int sign) -> void {
        if (i == l) {
            SchurVector term(ctx.degree(), ctx.h_coeffs(mono));
            if (sign > 0)
                acc += term;
            else
                acc -= term;
            return;
        }
        for (int j = 0; j < l; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            int sub = outer.part(i) - inner.part(j) + j - i;
            if (sub < 0) continue;
            int inversions = 0;
            for (int k = 0; k < j; ++k)
                if (!used[static_cast<std::size_t>(k)]) ++inversions;
            // parity bookkeeping: count remaining columns smaller than j
            used[static_cast<std::size_t>(j)] = 1;
            if (sub > 0) mono.push_back(sub);
            self(self, i + 1, inversions % 2 == 0 ? sign : -sign);
            if (sub > 0) mono.pop_back();
            used[static_cast<std::size_t>(j)] = 0;
        }
    };
    rec(rec, 0, 1);
    for (std::int64_t v : acc.coeffs())
        if (v < 0) throw DomainError("skew determinant produced a negative coefficient");
    return acc;
}

SchurVector ribbon_schur(const DegreeContext& ctx, const Subset& j_set) {
    const int n = ctx.degree();
    if (j_set.n() != n) throw DomainError("subset ambient size mismatch");
    if (j_set.contains(n)) throw DomainError("ribbon subsets live in [n-1]");
    SchurVector acc = SchurVector::zero(ctx);
    const std::uint32_t jm = j_set.mask();
    std::uint32_t sub = jm;
    while (true) {  // all submasks of jm, including empty
        Subset i_set(n, sub);
        SchurVector term(ctx.degree(), ctx.h_coeffs(comp_of_subset(n, i_set).parts()));
        if ((j_set.size() - i_set.size()) % 2 == 0)
            acc += term;
        else
            acc -= term;
        if (sub == 0) break;
        sub = (sub - 1) & jm;
    }
    return acc;
}

SchurVector affine_ribbon_schur(const DegreeContext& ctx, const Subset& j_set) {
    const int n = ctx.degree();
    if (j_set.n() != n) throw DomainError("subset ambient size mismatch");
    SchurVector acc = SchurVector::zero(ctx);
    if (j_set.is_empty()) return acc;  // defined as zero
    const std::uint32_t jm = j_set.mask();
    std::uint32_t sub = jm;
    while (sub != 0) {  // all nonempty submasks
        Subset i_set(n, sub);
        SchurVector term(ctx.degree(), ctx.h_coeffs(ccomp_of_subset(n, i_set).parts()));
        if ((j_set.size() - i_set.size()) % 2 == 0)
            acc += term;
        else
            acc -= term;
        sub = (sub - 1) & jm;
    }
    return acc;
}

SchurVector power_sum_hooks(const DegreeContext& ctx) {
    SchurVector acc = SchurVector::zero(ctx);
    for (int k = 0; k < ctx.degree(); ++k) {
        SchurVector hook = SchurVector::unit(ctx, Partition::hook(ctx.degree(), k));
        if (k % 2 == 0)
            acc += hook;
        else
            acc -= hook;
    }
    return acc;
}

std::int64_t hall_inner(const SchurVector& a, const SchurVector& b) {
    if (a.degree() != b.degree()) throw DomainError("inner product requires equal degrees");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        s = checked_add(s, checked_mul(a.coeffs()[i], b.coeffs()[i]));
    return s;
}

std::int64_t principal_spec(const DegreeContext& ctx, const SchurVector& v, int m) {
    if (v.degree() != ctx.degree()) throw DomainError("degree mismatch");
    if (m < 0) throw DomainError("number of variables must be nonnegative");
    std::int64_t s = 0;
    for (int i = 0; i < ctx.count(); ++i) {
        if (v.coeff(i) == 0) continue;
        std::int64_t cnt = count_ssyt(SkewShape::straight(ctx.partition(i)), m);
        s = checked_add(s, checked_mul(v.coeff(i), cnt));
    }
    return s;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

std::vector<std::int64_t> hook_mults(const SkewShape& shape) {
    const int n = shape.size();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    if (!shape.is_generalized_ribbon()) return out;  // hooks never appear otherwise
    const int m = shape.components();
    const int h = shape.height();
    for (int k = 0; k < n; ++k)
        if (k + 1 <= h && h <= k + m) out[static_cast<std::size_t>(k)] = binomial(m - 1, h - k - 1);
    return out;
}

bool sum_of_hooks_identity(const DegreeContext& ctx, int k) {
    const int n = ctx.degree();
    if (k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    SkewShape sum = direct_sum({SkewShape::straight(Partition(std::vector<int>(
                                    static_cast<std::size_t>(k), 1))),
                                SkewShape::straight(Partition({n - k}))});
    SchurVector lhs = skew_schur(ctx, sum);
    SchurVector rhs = SchurVector::unit(ctx, Partition::hook(n, k - 1)) +
                      SchurVector::unit(ctx, Partition::hook(n, k));
    return lhs == rhs;
}

}  // namespace cycdes
