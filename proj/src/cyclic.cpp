#include "cycdes/cyclic.hpp"

#include <algorithm>
#include <map>

#include "cycdes/checked.hpp"

namespace cycdes {

FiberTable::FiberTable(int n) : n_(n) {
    if (n < 1) throw DomainError("fiber table size must be positive");
    if (n > kMaxSubsetN) throw ResourceError("fiber table size exceeds the dense-table limit of 16");
    m_.assign(std::size_t{1} << n, 0);
}

std::int64_t FiberTable::at(const Subset& j) const {
    if (j.n() != n_) throw DomainError("subset ambient size mismatch");
    return m_[j.mask()];
}

void FiberTable::set(const Subset& j, std::int64_t v) {
    if (j.n() != n_) throw DomainError("subset ambient size mismatch");
    m_[j.mask()] = v;
}

ValidationReport FiberTable::validate(const std::vector<std::int64_t>& des_fibers) const {
    const std::uint32_t full = Subset::full(n_).mask();
    if (m_[0] != 0) return {false, "m(empty set) = " + std::to_string(m_[0]) + ", want 0"};
    if (m_[full] != 0) return {false, "m(full set) = " + std::to_string(m_[full]) + ", want 0"};
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (m_[mask] < 0)
            return {false, "m" + Subset(n_, mask).str() + " = " + std::to_string(m_[mask]) +
                               " is negative"};
        std::uint32_t rot = Subset(n_, mask).rotated(1).mask();
        if (m_[mask] != m_[rot])
            return {false, "rotation invariance fails at " + Subset(n_, mask).str()};
    }
    const std::uint32_t top = 1u << (n_ - 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (mask & top) continue;
        std::int64_t sum = checked_add(m_[mask], m_[mask | top]);
        if (sum != des_fibers[mask])
            return {false, "m(J) + m(J+{n}) != descent fiber at J = " + Subset(n_, mask).str()};
    }
    return {};
}

std::vector<std::int64_t> des_fiber_counts(const SkewShape& shape, std::int64_t limit) {
    const int n = shape.size();
    if (n > kMaxSubsetN) throw ResourceError("shape size exceeds the dense-table limit of 16");
    std::vector<std::int64_t> out(std::size_t{1} << n, 0);
    for (const StandardTableau& t : enumerate_syt(shape, limit)) ++out[des_set(t).mask()];
    return out;
}

FiberTable fiber_table_from_des(int n, const std::vector<std::int64_t>& des_fibers) {
    FiberTable table(n);
    const std::uint32_t full = Subset::full(n).mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Subset j(n, mask);
        std::vector<int> el = j.elements();
        const int t = static_cast<int>(el.size());
        // alternating sum over suffixes shifted to start at 0
        std::int64_t m = 0;
        for (int i = 0; i < t; ++i) {
            Subset shifted = Subset::empty(n);
            for (int q = i + 1; q < t; ++q) shifted = shifted.with(el[q] - el[i]);
            std::int64_t term = des_fibers[shifted.mask()];
            m = i % 2 == 0 ? checked_add(m, term) : checked_sub(m, term);
        }
        table.set_mask(mask, m);
    }
    return table;
}

FiberTable fiber_table_formula(const SkewShape& shape, std::int64_t limit) {
    return fiber_table_from_des(shape.size(), des_fiber_counts(shape, limit));
}

namespace {

FiberTable fiber_table_inner_impl(const DegreeContext& ctx, const SkewShape& shape, bool parallel) {
    (void)parallel;  // referenced only by the omp clause
    const int n = ctx.degree();
    if (shape.size() != n) throw DomainError("shape size must match degree");
    SchurVector skew = skew_schur(ctx, shape);
    FiberTable table(n);
    const std::int64_t total = std::int64_t{1} << n;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t mask = 1; mask < total; ++mask) {
        Subset j(n, static_cast<std::uint32_t>(mask));
        table.set_mask(static_cast<std::uint32_t>(mask),
                       hall_inner(skew, affine_ribbon_schur(ctx, j)));
    }
    return table;
}

}  // namespace

FiberTable fiber_table_inner(const DegreeContext& ctx, const SkewShape& shape) {
    return fiber_table_inner_impl(ctx, shape, true);
}

FiberTable fiber_table_inner_serial(const DegreeContext& ctx, const SkewShape& shape) {
    return fiber_table_inner_impl(ctx, shape, false);
}

CyclicExtension::CyclicExtension(SkewShape shape, std::vector<StandardTableau> tableaux,
                                 std::vector<Subset> cdes, std::vector<int> p)
    : shape_(std::move(shape)),
      tableaux_(std::move(tableaux)),
      cdes_(std::move(cdes)),
      p_(std::move(p)) {
    if (tableaux_.size() != cdes_.size() || tableaux_.size() != p_.size())
        throw DomainError("extension components must have equal length");
}

FiberTable CyclicExtension::fiber_counts() const {
    FiberTable table(n());
    for (const Subset& s : cdes_) table.set_mask(s.mask(), table.at_mask(s.mask()) + 1);
    return table;
}

void require_extendable(const SkewShape& shape) {
    if (shape.is_connected_ribbon())
        throw NotExtendable("shape " + shape.str() +
                            " is a connected ribbon: its tableaux admit no cyclic descent map "
                            "with the extension, equivariance and non-constancy properties");
}

CyclicExtension build_extension(const SkewShape& shape, std::int64_t limit) {
    require_extendable(shape);
    const int n = shape.size();
    if (n > kMaxSubsetN) throw ResourceError("shape size exceeds the dense-table limit of 16");
    std::vector<StandardTableau> tabs = enumerate_syt(shape, limit);
    std::vector<std::int64_t> desf(std::size_t{1} << n, 0);
    std::vector<std::vector<int>> by_des(std::size_t{1} << n);  // tableau indices per descent set
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        std::uint32_t d = des_set(tabs[i]).mask();
        ++desf[d];
        by_des[d].push_back(static_cast<int>(i));
    }
    FiberTable m = fiber_table_from_des(n, desf);
    ValidationReport rep = m.validate(desf);
    if (!rep.ok) throw DomainError("fiber table violates its invariants: " + rep.detail);

    // assign cyclic descent sets: within each descent fiber (canonical order),
    // the first m(J) tableaux keep J, the rest receive J + {n}
    const std::uint32_t top = 1u << (n - 1);
    std::vector<Subset> cdes(tabs.size(), Subset::empty(n));
    std::vector<std::vector<int>> fiber(std::size_t{1} << n);  // tableau indices per cyclic set
    for (std::uint32_t d = 0; d < (1u << n); ++d) {
        if (d & top) continue;
        const auto& idxs = by_des[d];
        std::int64_t keep = m.at_mask(d);
        for (std::size_t q = 0; q < idxs.size(); ++q) {
            std::uint32_t target = q < static_cast<std::size_t>(keep) ? d : (d | top);
            cdes[static_cast<std::size_t>(idxs[q])] = Subset(n, target);
            fiber[target].push_back(idxs[q]);
        }
    }

    // p maps the i-th tableau of fiber(rot^k(J)) to the i-th of fiber(rot^{k+1}(J)),
    // walking each rotation orbit from its lexicographically smallest member
    std::vector<int> p(tabs.size(), -1);
    std::vector<char> seen(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (seen[mask] || m.at_mask(mask) == 0) continue;
        Subset base(n, mask);
        // find the orbit and its lexicographically smallest member
        std::vector<Subset> orbit;
        Subset cur = base;
        do {
            orbit.push_back(cur);
            seen[cur.mask()] = 1;
            cur = cur.rotated(1);
        } while (cur.mask() != mask);
        std::size_t best = 0;
        for (std::size_t i = 1; i < orbit.size(); ++i)
            if (Subset::lex_less(orbit[i], orbit[best])) best = i;
        std::rotate(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(best), orbit.end());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const auto& src = fiber[orbit[k].mask()];
            const auto& dst = fiber[orbit[(k + 1) % orbit.size()].mask()];
            if (src.size() != dst.size())
                throw DomainError("fiber sizes differ along a rotation orbit");
            for (std::size_t i = 0; i < src.size(); ++i)
                p[static_cast<std::size_t>(src[i])] = dst[i];
        }
    }
    return CyclicExtension(shape, std::move(tabs), std::move(cdes), std::move(p));
}

ValidationReport validate_extension(const CyclicExtension& ext) {
    const int n = ext.n();
    const std::size_t cnt = ext.tableaux().size();
    std::vector<char> hit(cnt, 0);
    for (std::size_t i = 0; i < cnt; ++i) {
        int img = ext.p()[i];
        if (img < 0 || static_cast<std::size_t>(img) >= cnt || hit[static_cast<std::size_t>(img)])
            return {false, "p is not a bijection"};
        hit[static_cast<std::size_t>(img)] = 1;
    }
    for (std::size_t i = 0; i < cnt; ++i) {
        const Subset& c = ext.cdes()[i];
        if (c.is_empty() || c.is_full())
            return {false, "cyclic descent set of tableau " + std::to_string(i) +
                               " is empty or full"};
        Subset restricted = c.without(n);
        if (restricted != des_set(ext.tableaux()[i]))
            return {false, "cyclic descent set of tableau " + std::to_string(i) +
                               " does not restrict to the descent set"};
        const Subset& img = ext.cdes()[static_cast<std::size_t>(ext.p()[i])];
        if (img != c.rotated(1))
            return {false, "equivariance fails at tableau " + std::to_string(i)};
    }
    return {};
}

std::int64_t gw_invariant(const DegreeContext& ctx, const Subset& j_set, const Partition& nu) {
    if (nu.size() != ctx.degree()) throw DomainError("partition size must match degree");
    if (nu.is_hook()) throw DomainError("pairing coefficients are defined for non-hook partitions");
    if (j_set.is_empty()) throw DomainError("subset must be nonempty");
    return affine_ribbon_schur(ctx, j_set).coeff(ctx, nu);
}

}  // namespace cycdes
