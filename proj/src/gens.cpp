#include "cycdes/gens.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "cycdes/checked.hpp"
#include "cycdes/errors.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

namespace {

void require_same_vars(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.vars() != b.vars()) {
        throw DomainError("polynomial variable lists differ");
    }
}

// (1-t)^e as a dense coefficient vector.
std::vector<std::int64_t> one_minus_t_pow(int e) {
    std::vector<std::int64_t> c{1};
    for (int i = 0; i < e; ++i) {
        std::vector<std::int64_t> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] = checked_add(next[k], c[k]);
            next[k + 1] = checked_sub(next[k + 1], c[k]);
        }
        c = std::move(next);
    }
    return c;
}

std::vector<std::int64_t> dense_mul(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b, int max_deg) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_deg) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(max_deg); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
        }
    }
    return out;
}

bool dense_eq(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
              int max_deg) {
    for (int k = 0; k <= max_deg; ++k) {
        std::int64_t x = k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : 0;
        std::int64_t y = k < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(k)] : 0;
        if (x != y) return false;
    }
    return true;
}

std::vector<std::int64_t> dense_derivative(const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> out(a.size() > 1 ? a.size() - 1 : 0, 0);
    for (std::size_t k = 1; k < a.size(); ++k) {
        out[k - 1] = checked_mul(a[k], static_cast<std::int64_t>(k));
    }
    return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Count-by-size projection of a subset-indexed table.
std::vector<std::int64_t> size_profile(const std::vector<std::int64_t>& table, int n) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
        out[static_cast<std::size_t>(std::popcount(mask))] =
            checked_add(out[static_cast<std::size_t>(std::popcount(mask))], table[mask]);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::uint32_t rotate_mask(std::uint32_t mask, int shift, int n) {
    shift %= n;
    if (shift == 0) return mask;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1u);
    return ((mask << shift) | (mask >> (n - shift))) & all;
}

}  // namespace

// --- IntPolynomial -----------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

IntPolynomial IntPolynomial::from_dense(const std::string& var,
                                        const std::vector<std::int64_t>& c) {
    IntPolynomial p({var});
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) p.terms_[{static_cast<int>(k)}] = c[k];
    }
    return p;
}

std::int64_t IntPolynomial::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void IntPolynomial::add_term(const std::vector<int>& exps, std::int64_t c) {
    if (exps.size() != vars_.size()) throw DomainError("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int IntPolynomial::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, checked_sub(0, c));
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c = checked_mul(c, k);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    require_same_vars(a, b);
    IntPolynomial out(a.vars_);
    std::vector<int> e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

IntPolynomial IntPolynomial::derivative(int var) const {
    IntPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        std::vector<int> e2 = e;
        --e2[static_cast<std::size_t>(var)];
        out.add_term(e2, checked_mul(c, k));
    }
    return out;
}

IntPolynomial IntPolynomial::substituted(int var, std::int64_t value) const {
    IntPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        int k = e2[static_cast<std::size_t>(var)];
        e2[static_cast<std::size_t>(var)] = 0;
        out.add_term(e2, checked_mul(c, ipow(value, k)));
    }
    return out;
}

IntPolynomial IntPolynomial::truncated(int var, int max_deg) const {
    IntPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(var)] <= max_deg) out.add_term(e, c);
    }
    return out;
}

IntPolynomial IntPolynomial::reversed(int var, int deg) const {
    if (degree(var) > deg) throw DomainError("reversal degree below actual degree");
    IntPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        e2[static_cast<std::size_t>(var)] = deg - e2[static_cast<std::size_t>(var)];
        out.add_term(e2, c);
    }
    return out;
}

std::vector<std::int64_t> IntPolynomial::dense(int var) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(degree(var), -1) + 1), 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) != var && e[i] != 0) {
                throw DomainError("polynomial is not univariate in the requested variable");
            }
        }
        out[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = c;
    }
    return out;
}

std::string IntPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool coeff_shown = (a != 1) || all_zero;
        if (coeff_shown) os << a;
        bool lead = !coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// --- tableau generating polynomials ------------------------------------------

IntPolynomial des_poly(const SkewShape& shape, std::int64_t limit) {
    auto fibers = des_fiber_counts(shape, limit);
    return IntPolynomial::from_dense("t", size_profile(fibers, shape.size()));
}

IntPolynomial cdes_poly(const SkewShape& shape, std::int64_t limit) {
    require_extendable(shape);
    FiberTable ft = fiber_table_formula(shape, limit);
    return IntPolynomial::from_dense("t", size_profile(ft.values(), ft.n()));
}

bool check_des_cdes_derivative(const SkewShape& shape, std::int64_t limit) {
    const std::int64_t n = shape.size();
    IntPolynomial d = des_poly(shape, limit);
    IntPolynomial c = cdes_poly(shape, limit);
    IntPolynomial one_minus_t = IntPolynomial::from_dense("t", {1, -1});
    IntPolynomial lhs = n * d;
    IntPolynomial rhs = n * c + one_minus_t * c.derivative(0);
    return lhs == rhs;
}

bool check_series_identities(const SkewShape& shape, int series_terms, std::int64_t limit) {
    const int n = shape.size();
    const int big = series_terms;
    if (big < n + 2) throw DomainError("series truncation order too small");

    // des_poly(t) == (1-t)^(n+1) * sum_{m>=0} spec(m+1) t^m, exact through degree big.
    std::vector<std::int64_t> des = des_poly(shape, limit).dense(0);
    std::vector<std::int64_t> series1(static_cast<std::size_t>(big) + 1);
    for (int m = 0; m <= big; ++m) {
        series1[static_cast<std::size_t>(m)] = count_ssyt(shape, m + 1);
    }
    auto rhs1 = dense_mul(one_minus_t_pow(n + 1), series1, big);
    if (!dense_eq(des, rhs1, big)) return false;

    // Denominator-free derivative form of the cyclic series:
    // cdes'(t)(1-t) + n*cdes(t) == (1-t)^(n+1) * n * sum_{m>=1} spec(m) t^(m-1),
    // exact through degree big-1.
    std::vector<std::int64_t> cdes = cdes_poly(shape, limit).dense(0);
    auto cprime = dense_derivative(cdes);
    std::vector<std::int64_t> lhs2(static_cast<std::size_t>(big), 0);
    for (int k = 0; k < big; ++k) {
        std::int64_t v = 0;
        if (k < static_cast<int>(cprime.size())) v = checked_add(v, cprime[static_cast<std::size_t>(k)]);
        if (k >= 1 && k - 1 < static_cast<int>(cprime.size())) {
            v = checked_sub(v, cprime[static_cast<std::size_t>(k - 1)]);
        }
        if (k < static_cast<int>(cdes.size())) {
            v = checked_add(v, checked_mul(static_cast<std::int64_t>(n),
                                           cdes[static_cast<std::size_t>(k)]));
        }
        lhs2[static_cast<std::size_t>(k)] = v;
    }
    std::vector<std::int64_t> series2(static_cast<std::size_t>(big), 0);
    for (int m = 1; m <= big; ++m) {
        series2[static_cast<std::size_t>(m - 1)] =
            checked_mul(static_cast<std::int64_t>(n), count_ssyt(shape, m));
    }
    auto rhs2 = dense_mul(one_minus_t_pow(n + 1), series2, big - 1);
    return dense_eq(lhs2, rhs2, big - 1);
}

bool check_carlitz(int n, int series_terms) {
    if (n < 1) throw DomainError("need n >= 1");
    const int big = series_terms;
    if (big < n + 2) throw DomainError("series truncation order too small");
    std::vector<std::int64_t> des = des_poly(antidiagonal_strip(n)).dense(0);
    std::vector<std::int64_t> series(static_cast<std::size_t>(big) + 1);
    for (int m = 0; m <= big; ++m) {
        series[static_cast<std::size_t>(m)] = ipow(m + 1, n);
    }
    auto rhs = dense_mul(one_minus_t_pow(n + 1), series, big);
    return dense_eq(des, rhs, big);
}

bool check_cyclic_carlitz(int n, int series_terms) {
    if (n < 2) throw DomainError("need n >= 2");
    const int big = series_terms;
    if (big < n + 2) throw DomainError("series truncation order too small");
    std::vector<std::int64_t> cdes = cdes_poly(antidiagonal_strip(n)).dense(0);

    // exact form: n * t * (descent polynomial one size down)
    std::vector<std::int64_t> prev = des_poly(antidiagonal_strip(n - 1)).dense(0);
    std::vector<std::int64_t> shifted(prev.size() + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
        shifted[k + 1] = checked_mul(static_cast<std::int64_t>(n), prev[k]);
    }
    if (!dense_eq(cdes, shifted, static_cast<int>(shifted.size()))) return false;

    // series form: n * (1-t)^n * sum_{m>=1} m^(n-1) t^m
    std::vector<std::int64_t> series(static_cast<std::size_t>(big) + 1, 0);
    for (int m = 1; m <= big; ++m) {
        series[static_cast<std::size_t>(m)] = checked_mul(static_cast<std::int64_t>(n),
                                                          ipow(m, n - 1));
    }
    auto rhs = dense_mul(one_minus_t_pow(n), series, big);
    return dense_eq(cdes, rhs, big);
}

// --- symmetric-group distributions -------------------------------------------

namespace {

SnDistributions sn_impl(int n, bool parallel) {
    if (n < 1) throw DomainError("need n >= 1");
    if (n > 13) throw ResourceError("symmetric group too large to enumerate");
    SnDistributions d;
    d.n = n;
    d.des.assign(1u << n, 0);
    d.cdes.assign(1u << n, 0);
    const std::uint32_t top = 1u << (n - 1);
    (void)parallel;
#pragma omp parallel if (parallel && n > 4)
    {
        std::vector<std::int64_t> loc_des(1u << n, 0);
        std::vector<std::int64_t> loc_cdes(1u << n, 0);
        std::vector<int> w(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 1)
        for (int first = 1; first <= n; ++first) {
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v) {
                if (v != first) rest.push_back(v);
            }
            w[0] = first;
            do {
                std::copy(rest.begin(), rest.end(), w.begin() + 1);
                std::uint32_t mask = 0;
                for (int i = 1; i < n; ++i) {
                    if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) {
                        mask |= 1u << (i - 1);
                    }
                }
                ++loc_des[mask];
                if (w[static_cast<std::size_t>(n - 1)] > w[0]) mask |= top;
                ++loc_cdes[mask];
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
#pragma omp critical
        {
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                d.des[m] += loc_des[m];
                d.cdes[m] += loc_cdes[m];
            }
        }
    }
    return d;
}

}  // namespace

SnDistributions sn_multivariate(int n) { return sn_impl(n, true); }
SnDistributions sn_multivariate_serial(int n) { return sn_impl(n, false); }

bool check_cdes_top_specialization(const SnDistributions& d) {
    const int n = d.n;
    const std::uint32_t top = 1u << (n - 1);
    std::vector<std::int64_t> res(1u << n, 0);
    for (std::uint32_t mask = 0; mask < d.cdes.size(); ++mask) {
        res[mask & ~top] = checked_add(res[mask & ~top], d.cdes[mask]);
    }
    return res == d.des;
}

bool check_cdes_rotation_sum(const SnDistributions& d, const SnDistributions& prev) {
    const int n = d.n;
    if (prev.n != n - 1) throw DomainError("distributions must be consecutive sizes");
    const std::uint32_t top = 1u << (n - 1);
    std::vector<std::int64_t> res(1u << n, 0);
    for (std::uint32_t mask = 0; mask < prev.des.size(); ++mask) {
        std::int64_t c = prev.des[mask];
        if (c == 0) continue;
        std::uint32_t base = mask | top;
        for (int i = 1; i <= n; ++i) {
            std::uint32_t r = rotate_mask(base, i, n);
            res[r] = checked_add(res[r], c);
        }
    }
    return res == d.cdes;
}

bool check_cdes_complement(const SnDistributions& d) {
    const int n = d.n;
    const std::uint32_t top = 1u << (n - 1);
    const std::uint32_t all = (1u << n) - 1u;
    std::vector<std::int64_t> res(1u << n, 0);
    for (std::uint32_t mask = 0; mask < d.cdes.size(); ++mask) {
        if (mask & top) continue;  // keep only the part free of the last variable
        std::int64_t c = d.cdes[mask];
        if (c == 0) continue;
        res[mask] = checked_add(res[mask], c);
        res[all ^ mask] = checked_add(res[all ^ mask], c);
    }
    return res == d.cdes;
}

bool check_des_recurrence(const SnDistributions& d, const SnDistributions& prev) {
    const int n = d.n;
    if (prev.n != n - 1) throw DomainError("distributions must be consecutive sizes");
    const std::uint32_t top = 1u << (n - 1);
    std::vector<std::int64_t> res(1u << n, 0);
    for (std::uint32_t mask = 0; mask < prev.des.size(); ++mask) {
        std::int64_t c = prev.des[mask];
        if (c == 0) continue;
        for (int i = 1; i <= n; ++i) {
            std::uint32_t r = rotate_mask(mask, i, n) | (1u << (i - 1));
            r &= ~top;  // evaluate the last variable at 1
            res[r] = checked_add(res[r], c);
        }
    }
    return res == d.des;
}

IntPolynomial sn_bivariate(const SnDistributions& d) {
    const int n = d.n;
    const std::uint32_t top = 1u << (n - 1);
    IntPolynomial out({"t", "u"});
    for (std::uint32_t mask = 0; mask < d.cdes.size(); ++mask) {
        if (d.cdes[mask] == 0) continue;
        int te = std::popcount(mask & ~top);
        int ue = (mask & top) ? 1 : 0;
        out.add_term({te, ue}, d.cdes[mask]);
    }
    return out;
}

namespace {

// f(t) = d/dt [ t * (descent polynomial of the smaller group) ].
std::vector<std::int64_t> bivariate_f(const SnDistributions& prev) {
    std::vector<std::int64_t> s = size_profile(prev.des, prev.n);
    std::vector<std::int64_t> f(s.size(), 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        f[k] = checked_mul(s[k], static_cast<std::int64_t>(k + 1));
    }
    return f;
}

}  // namespace

bool check_bivariate_reversal(const SnDistributions& d, const SnDistributions& prev) {
    const int n = d.n;
    if (prev.n != n - 1) throw DomainError("distributions must be consecutive sizes");
    std::vector<std::int64_t> f = bivariate_f(prev);
    IntPolynomial rhs({"t", "u"});
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] == 0) continue;
        rhs.add_term({n - 1 - static_cast<int>(k), 0}, f[k]);  // t^(n-1) * f(1/t)
        rhs.add_term({static_cast<int>(k), 1}, f[k]);          // u * f(t)
    }
    return sn_bivariate(d) == rhs;
}

bool check_bivariate_operator(const SnDistributions& d, const SnDistributions& prev) {
    const int n = d.n;
    if (prev.n != n - 1) throw DomainError("distributions must be consecutive sizes");
    std::vector<std::int64_t> s = size_profile(prev.des, prev.n);
    std::vector<std::int64_t> a(s.size() + 1, 0);  // t * s
    for (std::size_t k = 0; k < s.size(); ++k) a[k + 1] = s[k];
    std::vector<std::int64_t> ap = dense_derivative(a);
    IntPolynomial rhs({"t", "u"});
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::int64_t v = checked_mul(static_cast<std::int64_t>(n), a[k]);
        if (k >= 1 && k - 1 < ap.size()) v = checked_sub(v, ap[k - 1]);  // -t * a'
        if (v != 0) rhs.add_term({static_cast<int>(k), 0}, v);
    }
    for (std::size_t k = 0; k < ap.size(); ++k) {
        if (ap[k] != 0) rhs.add_term({static_cast<int>(k), 1}, ap[k]);  // u * a'
    }
    return sn_bivariate(d) == rhs;
}

// --- distribution decompositions ---------------------------------------------

bool check_sn_cdes_distribution(int n, std::int64_t limit) {
    if (n < 2) throw DomainError("need n >= 2");
    SnDistributions d = sn_multivariate(n);
    DegreeContext ctx(n);
    std::vector<std::int64_t> res(1u << n, 0);
    for (int idx = 0; idx < ctx.count(); ++idx) {
        if (ctx.is_hook(idx)) continue;
        SkewShape shape(ctx.partition(idx), Partition());
        std::int64_t mult = count_syt(shape, limit);
        FiberTable ft = fiber_table_formula(shape, limit);
        for (std::uint32_t mask = 0; mask < res.size(); ++mask) {
            res[mask] = checked_add(res[mask], checked_mul(mult, ft.at_mask(mask)));
        }
    }
    for (int k = 1; k <= n - 1; ++k) {
        std::int64_t mult = binomial(n - 2, k - 1);
        FiberTable ft = fiber_table_formula(column_row_sum(n, k), limit);
        for (std::uint32_t mask = 0; mask < res.size(); ++mask) {
            res[mask] = checked_add(res[mask], checked_mul(mult, ft.at_mask(mask)));
        }
    }
    return res == d.cdes;
}

bool check_strip_cdes_distribution(const Composition& alpha, std::int64_t limit) {
    if (alpha.length() < 2) throw DomainError("need a composition with at least two parts");
    const int n = alpha.size();
    const int m = alpha.length();

    SkewShape strip = strip_of_composition(alpha);
    std::vector<std::int64_t> lhs(1u << n, 0);
    for (const StandardTableau& t : enumerate_syt(strip, limit)) {
        std::uint32_t mask = strip_cdes(t).mask();
        lhs[mask] = checked_add(lhs[mask], 1);
    }

    DegreeContext ctx(n);
    SchurVector kostka = h_to_schur(ctx, alpha);
    std::vector<std::int64_t> rhs(1u << n, 0);
    for (int idx = 0; idx < ctx.count(); ++idx) {
        if (ctx.is_hook(idx)) continue;
        std::int64_t mult = kostka.coeff(idx);
        if (mult == 0) continue;
        FiberTable ft = fiber_table_formula(SkewShape(ctx.partition(idx), Partition()), limit);
        for (std::uint32_t mask = 0; mask < rhs.size(); ++mask) {
            rhs[mask] = checked_add(rhs[mask], checked_mul(mult, ft.at_mask(mask)));
        }
    }
    for (int k = 1; k <= m - 1; ++k) {
        std::int64_t mult = binomial(m - 2, k - 1);
        FiberTable ft = fiber_table_formula(column_row_sum(n, k), limit);
        for (std::uint32_t mask = 0; mask < rhs.size(); ++mask) {
            rhs[mask] = checked_add(rhs[mask], checked_mul(mult, ft.at_mask(mask)));
        }
    }
    return lhs == rhs;
}

}  // namespace cycdes
