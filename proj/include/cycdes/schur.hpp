#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cycdes/partition.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"

namespace cycdes {

// Per-degree universe: all partitions of n, index-compressed, plus the Schur
// expansions of the complete homogeneous products h_alpha for every part
// multiset (precomputed once, read-only afterwards -- safe to share across
// threads).
class DegreeContext {
public:
    explicit DegreeContext(int degree);

    int degree() const { return degree_; }
    int count() const { return static_cast<int>(partitions_.size()); }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const Partition& partition(int idx) const { return partitions_[static_cast<std::size_t>(idx)]; }
    int index_of(const Partition& p) const;

    int hook_index(int k) const;             // index of (n-k, 1^k)
    bool is_hook(int idx) const { return hook_flag_[static_cast<std::size_t>(idx)]; }

    // coefficients of h_alpha in the Schur basis (alpha taken as a multiset)
    const std::vector<std::int64_t>& h_coeffs(const std::vector<int>& parts) const;

private:
    int degree_;
    std::vector<Partition> partitions_;       // lexicographically sorted
    std::map<std::vector<int>, int> index_;
    std::vector<char> hook_flag_;
    std::vector<int> hook_index_;             // by k
    std::map<std::vector<int>, std::vector<std::int64_t>> h_cache_;  // key: sorted desc parts
};

// Element of the degree-n Schur basis span with exact integer coefficients.
class SchurVector {
public:
    SchurVector() = default;
    SchurVector(int degree, std::vector<std::int64_t> coeffs);
    static SchurVector zero(const DegreeContext& ctx);
    static SchurVector unit(const DegreeContext& ctx, const Partition& p);

    int degree() const { return degree_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t coeff(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
    std::int64_t coeff(const DegreeContext& ctx, const Partition& p) const;

    SchurVector& operator+=(const SchurVector& o);
    SchurVector& operator-=(const SchurVector& o);
    SchurVector& operator*=(std::int64_t k);
    friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
    friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
    friend SchurVector operator*(std::int64_t k, SchurVector a) { return a *= k; }

    bool operator==(const SchurVector&) const = default;

private:
    int degree_ = 0;
    std::vector<std::int64_t> c_;
};

// Schur expansion of h_alpha (iterated row insertions; coefficients are the
// numbers of semistandard tableaux with content alpha).
SchurVector h_to_schur(const DegreeContext& ctx, const Composition& alpha);
SchurVector h_to_schur(const DegreeContext& ctx, const std::vector<int>& parts);

// Schur expansion of a skew shape via the determinant of complete homogeneous
// functions; a negative surviving coefficient is reported as a domain error.
SchurVector skew_schur(const DegreeContext& ctx, const SkewShape& shape);

// Signed subset sum over I <= J of h_comp(n, I); equals the skew Schur function
// of the ribbon of comp_of_subset(n, J).
SchurVector ribbon_schur(const DegreeContext& ctx, const Subset& j_set);

// Signed sum over nonempty I <= J of h_ccomp(n, I); the empty set yields zero.
SchurVector affine_ribbon_schur(const DegreeContext& ctx, const Subset& j_set);

// The power sum p_n as an alternating sum of hook Schur functions.
SchurVector power_sum_hooks(const DegreeContext& ctx);

// Hall inner product (Schur functions orthonormal); degrees must agree.
std::int64_t hall_inner(const SchurVector& a, const SchurVector& b);

// Specialization to m variables all equal to 1: sum of coeff * #SSYT(shape, m).
std::int64_t principal_spec(const DegreeContext& ctx, const SchurVector& v, int m);

// Closed-form hook coefficients of the skew Schur function: for a generalized
// ribbon with m components and height h the coefficient of s_(n-k,1^k) is
// binom(m-1, h-k-1) for k+1 <= h <= k+m; all other cases are zero.
std::vector<std::int64_t> hook_mults(const SkewShape& shape);

// Whether the two-row/column identity holds at (n, k): the skew Schur function
// of (1^k) plus-sum (n-k) equals s_(n-k+1,1^(k-1)) + s_(n-k,1^k).
bool sum_of_hooks_identity(const DegreeContext& ctx, int k);

std::int64_t binomial(int n, int k);

}  // namespace cycdes
