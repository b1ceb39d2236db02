#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycdes/cyclic.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"

namespace cycdes {

// Sparse polynomial with exact integer coefficients over named variables.
// Terms map exponent vectors to nonzero coefficients.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<std::string> vars);
    static IntPolynomial from_dense(const std::string& var, const std::vector<std::int64_t>& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::map<std::vector<int>, std::int64_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(const std::vector<int>& exps) const;
    void add_term(const std::vector<int>& exps, std::int64_t c);
    int degree(int var) const;  // -1 for the zero polynomial

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(std::int64_t k);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(std::int64_t k, IntPolynomial a) { return a *= k; }

    IntPolynomial derivative(int var) const;
    IntPolynomial substituted(int var, std::int64_t value) const;  // exponent folded away
    IntPolynomial truncated(int var, int max_deg) const;
    IntPolynomial reversed(int var, int deg) const;  // x^deg * f(1/x); requires degree <= deg

    std::vector<std::int64_t> dense(int var) const;  // single-variable extraction

    bool operator==(const IntPolynomial&) const = default;

    std::string str() const;  // deterministic, e.g. "3*t^2 + t*u"

private:
    std::vector<std::string> vars_;
    std::map<std::vector<int>, std::int64_t> terms_;
};

// Descent-count generating polynomial of the standard tableaux of a shape.
IntPolynomial des_poly(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);
// Cyclic analogue, from the fiber table; refuses connected ribbons.
IntPolynomial cdes_poly(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);

// n * des_poly == n * cdes_poly + (1-t) * d/dt cdes_poly.
bool check_des_cdes_derivative(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);

// Truncated series identities: des_poly against (1-t)^(n+1) times the series of
// 1-specializations, and the derivative form of cdes_poly against the same
// series.  Both sides are exact polynomials compared coefficientwise.
bool check_series_identities(const SkewShape& shape, int series_terms,
                             std::int64_t limit = kDefaultSytLimit);

// Eulerian-polynomial forms for the antidiagonal strip of n cells.
bool check_carlitz(int n, int series_terms);
bool check_cyclic_carlitz(int n, int series_terms);

// Dense subset-indexed distributions over the symmetric group: des over
// subsets of [n-1], cdes over subsets of [n] (bit i-1 holds element i).
struct SnDistributions {
    int n = 0;
    std::vector<std::int64_t> des;
    std::vector<std::int64_t> cdes;
};
SnDistributions sn_multivariate(int n);         // OpenMP over first entries
SnDistributions sn_multivariate_serial(int n);  // reference implementation

// Multivariate identities relating S_n and S_{n-1} distributions.
bool check_cdes_top_specialization(const SnDistributions& d);                  // t_n = 1
bool check_cdes_rotation_sum(const SnDistributions& d, const SnDistributions& prev);
bool check_cdes_complement(const SnDistributions& d);                          // g + t^[n] g(1/t)
bool check_des_recurrence(const SnDistributions& d, const SnDistributions& prev);

// Bivariate specialization t^des(w) * u^(cdes(w) - des(w)) in vars (t, u).
IntPolynomial sn_bivariate(const SnDistributions& d);
bool check_bivariate_reversal(const SnDistributions& d, const SnDistributions& prev);  // via f(t)
bool check_bivariate_operator(const SnDistributions& d, const SnDistributions& prev);

// The cdes distribution of S_n written through fiber tables of straight shapes:
// non-hook partitions weighted by tableau counts plus binomially weighted
// column-plus-row strips.
bool check_sn_cdes_distribution(int n, std::int64_t limit = kDefaultSytLimit);

// Same skeleton for an arbitrary horizontal strip, weighted by the numbers of
// semistandard tableaux with the strip's content.
bool check_strip_cdes_distribution(const Composition& alpha,
                                   std::int64_t limit = kDefaultSytLimit);

}  // namespace cycdes
