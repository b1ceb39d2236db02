#include <vector>

#include "doctest.h"

#include "cycdes/errors.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"
#include "cycdes/tableaux.hpp"

#include "support/oracles.hpp"

using namespace cycdes;

namespace {

SchurVector sv(const DegreeContext& ctx, std::vector<std::pair<std::vector<int>, std::int64_t>> coeffs) {
    SchurVector v = SchurVector::zero(ctx);
    for (auto& [parts, c] : coeffs) {
        SchurVector u = SchurVector::unit(ctx, Partition(parts));
        u *= c;
        v += u;
    }
    return v;
}

}  // namespace

TEST_CASE("complete homogeneous products expand with Kostka multiplicities") {
    DegreeContext ctx(3);
    CHECK(h_to_schur(ctx, Composition({2, 1})) == sv(ctx, {{{3}, 1}, {{2, 1}, 1}}));
    CHECK(h_to_schur(ctx, Composition({1, 1, 1})) ==
          sv(ctx, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
    CHECK(h_to_schur(ctx, Composition({3})) == sv(ctx, {{{3}, 1}}));
    // order of the factors is irrelevant
    DegreeContext ctx5(5);
    CHECK(h_to_schur(ctx5, Composition({2, 1, 2})) == h_to_schur(ctx5, Composition({1, 2, 2})));
}

TEST_CASE("skew Schur expansions match the lattice-word oracle") {
    DegreeContext ctx3(3);
    CHECK(skew_schur(ctx3, parse_shape("2,2/1")) == sv(ctx3, {{{2, 1}, 1}}));
    DegreeContext ctx2(2);
    CHECK(skew_schur(ctx2, parse_shape("(1)+(1)")) == sv(ctx2, {{{2}, 1}, {{1, 1}, 1}}));
    for (int n = 1; n <= 5; ++n) {
        DegreeContext ctx(n);
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            CHECK(skew_schur(ctx, shape) == oracles::lattice_word_schur(ctx, shape));
        }
    }
}

TEST_CASE("ribbon Schur functions") {
    DegreeContext ctx(3);
    // the empty subset gives the single row, the full one the single column
    CHECK(ribbon_schur(ctx, Subset::empty(3)) == sv(ctx, {{{3}, 1}}));
    CHECK(ribbon_schur(ctx, Subset::of(3, {1, 2})) == sv(ctx, {{{1, 1, 1}, 1}}));
    // ribbons expand as the skew Schur function of the ribbon shape
    for (int n = 2; n <= 6; ++n) {
        DegreeContext c(n);
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            Subset j(n, mask);
            SkewShape ribbon = ribbon_of_composition(comp_of_subset(n, j));
            CHECK(ribbon_schur(c, j) == skew_schur(c, ribbon));
        }
    }
}

TEST_CASE("affine ribbon Schur functions") {
    DegreeContext ctx(4);
    CHECK(affine_ribbon_schur(ctx, Subset::empty(4)) == SchurVector::zero(ctx));
    CHECK(affine_ribbon_schur(ctx, Subset::of(4, {1, 3})) ==
          sv(ctx, {{{2, 2}, 1}, {{3, 1}, 1}, {{4}, -1}}));
    // rotation invariance in J
    for (int n = 2; n <= 6; ++n) {
        DegreeContext c(n);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Subset j(n, mask);
            CHECK(affine_ribbon_schur(c, j) == affine_ribbon_schur(c, j.rotated(1)));
        }
    }
}

TEST_CASE("power sum expands into alternating hooks") {
    DegreeContext ctx(3);
    CHECK(power_sum_hooks(ctx) == sv(ctx, {{{3}, 1}, {{2, 1}, -1}, {{1, 1, 1}, 1}}));
    DegreeContext ctx1(1);
    CHECK(power_sum_hooks(ctx1) == sv(ctx1, {{{1}, 1}}));
}

TEST_CASE("Hall pairing") {
    DegreeContext ctx(4);
    for (int a = 0; a < ctx.count(); ++a) {
        for (int b = 0; b < ctx.count(); ++b) {
            std::int64_t expected = a == b ? 1 : 0;
            CHECK(hall_inner(SchurVector::unit(ctx, ctx.partition(a)),
                             SchurVector::unit(ctx, ctx.partition(b))) == expected);
        }
    }
    // bilinear on a composite example
    SchurVector v = sv(ctx, {{{2, 2}, 2}, {{4}, -1}});
    SchurVector w = sv(ctx, {{{2, 2}, 3}, {{4}, 5}});
    CHECK(hall_inner(v, w) == 1);
}

TEST_CASE("principal specialization counts semistandard fillings") {
    for (const char* s : {"2,1", "3,1", "2,2", "3,2,1/1"}) {
        SkewShape shape = parse_shape(s);
        DegreeContext ctx(shape.size());
        SchurVector v = skew_schur(ctx, shape);
        for (int m = 1; m <= 4; ++m) {
            CHECK(principal_spec(ctx, v, m) == oracles::brute_count_ssyt(shape, m));
        }
    }
}

TEST_CASE("hook multiplicities have the closed binomial form") {
    for (int n = 1; n <= 5; ++n) {
        DegreeContext ctx(n);
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            SchurVector v = skew_schur(ctx, shape);
            std::vector<std::int64_t> hm = hook_mults(shape);
            REQUIRE(hm.size() == static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                CHECK(v.coeff(ctx.hook_index(k)) == hm[static_cast<std::size_t>(k)]);
            }
        }
    }
}

TEST_CASE("sum of two hooks identity") {
    for (int n = 2; n <= 7; ++n) {
        DegreeContext ctx(n);
        for (int k = 1; k < n; ++k) CHECK(sum_of_hooks_identity(ctx, k));
    }
}

TEST_CASE("binomials") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
}
