#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"

#include "cycdes/errors.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"
#include "cycdes/tableaux.hpp"

#include "support/oracles.hpp"

using namespace cycdes;

TEST_CASE("standard tableau counts") {
    CHECK(count_syt(parse_shape("3,2,1")) == 16);
    CHECK(count_syt(parse_shape("4,2")) == 9);    // hook length formula
    CHECK(count_syt(parse_shape("3,3")) == 5);
    CHECK(count_syt(parse_shape("2,2,2")) == 5);
    CHECK(count_syt(parse_shape("2,2/1")) == 2);
    CHECK(count_syt(parse_shape("1")) == 1);
}

TEST_CASE("enumeration is sorted by reading word and respects the limit") {
    std::vector<StandardTableau> tabs = enumerate_syt(parse_shape("2,2"));
    REQUIRE(tabs.size() == 2);
    CHECK(tabs[0].reading_word() == std::vector<int>{1, 2, 3, 4});
    CHECK(tabs[1].reading_word() == std::vector<int>{1, 3, 2, 4});
    CHECK(des_set(tabs[0]) == Subset::of(4, {2}));
    CHECK(des_set(tabs[1]) == Subset::of(4, {1, 3}));
    CHECK(std::is_sorted(tabs.begin(), tabs.end(),
                         [](const StandardTableau& a, const StandardTableau& b) {
                             return a.reading_word() < b.reading_word();
                         }));
    CHECK_THROWS_AS(enumerate_syt(parse_shape("4,3,2,1"), 5), ResourceError);
}

TEST_CASE("horizontal strip cyclic extension satisfies the axioms") {
    for (const Composition& alpha : {Composition({2, 3}), Composition({1, 2, 2}),
                                     Composition({3, 1}), Composition({1, 1, 1, 1})}) {
        SkewShape shape = strip_of_composition(alpha);
        const int n = shape.size();
        std::vector<StandardTableau> tabs = enumerate_syt(shape);
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < tabs.size(); ++i) index[tabs[i].reading_word()] = i;

        std::set<std::size_t> images;
        for (const StandardTableau& t : tabs) {
            Subset c = strip_cdes(t);
            // extension: restricting to [n-1] recovers Des
            CHECK(c.without(n) == des_set(t));
            // non-Escher
            CHECK_FALSE(c.is_empty());
            CHECK_FALSE(c.is_full());
            // equivariance under the rotation companion
            StandardTableau pt = strip_p(t);
            CHECK(strip_cdes(pt) == c.rotated(1));
            REQUIRE(index.count(pt.reading_word()) == 1);
            images.insert(index[pt.reading_word()]);
        }
        CHECK(images.size() == tabs.size());  // p is a bijection

        // p has order dividing n
        for (const StandardTableau& t : tabs) {
            StandardTableau cur = t;
            for (int k = 0; k < n; ++k) cur = strip_p(cur);
            CHECK(cur == t);
        }
    }
}

TEST_CASE("permutations embed into the antidiagonal strip") {
    // the embedded tableau realizes Des(w) as its descent set
    std::vector<int> w = {3, 1, 2};
    StandardTableau t = permutation_to_strip_tableau(w);
    CHECK(t.shape() == antidiagonal_strip(3));
    CHECK(des_set(t) == Subset::of(3, {1}));
    std::vector<int> u = {2, 4, 1, 3};
    CHECK(des_set(permutation_to_strip_tableau(u)) == Subset::of(4, {2}));
    CHECK_THROWS_AS(permutation_to_strip_tableau({1, 1, 2}), DomainError);
}

TEST_CASE("promotion on rectangles") {
    SUBCASE("2x2 promotion is an involution") {
        std::vector<StandardTableau> tabs = enumerate_syt(parse_shape("2,2"));
        CHECK(promotion(tabs[0]) == tabs[1]);
        CHECK(promotion(tabs[1]) == tabs[0]);
    }
    SUBCASE("promotion has order dividing the size") {
        for (const char* s : {"3,3", "2,2,2", "4,4"}) {
            SkewShape shape = parse_shape(s);
            for (const StandardTableau& t : enumerate_syt(shape)) {
                StandardTableau cur = t;
                for (int k = 0; k < shape.size(); ++k) cur = promotion(cur);
                CHECK(cur == t);
            }
        }
    }
    SUBCASE("rejects non-rectangles") {
        CHECK_THROWS_AS(promotion(enumerate_syt(parse_shape("2,1")).front()), DomainError);
        CHECK_THROWS_AS(promotion(enumerate_syt(parse_shape("3")).front()), DomainError);
    }
}

TEST_CASE("semistandard counts match brute-force backtracking") {
    CHECK(count_ssyt(parse_shape("2,1"), 2) == 2);
    CHECK(count_ssyt(parse_shape("2,2"), 2) == 1);
    CHECK(count_ssyt(parse_shape("2,1"), 3, {1, 1, 1}) == 2);
    CHECK(count_ssyt(parse_shape("2,1"), 3, {2, 1, 0}) == 1);
    for (int n = 1; n <= 5; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            for (int m = 1; m <= 4; ++m) {
                CHECK(count_ssyt(shape, m) == oracles::brute_count_ssyt(shape, m));
            }
        }
    }
}

TEST_CASE("cylindric tableaux") {
    // J = {1} inside [2]: the shape is one row of two cells whose southwest
    // entry must be strictly below the northeast one, so only (1,2) survives
    std::vector<SemistandardTableau> tabs =
        enumerate_cylindric_tableaux(2, Subset::of(2, {1}), 2);
    REQUIRE(tabs.size() == 1);
    CHECK(tabs[0].rows() == std::vector<std::vector<int>>{{1, 2}});
    // with a single letter the strict inequality kills every filling
    CHECK(enumerate_cylindric_tableaux(2, Subset::of(2, {1}), 1).empty());
    CHECK(enumerate_cylindric_tableaux(1, Subset::of(1, {1}), 5).empty());
    // on the full column the corner condition contradicts column strictness
    CHECK(enumerate_cylindric_tableaux(3, Subset::full(3), 4).empty());
    // a singleton gives a row of n cells with first entry < last entry
    CHECK(enumerate_cylindric_tableaux(3, Subset::of(3, {2}), 3).size() == 7);
    // a two-element subset whose gaps are (2,1)
    std::vector<SemistandardTableau> ribbon_tabs =
        enumerate_cylindric_tableaux(3, Subset::of(3, {1, 3}), 3);
    REQUIRE(ribbon_tabs.size() == 1);
    CHECK(ribbon_tabs[0].rows() == std::vector<std::vector<int>>{{2}, {1, 3}});
    // fillings in t letters vanish exactly when J is a rotated prefix interval
    CHECK(enumerate_cylindric_tableaux(3, Subset::of(3, {1, 3}), 2).empty());
    CHECK(enumerate_cylindric_tableaux(4, Subset::of(4, {2, 4}), 2).size() == 1);
}
