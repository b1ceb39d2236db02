#include <vector>

#include "doctest.h"

#include "cycdes/errors.hpp"
#include "cycdes/partition.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"

using namespace cycdes;

TEST_CASE("partition basics") {
    Partition p({3, 2, 1});
    CHECK(p.size() == 6);
    CHECK(p.rows() == 3);
    CHECK(p.part(0) == 3);
    CHECK(p.part(5) == 0);  // beyond the last row
    CHECK(p.str() == "3,2,1");
    CHECK_FALSE(p.is_hook());
    CHECK(Partition({4, 1, 1}).is_hook());
    CHECK(Partition::hook(6, 2) == Partition({4, 1, 1}));
    CHECK(Partition({3, 3}).contains(Partition({2, 1})));
    CHECK_FALSE(Partition({3, 1}).contains(Partition({2, 2})));
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({1, 0}), DomainError);
}

TEST_CASE("cyclic compositions compare up to rotation") {
    CyclicComposition a({2, 1, 3});
    CyclicComposition b({1, 3, 2});
    CyclicComposition c({3, 1, 2});  // rotation class of (1,2,3), not of (2,1,3)
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.parts() == std::vector<int>{2, 1, 3});  // construction order preserved
}

TEST_CASE("subset arithmetic on the cyclic group") {
    Subset j = Subset::from_elements(5, {1, 3, 4});
    CHECK(j.str() == "{1,3,4}");
    CHECK(j.rotated(5) == j);
    CHECK(j.rotated(2) == Subset::from_elements(5, {1, 3, 5}));
    CHECK(j.negated() == Subset::from_elements(5, {1, 2, 4}));  // 5-j, with 5 fixed as 5
    CHECK(j.negated().negated() == j);
    CHECK(j.complement() == Subset::from_elements(5, {2, 5}));
    CHECK(Subset::full(4).size() == 4);
    CHECK(Subset::empty(4).is_empty());
}

TEST_CASE("compositions attached to subsets") {
    // gaps of {2,4,5} inside [6]: 2, 2, 1, and 1 to reach 6
    CHECK(comp_of_subset(6, Subset::from_elements(6, {2, 4, 5})).parts() ==
          std::vector<int>{2, 2, 1, 1});
    CHECK(comp_of_subset(6, Subset::empty(6)).parts() == std::vector<int>{6});
    // cyclic gaps wrap around: the part after the largest element returns to the smallest
    CHECK(ccomp_of_subset(6, Subset::from_elements(6, {2, 4, 5})).parts() ==
          std::vector<int>{2, 1, 3});
    CHECK(ccomp_of_subset(6, Subset::from_elements(6, {4})).parts() == std::vector<int>{6});
    CHECK_THROWS_AS(ccomp_of_subset(6, Subset::empty(6)), DomainError);
}

TEST_CASE("cyclic composition of a subset is rotation invariant") {
    const int n = 5;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Subset j(n, mask);
        CyclicComposition base = ccomp_of_subset(n, j);
        for (int k = 1; k < n; ++k) {
            CHECK(ccomp_of_subset(n, j.rotated(k)) == base);
        }
    }
}

TEST_CASE("shape grammar") {
    SkewShape s = parse_shape("4,3,2/1,1");
    CHECK(s.size() == 7);
    CHECK(s.str() == "4,3,2/1,1");
    CHECK(s.rows() == 3);
    CHECK(s.row_begin(0) == 1);
    CHECK(s.row_end(0) == 4);

    SkewShape sum = parse_shape("(1^2)+(5)");
    CHECK(sum.size() == 7);
    CHECK(sum.components() == 2);
    CHECK(sum == direct_sum({parse_shape("1,1"), parse_shape("5")}));

    CHECK(parse_shape("3,2,1/2,1") == antidiagonal_strip(3));
    CHECK(parse_shape("(1)+(1)+(1)") == antidiagonal_strip(3));
    CHECK(parse_shape("(1)+(3)") == column_row_sum(4, 1));
    CHECK(parse_shape("(1^3)+(1)") == column_row_sum(4, 3));
    CHECK(parse_shape("(2)+(3)") == strip_of_composition(Composition({2, 3})));

    CHECK_THROWS_AS(parse_shape("0"), DomainError);
    CHECK_THROWS_AS(parse_shape("3,4"), DomainError);     // not weakly decreasing
    CHECK_THROWS_AS(parse_shape("4,3/5"), DomainError);   // inner not contained
    CHECK_THROWS_AS(parse_shape("1x7"), DomainError);     // repeat shorthand is ^ only
}

TEST_CASE("shape classification") {
    CHECK(parse_shape("5").is_connected_ribbon());
    CHECK(parse_shape("1,1,1").is_connected_ribbon());
    CHECK(parse_shape("2,2/1").is_connected_ribbon());
    CHECK_FALSE(parse_shape("2,2").is_connected_ribbon());    // contains a square
    CHECK_FALSE(parse_shape("2,2").is_generalized_ribbon());
    CHECK_FALSE(parse_shape("(1)+(3)").is_connected_ribbon());  // two components
    CHECK(parse_shape("(1)+(3)").is_generalized_ribbon());
    CHECK(parse_shape("3,2,1/2,1").components() == 3);
    CHECK(parse_shape("3,3/1").height() == 2);
    CHECK_FALSE(parse_shape("3,3/1").is_generalized_ribbon());
}

TEST_CASE("ribbon of a composition") {
    SkewShape r = ribbon_of_composition(Composition({2, 2}));
    CHECK(r.size() == 4);
    CHECK(r.is_connected_ribbon());
    // consecutive rows overlap in exactly one column
    CHECK(r == parse_shape("3,2/1"));
    CHECK(ribbon_of_composition(Composition({4})) == parse_shape("4"));
    CHECK(ribbon_of_composition(Composition({1, 1, 1})) == parse_shape("1,1,1"));
    // the first part is the southwestern row
    CHECK(ribbon_of_composition(Composition({2, 1})) == parse_shape("2,2/1"));
    CHECK(ribbon_of_composition(Composition({1, 2})) == parse_shape("2,1"));
}

TEST_CASE("skew shape equality is translation invariant") {
    // (2,2)/(1) and the same cells written with a redundant full inner column
    CHECK(parse_shape("2,2/1") == parse_shape("2,2/1"));
    CHECK_FALSE(parse_shape("2,2/1") == parse_shape("2,1"));
}

TEST_CASE("shape enumeration counts") {
    const std::vector<std::size_t> expected = {1, 3, 9, 28, 87};
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_skew_shapes(n).size() == expected[static_cast<std::size_t>(n - 1)]);
    }
    for (const SkewShape& s : enumerate_skew_shapes(4)) CHECK(s.size() == 4);
}
