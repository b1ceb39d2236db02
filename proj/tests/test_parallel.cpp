// The parallel kernels must agree bit-for-bit with their serial reference
// implementations regardless of thread count.
#include "doctest.h"

#include "cycdes/cyclic.hpp"
#include "cycdes/exceptional.hpp"
#include "cycdes/gens.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"

using namespace cycdes;

TEST_CASE("fiber table expansion kernel") {
    for (const char* s : {"3,2,1", "4,3,1", "3,3,2/1", "(2)+(3,1)", "4,4/1"}) {
        SkewShape shape = parse_shape(s);
        DegreeContext ctx(shape.size());
        CHECK(fiber_table_inner(ctx, shape) == fiber_table_inner_serial(ctx, shape));
    }
}

TEST_CASE("symmetric group distribution kernel") {
    for (int n = 1; n <= 7; ++n) {
        SnDistributions par = sn_multivariate(n);
        SnDistributions ser = sn_multivariate_serial(n);
        CHECK(par.des == ser.des);
        CHECK(par.cdes == ser.cdes);
    }
}

TEST_CASE("word distribution kernel") {
    CHECK(word_cdes_distribution(3, 6) == word_cdes_distribution_serial(3, 6));
    CHECK(word_cdes_distribution(4, 5) == word_cdes_distribution_serial(4, 5));
    CHECK(word_cdes_distribution(2, 10, true) == word_cdes_distribution_serial(2, 10, true));
}
