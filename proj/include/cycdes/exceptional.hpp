#pragma once

#include <cstdint>
#include <vector>

#include "cycdes/cyclic.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

// Cyclic descent set {i in [n] : a_i > a_(i+1)} of a word over positive
// integers, indices cyclic (a_(n+1) = a_1).  May be empty (constant words) but
// never all of [n].  The weak variant uses >= and may be all of [n] instead.
Subset word_cdes_star(const std::vector<int>& word, bool weak = false);

// Distribution of the statistic over all words in [m]^n, as a dense table
// indexed by subset bitmask.
std::vector<std::int64_t> word_cdes_distribution(int m, int n, bool weak = false);
std::vector<std::int64_t> word_cdes_distribution_serial(int m, int n, bool weak = false);

// The word distribution decomposed through fiber tables of straight shapes and
// column-plus-row strips, with binomially weighted multiplicities.
bool check_words_identity(int m, int n, std::int64_t limit = kDefaultSytLimit);

// Layered structure: w splits into descending runs of consecutive integers
// with increasing run maxima.  Returns the number of runs, or 0 when w is not
// of that form.  Colayered = reverse word is layered.
int layered_count(const std::vector<int>& w);
bool is_even_layered(const std::vector<int>& w);
bool is_even_colayered(const std::vector<int>& w);

// Escher variant of the cyclic descent statistic on the symmetric group (even
// n only; odd n is a domain error): even-layered permutations keep their plain
// descent set, even-colayered ones additionally gain n, all others keep the
// rotation statistic of the one-line word.
Subset perm_cdes_star(const std::vector<int>& w);

// All checkable claims of the even-n construction at once: the fiber-size
// shift against the plain cyclic distribution, singleton empty and full
// fibers, the axioms with an explicitly stitched companion bijection, and the
// inner-product formula for the fiber sizes.
bool check_exceptional_sn(int n);

// Empty-fiber sizes e0 >= 0 for which a consistent Escher fiber table exists
// (nonnegative everywhere, rotation-invariant, correct descent marginals, and
// at least one tableau mapped to the empty set or to [n]).  Empty when no
// Escher extension is possible.
std::vector<std::int64_t> exceptional_feasibility(const SkewShape& shape,
                                                  std::int64_t limit = kDefaultSytLimit);

// The Escher fiber table for a chosen feasible empty-fiber size.
FiberTable exceptional_fiber_table(const SkewShape& shape, std::int64_t e0,
                                   std::int64_t limit = kDefaultSytLimit);

// The three shape families admitting Escher extensions for n >= 2: a single
// row, a single column, or (for even n) n singleton components.
bool exceptional_family(const SkewShape& shape);

}  // namespace cycdes
