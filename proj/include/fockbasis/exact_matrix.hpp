#pragma once

#include <cstddef>
#include <vector>

#include "fockbasis/bigint.hpp"
#include "fockbasis/fock.hpp"
#include "fockbasis/parallel.hpp"

namespace fockbasis {

using IntMatrix = std::vector<std::vector<Int>>;

// Rank over Q by Bareiss fraction-free elimination: every intermediate
// entry stays an exact integer (each 2x2 cross-multiplication step is
// divisible by the previous pivot). No rational arithmetic, no growth
// beyond minor determinants.
long long rank_bareiss_serial(IntMatrix m);
long long rank_bareiss_parallel(IntMatrix m);  // OpenMP over row updates
long long rank_fraction_free(IntMatrix m, Exec exec);

// Rows = vectors expressed in `basis` column order, denominators cleared
// row-by-row (rank over Q is unchanged).
IntMatrix matrix_from_vectors(const std::vector<FockVector>& rows,
                              const std::vector<ElementaryVector>& basis);

// Sorted union of the supports of `rows`; the canonical column basis.
std::vector<ElementaryVector> support_union(const std::vector<FockVector>& rows);

}  // namespace fockbasis
