#include "fockbasis/exact_matrix.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fockbasis {

namespace {

// One Bareiss step: rows below `r` are updated against pivot row `r`
// (pivot column `c`), dividing exactly by the previous pivot.
template <bool Parallel>
long long rank_bareiss_impl(IntMatrix& m) {
    const long long rows = static_cast<long long>(m.size());
    const long long cols = rows ? static_cast<long long>(m[0].size()) : 0;
    Int prev_pivot = 1;
    long long r = 0;
    for (long long c = 0; c < cols && r < rows; ++c) {
        long long pr = -1;
        for (long long i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) std::swap(m[pr], m[r]);
        const Int& pivot = m[r][c];

        auto update_row = [&](long long i) {
            Int factor = m[i][c];
            for (long long j = c + 1; j < cols; ++j) {
                Int t = pivot * m[i][j] - factor * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][c] = 0;
        };

        if constexpr (Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long i = r + 1; i < rows; ++i) update_row(i);
        } else {
            for (long long i = r + 1; i < rows; ++i) update_row(i);
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

}  // namespace

long long rank_bareiss_serial(IntMatrix m) { return rank_bareiss_impl<false>(m); }
long long rank_bareiss_parallel(IntMatrix m) { return rank_bareiss_impl<true>(m); }

long long rank_fraction_free(IntMatrix m, Exec exec) {
    return exec == Exec::Parallel ? rank_bareiss_parallel(std::move(m))
                                  : rank_bareiss_serial(std::move(m));
}

std::vector<ElementaryVector> support_union(const std::vector<FockVector>& rows) {
    std::set<ElementaryVector> support;
    for (const FockVector& v : rows)
        for (const auto& [w, c] : v.terms()) support.insert(w);
    return {support.begin(), support.end()};
}

IntMatrix matrix_from_vectors(const std::vector<FockVector>& rows,
                              const std::vector<ElementaryVector>& basis) {
    IntMatrix m(rows.size(), std::vector<Int>(basis.size(), Int(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rat> row(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) row[j] = rows[i].coefficient_of(basis[j]);
        Int l = denominator_lcm(row);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Rat x = row[j] * Rat(l);
            x.canonicalize();
            m[i][j] = x.get_num();
        }
    }
    return m;
}

}  // namespace fockbasis
