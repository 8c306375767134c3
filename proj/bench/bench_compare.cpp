// Compares the serial reference kernels against their OpenMP versions on
// representative workloads: fraction-free rank of a stacked even-Lambda
// constraint matrix, a bracket-relation sweep, and a global basis sweep.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "fockbasis/affine.hpp"
#include "fockbasis/exact_matrix.hpp"
#include "fockbasis/fock.hpp"
#include "fockbasis/fsbasis.hpp"
#include "fockbasis/parallel.hpp"

using namespace fockbasis;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

IntMatrix lambda_constraint_matrix(long long energy) {
    std::vector<ElementaryVector> cell = enumerate_elementary(0, energy);
    std::vector<FockVector> rows;
    for (int k = 1; 2 * k <= energy; ++k)
        for (const ElementaryVector& w : cell) rows.push_back(apply_lambda(2 * k, FockVector(w)));
    // Rows live in lower-energy cells; columns are the union of supports.
    std::vector<ElementaryVector> basis = support_union(rows);
    return matrix_from_vectors(rows, basis);
}

long long relation_sweep(Exec exec) {
    std::vector<MatrixSymbol> syms;
    for (int k = -3; k <= 3; ++k) {
        syms.push_back(sym_e(k));
        syms.push_back(sym_f(k));
        syms.push_back(sym_h(k));
        syms.push_back(sym_lambda(k));
    }
    std::vector<ElementaryVector> family;
    for (int m = -1; m <= 1; ++m)
        for (long long d = 0; d <= 8; ++d)
            for (const ElementaryVector& w : enumerate_elementary(m, d)) family.push_back(w);
    std::size_t tasks = syms.size() * syms.size();
    std::vector<long long> ok(tasks, 0);
    for_each_index(tasks, exec, [&](std::size_t t) {
        const MatrixSymbol& a = syms[t / syms.size()];
        const MatrixSymbol& b = syms[t % syms.size()];
        long long passed = 0;
        for (const ElementaryVector& w : family)
            if (verify_relation(a, b, FockVector(w)).ok) ++passed;
        ok[t] = passed;
    });
    long long total = 0;
    for (long long x : ok) total += x;
    return total;
}

template <class F, class G>
void report(const char* name, F&& serial, G&& parallel) {
    auto t0 = clock_type::now();
    auto rs = serial();
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto rp = parallel();
    double tp = seconds_since(t0);
    std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n", name, ts, tp,
                tp > 0 ? ts / tp : 0.0, rs == rp ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());

    IntMatrix m = lambda_constraint_matrix(16);
    std::printf("constraint matrix: %zu x %zu\n", m.size(), m.empty() ? 0 : m[0].size());
    report(
        "rank (even-Lambda stack)",
        [&]() { return rank_fraction_free(m, Exec::Serial); },
        [&]() { return rank_fraction_free(m, Exec::Parallel); });

    report(
        "relation sweep",
        []() { return relation_sweep(Exec::Serial); },
        []() { return relation_sweep(Exec::Parallel); });

    report(
        "global basis sweep (E<=13)",
        []() {
            GlobalBasisReport r = global_basis_check(13, 0, Exec::Serial);
            return r.pass ? static_cast<long long>(r.cells.size()) : -1;
        },
        []() {
            GlobalBasisReport r = global_basis_check(13, 0, Exec::Parallel);
            return r.pass ? static_cast<long long>(r.cells.size()) : -1;
        });
    return 0;
}
