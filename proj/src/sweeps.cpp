#include "fockbasis/sweeps.hpp"

namespace fockbasis {

namespace {

std::vector<ElementaryVector> vector_window(int charge_min, int charge_max,
                                            long long max_energy) {
    std::vector<ElementaryVector> out;
    for (int m = charge_min; m <= charge_max; ++m)
        for (long long d = 0; d <= max_energy; ++d)
            for (ElementaryVector& w : enumerate_elementary(m, d)) out.push_back(std::move(w));
    return out;
}

}  // namespace

RelationSweepResult relation_sweep(const RelationSweepConfig& config, Exec exec) {
    std::vector<MatrixSymbol> syms;
    for (int k = config.mode_min; k <= config.mode_max; ++k) {
        syms.push_back(sym_e(k));
        syms.push_back(sym_f(k));
        syms.push_back(sym_h(k));
        syms.push_back(sym_lambda(k));
    }
    syms.push_back(sym_K());
    std::vector<ElementaryVector> vectors =
        vector_window(config.charge_min, config.charge_max, config.max_energy);

    RelationSweepResult result;
    result.pairs = static_cast<long long>(syms.size()) * static_cast<long long>(syms.size());
    result.vectors = static_cast<long long>(vectors.size());

    std::size_t tasks = syms.size() * syms.size();
    std::vector<std::vector<RelationFailure>> slots(tasks);
    for_each_index(tasks, exec, [&](std::size_t t) {
        const MatrixSymbol& a = syms[t / syms.size()];
        const MatrixSymbol& b = syms[t % syms.size()];
        for (const ElementaryVector& w : vectors) {
            FockVector v{w};
            FockVector lhs = apply_mode(a, apply_mode(b, v));
            FockVector rhs_comp = apply_mode(b, apply_mode(a, v));
            if (config.corrupt_commutator)
                lhs += rhs_comp;
            else
                lhs -= rhs_comp;
            lhs -= apply_bracket(bracket(a, b), v);
            if (!lhs.is_zero())
                slots[t].push_back(RelationFailure{a, b, w, std::move(lhs)});
        }
    });
    for (auto& s : slots)
        for (auto& f : s) result.failures.push_back(std::move(f));
    result.checks = result.pairs * result.vectors;

    // Lambda_{2k+1} = e_k + f_{k+1} for every odd shift in the mode window.
    for (int j = config.mode_min; j <= config.mode_max; ++j) {
        if (((j % 2) + 2) % 2 != 1) continue;
        int k = (j - 1) / 2;
        for (const ElementaryVector& w : vectors) {
            FockVector v{w};
            FockVector diff = apply_lambda(j, v);
            diff -= apply_e(k, v);
            diff -= apply_f(k + 1, v);
            ++result.checks;
            if (!diff.is_zero())
                result.identity_failures.push_back(
                    OperatorIdentityFailure{j, w, std::move(diff)});
        }
    }
    return result;
}

EsqSweepResult esq_sweep(int max_abs_mode, long long max_energy, Exec exec) {
    std::vector<ElementaryVector> vectors = vector_window(0, 0, max_energy);
    EsqSweepResult result;
    std::size_t modes = 2 * static_cast<std::size_t>(max_abs_mode) + 1;
    std::vector<std::vector<EsqFailure>> slots(modes);
    for_each_index(modes, exec, [&](std::size_t t) {
        int n = static_cast<int>(t) - max_abs_mode;
        for (const ElementaryVector& w : vectors) {
            FockVector value = esq_mode_sum(n, FockVector(w));
            if (!value.is_zero()) slots[t].push_back(EsqFailure{n, w, std::move(value)});
        }
    });
    for (auto& s : slots)
        for (auto& f : s) result.failures.push_back(std::move(f));
    result.checks = static_cast<long long>(modes) * static_cast<long long>(vectors.size());
    return result;
}

}  // namespace fockbasis
