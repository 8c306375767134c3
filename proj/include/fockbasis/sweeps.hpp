#pragma once

#include <vector>

#include "fockbasis/affine.hpp"
#include "fockbasis/fock.hpp"
#include "fockbasis/parallel.hpp"

namespace fockbasis {

// Batch verification drivers shared by the CLI and the acceptance suite.

struct RelationSweepConfig {
    int mode_min = -4;
    int mode_max = 4;
    int charge_min = -2;
    int charge_max = 2;
    long long max_energy = 10;
    // Test fixture: replaces the commutator with an anticommutator so the
    // sweep must fail; exercises the failure/diagnostic path end to end.
    bool corrupt_commutator = false;
};

struct RelationFailure {
    MatrixSymbol a, b;
    ElementaryVector vector;
    FockVector diff;
};

struct OperatorIdentityFailure {
    int mode = 0;  // Lambda_{2k+1} vs e_k + f_{k+1}
    ElementaryVector vector;
    FockVector diff;
};

struct RelationSweepResult {
    long long pairs = 0;
    long long vectors = 0;
    long long checks = 0;
    std::vector<RelationFailure> failures;
    std::vector<OperatorIdentityFailure> identity_failures;
    bool pass() const { return failures.empty() && identity_failures.empty(); }
};

// Sweeps r(a)r(b)-r(b)r(a) = r([a,b]) over all pairs from
// {e_k, f_k, h_k, Lambda_k : k in [mode_min, mode_max]} + {K} and all
// elementary vectors in the charge/energy window, plus the operator
// identity Lambda_{2k+1} = e_k + f_{k+1} on the same vectors. Even-Lambda
// commutation is part of the pair sweep (their bracket is zero).
RelationSweepResult relation_sweep(const RelationSweepConfig& config, Exec exec);

struct EsqFailure {
    int total_mode = 0;
    ElementaryVector vector;
    FockVector value;
};

struct EsqSweepResult {
    long long checks = 0;
    std::vector<EsqFailure> failures;
    bool pass() const { return failures.empty(); }
};

// e(z)^2 = 0 at mode level: esq_mode_sum(N, v) over |N| <= max_abs_mode
// and all charge-0 elementary vectors with energy <= max_energy.
EsqSweepResult esq_sweep(int max_abs_mode, long long max_energy, Exec exec);

}  // namespace fockbasis
