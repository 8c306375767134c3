#pragma once

#include <string>
#include <vector>

#include "fockbasis/fock.hpp"

#include "json.hpp"

namespace fockbasis {

// Symbolic Lie algebra element: E(i,j) of a_infinity, the Heisenberg
// shifts Lambda(j), the embedded affine sl2 modes e(k)/f(k)/h(k), and the
// central K (level one: K acts as the identity).
struct MatrixSymbol {
    enum class Kind { E, Lambda, e, f, h, K };
    Kind kind = Kind::K;
    int i = 0;
    int j = 0;

    bool operator==(const MatrixSymbol&) const = default;
    std::string str() const;
};

MatrixSymbol sym_E(int i, int j);
MatrixSymbol sym_lambda(int j);
MatrixSymbol sym_e(int k);
MatrixSymbol sym_f(int k);
MatrixSymbol sym_h(int k);
MatrixSymbol sym_K();

// E_ij -> :psi_i psi*_{-j}: . Off-diagonal this is psi(i) after
// psi_star(-j) (the two normal orderings agree there); on the diagonal the
// normal-ordering subtraction gives the eigenvalue occupied(i) - [i <= 0].
FockVector apply_E(int i, int j, const FockVector& v);

// Two-cocycle alpha: 1 on (E_ij, E_ji) with i <= 0, j >= 1; -1 transposed;
// 0 otherwise. Throws std::invalid_argument on non-E symbols.
int cocycle(const MatrixSymbol& a, const MatrixSymbol& b);

// Lambda_j = sum_k E_{k,k+j}; finitely many k contribute on each term.
// Lambda_0 is diagonal with eigenvalue = charge.
FockVector apply_lambda(int j, const FockVector& v);

// e_k moves one even psi-index up by -2k-1 (sum over the finitely many
// occupied-source/unoccupied-target positions of each term); f_k moves an
// odd index by -2k+1; h_k is the odd-minus-even diagonal family.
FockVector apply_e(int k, const FockVector& v);
FockVector apply_f(int k, const FockVector& v);
FockVector apply_h(int k, const FockVector& v);

FockVector apply_mode(const MatrixSymbol& sym, const FockVector& v);

// h_0 eigenvalue of a wedge: sum over odd indices of (occupied - vacuum)
// minus the same sum over even indices; both deviations are finite.
int h0_weight(const ElementaryVector& w);

// Finite symbolic bracket: terms plus an integer multiple of the central
// element. Unsupported pairs throw std::logic_error.
struct BracketResult {
    std::vector<std::pair<MatrixSymbol, long long>> terms;
    long long central = 0;
};
BracketResult bracket(const MatrixSymbol& a, const MatrixSymbol& b);
FockVector apply_bracket(const BracketResult& br, const FockVector& v);

// r(a)r(b) - r(b)r(a) == r([a,b]) checked exactly on v.
struct RelationDiagnostic {
    bool ok = false;
    MatrixSymbol a, b;
    FockVector lhs_minus_rhs;
    nlohmann::ordered_json to_json(const FockVector& v) const;
};
RelationDiagnostic verify_relation(const MatrixSymbol& a, const MatrixSymbol& b,
                                   const FockVector& v);

// sum_{a+b=N} e_a e_b v over the finite window outside which both
// compositions vanish; e(z)^2 = 0 says this is always zero.
FockVector esq_mode_sum(int N, const FockVector& v);

// The image of |j sqrt 2> in the charge-0 sector: the minimal-energy
// vector of h0-weight 2j (energy j(2j-1)), coefficient +1 by convention.
ElementaryVector vacuum_vector(int j);

// Translated highest-weight vectors in charge sector 0 or 1; sector 0 is
// vacuum_vector(j), sector 1 the minimal vector of h0-weight 2j+1 in the
// charge-1 sector (energy 2j^2+j+1).
ElementaryVector sector_vacuum(int sector, int j);
long long sector_vacuum_energy(int sector, int j);

// True iff Lambda_{2k} v == 0 for 1 <= k <= k_max.
bool lambda_even_kernel_check(const FockVector& v, int k_max);

}  // namespace fockbasis
