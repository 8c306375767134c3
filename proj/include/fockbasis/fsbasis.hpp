#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fockbasis/affine.hpp"
#include "fockbasis/bigint.hpp"
#include "fockbasis/fock.hpp"
#include "fockbasis/parallel.hpp"

#include "json.hpp"

namespace fockbasis {

// Product e_{i_1} e_{i_2} ... e_{i_k} with i_1 < i_2 < ... and gaps >= 2,
// applied rightmost factor first (the e's commute).
struct FibonacciMonomial {
    std::vector<int> indices;

    int length() const { return static_cast<int>(indices.size()); }
    long long degq() const;  // negated index sum
    std::string str() const;

    bool operator==(const FibonacciMonomial&) const = default;
};

// Throws std::invalid_argument unless strictly increasing with gaps >= 2.
FibonacciMonomial make_fibonacci(std::vector<int> indices);

// Bidegree slice of the sector-j basic subspace W_j: monomial length,
// negated index sum, indices <= -2j-1.
struct BidegreeCell {
    int length = 0;
    long long degq = 0;
    int sector_j = 0;
};

// Minimal degq of a length-n monomial with indices <= -2j-1: n^2 + 2jn.
long long min_degq(int length, int sector_j);

// All gap->=2 monomials of the given length with index sum -neg_sum and
// indices <= max_index, in ascending reflected-lex order.
std::vector<FibonacciMonomial> enumerate_fib_bounded(int length, long long neg_sum,
                                                     int max_index);
std::vector<FibonacciMonomial> enumerate_fibonacci(const BidegreeCell& cell);

// Length-n products with indices <= -2j-1 and sum -degq, repeats allowed,
// no gap condition (the straightening comparison set).
std::vector<std::vector<int>> enumerate_unrestricted(int length, long long degq, int j);

FockVector apply_monomial_on(const FibonacciMonomial& mon, const ElementaryVector& vac);

// mon applied to |j sqrt 2>; throws if an index violates the sector bound.
FockVector apply_monomial(const FibonacciMonomial& mon, int j);
FockVector apply_index_list_on(const std::vector<int>& indices, const ElementaryVector& vac);

// The Q elementary vector: e_{i_1} acts on the top even index of the
// sector vacuum, e_{i_2} on the next even below, ... (indices taken from
// the largest down). Throws std::invalid_argument if a move collides,
// which happens exactly when the gap condition fails.
ElementaryVector leading_vector(const FibonacciMonomial& mon, int j);

// Total order on same-cell monomials via the partitions (-i_k,...,-i_1)
// compared from the smallest part; the greater monomial is the one whose
// last (largest) index is more negative at the first difference. Chosen so
// the Q-pivot matrix below is lower triangular. Throws on different cells.
std::strong_ordering reflected_lex_compare(const FibonacciMonomial& a,
                                           const FibonacciMonomial& b);

struct IndependenceReport {
    long long count = 0;
    long long rank = 0;
    bool triangular = false;
};

// Rank of the applied-monomial matrix over Q plus the triangularity of its
// restriction to the leading_vector columns in reflected-lex order.
IndependenceReport independence_check(const BidegreeCell& cell, Exec exec = Exec::Serial);

// Rank of all unrestricted monomials at the bidegree equals the rank of
// the Fibonacci subset (the straightening claim at this slice).
bool spanning_check(int length, long long degq, int j, Exec exec = Exec::Serial);

// Canonical semi-infinite monomial: finite head over the infinite gap-2
// tail of the sector-(0|1) lattice vector |(tail_charge)>; the tail is
// maximal (the head cannot be extended into it).
struct SemiInfiniteMonomial {
    int sector = 0;
    int tail_charge = 0;
    FibonacciMonomial head;
    std::string str() const;
};

int tail_start(int sector, int j);            // deepest tail index
int canonical_head_bound(int sector, int j);  // largest admissible head index

std::vector<SemiInfiniteMonomial> enumerate_semi_infinite(int weight, long long energy,
                                                          int sector);
FockVector semi_infinite_image(const SemiInfiniteMonomial& mon);

// Reference multiplicity from the module character at this (weight,
// energy): p((energy - vacuum_energy(weight)) / 2), zero off-parity.
Int semi_infinite_character_coeff(int sector, int weight, long long energy);

struct CellReport {
    int sector = 0;
    int weight = 0;
    long long energy = 0;
    long long count = 0;
    long long rank = 0;
    long long kernel_dim = 0;
    Int character_coeff;
    bool in_kernel = false;
    bool pass = false;
    nlohmann::ordered_json to_json() const;
};

struct GlobalBasisReport {
    bool pass = false;
    std::vector<CellReport> cells;
};

// The theorem at truncation: per (weight, energy <= max_energy) cell,
// count of canonical semi-infinite monomials == exact rank of their images
// == dimension of the even-Lambda kernel == character coefficient; every
// image lies in the kernel. Cells with no basis vectors are still checked
// (their kernel must be trivial).
GlobalBasisReport global_basis_check(long long max_energy, int sector,
                                     Exec exec = Exec::Serial);

}  // namespace fockbasis
