#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fockbasis/bigint.hpp"

#include "json.hpp"

namespace fockbasis {

// A basis wedge psi_{k_0} ^ psi_{k_1} ^ ... of the semi-infinite wedge
// space, stored canonically as (charge, partition):
//
//     k_i = charge - i + lambda_{i+1}      (lambda padded by zeros)
//
// so k_i = charge - i once i >= lambda.size() (the Dirac sea). Trailing
// zero parts are never stored, which makes the encoding unique.
class ElementaryVector {
public:
    ElementaryVector() = default;  // charge-0 vacuum |0>

    // Throws std::invalid_argument unless `partition` is weakly decreasing
    // with positive parts.
    ElementaryVector(int charge, std::vector<int> partition);

    static ElementaryVector vacuum(int charge) { return ElementaryVector(charge, {}); }

    int charge() const { return charge_; }
    const std::vector<int>& partition() const { return partition_; }

    // m(m+1)/2 + |lambda|, the q-degree of all character formulas.
    long long energy() const;

    // Indices above sea_start() that are occupied, descending. Every index
    // <= sea_start() is occupied.
    int head_size() const { return static_cast<int>(partition_.size()); }
    int sea_start() const { return charge_ - head_size(); }
    int index_at(int i) const;  // k_i, any i >= 0
    std::vector<int> head_indices() const;

    bool occupied(int index) const;

    bool operator==(const ElementaryVector&) const = default;
    auto operator<=>(const ElementaryVector&) const = default;

    std::string str() const;  // e.g. "(0; 3,1,1)"

private:
    int charge_ = 0;
    std::vector<int> partition_;
};

// Canonical form of a presented wedge: `head` in presentation order (all
// entries must exceed sea_start), with every index <= sea_start occupied.
// A repeated head index is the zero wedge, signalled via `zero` rather
// than an error. A head entry <= sea_start duplicates a sea index and is
// malformed input (std::invalid_argument).
struct NormalizeResult {
    bool zero = false;
    int sign = 1;  // parity of the permutation sorting `head` descending
    ElementaryVector vec;
};
NormalizeResult normalize(const std::vector<int>& head, int sea_start);

// Finite exact-rational linear combination of elementary vectors. Zero
// coefficients are never stored; equality is equality of term maps. The
// ordered map keeps every iteration order deterministic.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(const ElementaryVector& w, const Rat& c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const ElementaryVector& w, const Rat& c);
    Rat coefficient_of(const ElementaryVector& w) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Rat& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Rat& c, FockVector v) { return v *= c; }

    bool operator==(const FockVector&) const = default;

    const std::map<ElementaryVector, Rat>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<ElementaryVector, Rat> terms_;
};

// Clifford generators. psi(i) wedges psi_i on the left (zero if index i is
// occupied); psi_star(i) removes psi_{-i} (zero if absent). Insertion or
// removal at 0-based position p from the left carries sign (-1)^p; this is
// the one sign convention of the whole artifact.
FockVector psi(int i, const FockVector& v);
FockVector psi_star(int i, const FockVector& v);

// Single-term variants; `sign == 0` encodes the zero result.
struct TermResult {
    int sign = 0;
    ElementaryVector vec;
};
TermResult psi_term(int i, const ElementaryVector& w);
TermResult psi_star_term(int i, const ElementaryVector& w);

// All elementary vectors of given charge and energy; their number is
// p(energy - m(m+1)/2). Empty (not an error) below the minimal energy.
std::vector<ElementaryVector> enumerate_elementary(int charge, long long energy);

// Partitions of n with parts <= max_part (weakly decreasing part lists).
void partitions_into(long long n, long long max_part,
                     std::vector<int>& scratch,
                     std::vector<std::vector<int>>& out);

nlohmann::ordered_json to_json(const ElementaryVector& w);
nlohmann::ordered_json to_json(const FockVector& v);

}  // namespace fockbasis
