#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fockbasis/fock.hpp"
#include "fockbasis/qseries.hpp"

using namespace fockbasis;

namespace {

// Independent naive oracle: a wedge as the literal descending index list
// truncated at a floor, with signs counted by list position. Everything the
// canonical (charge, partition) encoding does is checked against this.
using Naive = std::vector<int>;

Naive materialize(const ElementaryVector& w, int floor) {
    Naive out;
    for (int i = 0;; ++i) {
        int k = w.index_at(i);
        if (k < floor) break;
        out.push_back(k);
    }
    return out;
}

// Returns 0 sign if the index is already present.
int naive_insert(Naive& list, int index) {
    auto it = std::find_if(list.begin(), list.end(), [&](int x) { return x <= index; });
    if (it != list.end() && *it == index) return 0;
    int pos = static_cast<int>(it - list.begin());
    list.insert(it, index);
    return pos % 2 == 0 ? 1 : -1;
}

int naive_remove(Naive& list, int index) {
    auto it = std::find(list.begin(), list.end(), index);
    if (it == list.end()) return 0;
    int pos = static_cast<int>(it - list.begin());
    list.erase(it);
    return pos % 2 == 0 ? 1 : -1;
}

std::vector<ElementaryVector> small_family(int charge_window, long long max_energy) {
    std::vector<ElementaryVector> out;
    for (int m = -charge_window; m <= charge_window; ++m)
        for (long long d = 0; d <= max_energy; ++d)
            for (const ElementaryVector& w : enumerate_elementary(m, d)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("normalize: identity permutation") {
    auto r = normalize({0, -1, -2}, -3);
    CHECK(!r.zero);
    CHECK(r.sign == 1);
    CHECK(r.vec == ElementaryVector::vacuum(0));
}

TEST_CASE("normalize: the Remark reordering carries a plus sign") {
    // psi_0 ^ psi_-1 ^ psi_3 ^ psi_-3 over the sea below -4 sorts to
    // psi_3 ^ psi_0 ^ psi_-1 ^ psi_-3 with two transpositions.
    auto r = normalize({0, -1, 3, -3}, -4);
    CHECK(!r.zero);
    CHECK(r.sign == 1);
    CHECK(r.vec == ElementaryVector(0, {3, 1, 1}));
}

TEST_CASE("normalize: one adjacent transposition") {
    // psi_-1 ^ psi_0 over the sea at -2 is the vacuum wedge, resorted.
    auto r = normalize({-1, 0}, -2);
    CHECK(!r.zero);
    CHECK(r.sign == -1);
    CHECK(r.vec == ElementaryVector::vacuum(0));
}

TEST_CASE("normalize: duplicates signal zero, sea collisions are malformed") {
    CHECK(normalize({3, 3}, -1).zero);
    CHECK_THROWS_AS(normalize({-2, 1}, -1), std::invalid_argument);
}

TEST_CASE("normalize: round trip is exact with sign +1") {
    for (const ElementaryVector& w : small_family(2, 6)) {
        auto r = normalize(w.head_indices(), w.sea_start());
        CHECK(!r.zero);
        CHECK(r.sign == 1);
        CHECK(r.vec == w);
    }
}

TEST_CASE("normalize: sign equals the naive inversion parity") {
    std::vector<int> head = {5, 2, 0, -1};
    std::sort(head.begin(), head.end());
    do {
        long long inv = 0;
        for (std::size_t i = 0; i < head.size(); ++i)
            for (std::size_t j = i + 1; j < head.size(); ++j)
                if (head[i] < head[j]) ++inv;
        auto r = normalize(head, -2);
        CHECK(!r.zero);
        CHECK(r.sign == (inv % 2 == 0 ? 1 : -1));
        CHECK(r.vec == ElementaryVector(2, {3, 1}));
    } while (std::next_permutation(head.begin(), head.end()));
}

TEST_CASE("charge and energy") {
    CHECK(ElementaryVector::vacuum(0).charge() == 0);
    CHECK(ElementaryVector::vacuum(1).charge() == 1);
    CHECK(normalize({3, 1, -1, -3}, -4).vec.charge() == 0);

    CHECK(ElementaryVector::vacuum(0).energy() == 0);
    for (int m = -4; m <= 4; ++m)
        CHECK(ElementaryVector::vacuum(m).energy() == static_cast<long long>(m) * (m + 1) / 2);
    CHECK(ElementaryVector(0, {1}).energy() == 1);
}

TEST_CASE("psi on the vacuum") {
    FockVector vac{ElementaryVector::vacuum(0)};
    FockVector r = psi(1, vac);
    // psi_1 ^ psi_0 ^ psi_-1 ^ ... is the charge-1 vacuum, sign +1.
    CHECK(r == FockVector(ElementaryVector::vacuum(1)));
    CHECK(psi(0, vac).is_zero());
    CHECK(psi(-5, vac).is_zero());
}

TEST_CASE("psi_star on the vacuum") {
    FockVector vac{ElementaryVector::vacuum(0)};
    CHECK(psi_star(0, vac) == FockVector(ElementaryVector::vacuum(-1)));
    CHECK(psi_star(-1, vac).is_zero());
    // psi*_1 after psi_1: removes psi_-1 from psi_1 ^ psi_0 ^ psi_-1 ^ ...
    CHECK(psi_star(1, psi(1, vac)) == FockVector(ElementaryVector(0, {1, 1})));
}

TEST_CASE("psi and psi_star agree with the naive list oracle") {
    const int floor = -14;
    for (const ElementaryVector& w : small_family(2, 5)) {
        for (int i = -5; i <= 5; ++i) {
            {
                Naive list = materialize(w, floor);
                int sign = naive_insert(list, i);
                TermResult t = psi_term(i, w);
                CHECK(t.sign == sign);
                if (sign != 0) CHECK(materialize(t.vec, floor) == list);
            }
            {
                Naive list = materialize(w, floor);
                int sign = naive_remove(list, -i);
                TermResult t = psi_star_term(i, w);
                CHECK(t.sign == sign);
                if (sign != 0) CHECK(materialize(t.vec, floor) == list);
            }
        }
    }
}

TEST_CASE("anticommutators on a window") {
    std::vector<ElementaryVector> family = small_family(1, 4);
    for (const ElementaryVector& w : family) {
        FockVector v{w};
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j) {
                CHECK((psi(i, psi(j, v)) + psi(j, psi(i, v))).is_zero());
                CHECK((psi_star(i, psi_star(j, v)) + psi_star(j, psi_star(i, v))).is_zero());
                FockVector anti = psi(i, psi_star(j, v)) + psi_star(j, psi(i, v));
                if (i + j == 0)
                    CHECK(anti == v);
                else
                    CHECK(anti.is_zero());
            }
    }
}

TEST_CASE("psi shifts energy by its index") {
    for (const ElementaryVector& w : small_family(2, 5)) {
        for (int i = -4; i <= 4; ++i) {
            TermResult t = psi_term(i, w);
            if (t.sign != 0) CHECK(t.vec.energy() == w.energy() + i);
            TermResult s = psi_star_term(i, w);
            if (s.sign != 0) CHECK(s.vec.energy() == w.energy() + i);
        }
    }
}

TEST_CASE("linear algebra over exact rationals") {
    FockVector x{ElementaryVector(0, {2, 1}), Rat(2, 3)};
    FockVector y = x;
    y *= Rat(-1);
    CHECK((x + y).is_zero());
    CHECK(x.coefficient_of(ElementaryVector(0, {2, 1})) == Rat(2, 3));
    CHECK(FockVector(ElementaryVector::vacuum(0)).coefficient_of(ElementaryVector::vacuum(1)) ==
          0);
    FockVector empty;
    CHECK(psi(3, empty).is_zero());
    CHECK((empty + x) == x);
}

TEST_CASE("enumerate_elementary") {
    auto basis = enumerate_elementary(0, 0);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == ElementaryVector::vacuum(0));

    CHECK(enumerate_elementary(0, 4).size() == 5);  // p(4)

    auto c11 = enumerate_elementary(1, 1);
    REQUIRE(c11.size() == 1);
    CHECK(c11[0] == ElementaryVector::vacuum(1));

    CHECK(enumerate_elementary(2, 1).empty());  // below minimal energy
}

TEST_CASE("cell dimensions match the partition oracle") {
    for (int m = -3; m <= 3; ++m)
        for (long long d = 0; d <= 12; ++d) {
            long long n = d - static_cast<long long>(m) * (m + 1) / 2;
            Int expected = n < 0 ? Int(0) : partition_count(n);
            CHECK(Int(enumerate_elementary(m, d).size()) == expected);
        }
}

TEST_CASE("json serialization shape") {
    ElementaryVector w(0, {3, 1});
    auto j = to_json(w);
    CHECK(j["charge"] == 0);
    CHECK(j["partition"] == std::vector<int>{3, 1});
    FockVector v{w, Rat(-5, 2)};
    auto a = to_json(v);
    REQUIRE(a.size() == 1);
    CHECK(a[0]["coeff"] == "-5/2");
}
