#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "fockbasis/affine.hpp"
#include "fockbasis/fsbasis.hpp"
#include "fockbasis/qseries.hpp"

using namespace fockbasis;

namespace {

// Exhaustive oracle for pairs: all (a < b <= -2j-1, b - a >= 2, -a-b = m).
long long pair_count(long long m, int j) {
    long long c = 0;
    for (int b = -2 * j - 1; -b < m; --b)
        for (int a = b - 2; -a - b <= m; --a)
            if (-a - b == m) ++c;
    return c;
}

}  // namespace

TEST_CASE("make_fibonacci validates the gap condition") {
    CHECK_NOTHROW(make_fibonacci({-5, -3, -1}));
    CHECK_THROWS_AS(make_fibonacci({-2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(make_fibonacci({-1, -1}), std::invalid_argument);
}

TEST_CASE("min_degq") {
    CHECK(min_degq(2, 0) == 4);
    CHECK(min_degq(3, 0) == 9);
    CHECK(min_degq(2, 1) == 8);
    CHECK(min_degq(2, -1) == 0);
    CHECK(min_degq(0, 5) == 0);
}

TEST_CASE("enumerate_fibonacci worked cells") {
    auto c1 = enumerate_fibonacci({2, 4, 0});
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].indices == std::vector<int>{-3, -1});

    auto c2 = enumerate_fibonacci({2, 6, 0});
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].indices == std::vector<int>{-5, -1});  // ascending reflected-lex
    CHECK(c2[1].indices == std::vector<int>{-4, -2});

    auto c0 = enumerate_fibonacci({0, 0, 3});
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].indices.empty());

    CHECK(enumerate_fibonacci({2, 2, 0}).empty());
}

TEST_CASE("pair cells agree with the exhaustive oracle") {
    for (int j = -1; j <= 1; ++j)
        for (long long m = min_degq(2, j); m <= 12; ++m)
            CHECK(static_cast<long long>(enumerate_fibonacci({2, m, j}).size()) ==
                  pair_count(m, j));
}

TEST_CASE("cell counts match ch_W coefficients and the sector shift") {
    for (int j = -1; j <= 1; ++j) {
        BivariateSeries w = ch_W(j, 14, -3, 6);
        for (int n = 0; n <= 3; ++n)
            for (long long m = 0; m <= 10; ++m) {
                long long count = enumerate_fibonacci({n, m, j}).size();
                long long shifted = enumerate_fibonacci({n, m - 2LL * j * n, 0}).size();
                CHECK(count == shifted);
                long long l0 = static_cast<long long>(j) * j + m;
                if (j + n <= 6 && l0 <= 14)
                    CHECK(to_int(count) == w.coeff(j + n, l0));
            }
    }
}

TEST_CASE("apply_monomial") {
    CHECK(apply_monomial(make_fibonacci({-1}), 0) == FockVector(ElementaryVector(0, {1})));
    CHECK(apply_monomial(make_fibonacci({}), 0) == FockVector(ElementaryVector::vacuum(0)));
    CHECK_THROWS_AS(apply_monomial(make_fibonacci({-1}), 1), std::invalid_argument);
}

TEST_CASE("leading vectors") {
    CHECK(leading_vector(make_fibonacci({-1}), 0) == ElementaryVector(0, {1}));
    CHECK(leading_vector(make_fibonacci({}), 0) == ElementaryVector::vacuum(0));
    // e_-3 e_-1: move psi_0 -> psi_1 (for e_-1) and psi_-2 -> psi_3 (for
    // e_-3), giving psi_3 ^ psi_1 ^ psi_-1 ^ psi_-3 ^ sea.
    CHECK(leading_vector(make_fibonacci({-3, -1}), 0) == ElementaryVector(0, {3, 2, 1}));
    // A gap-1 monomial has colliding moves.
    FibonacciMonomial bad{{-2, -1}};
    CHECK_THROWS_AS(leading_vector(bad, 0), std::invalid_argument);

    // The expansion reaches its leading vector with coefficient +1.
    FockVector img = apply_monomial(make_fibonacci({-3, -1}), 0);
    CHECK(img.coefficient_of(leading_vector(make_fibonacci({-3, -1}), 0)) == 1);
}

TEST_CASE("leading vectors are valid and homogeneous across cells") {
    for (int j = -1; j <= 1; ++j)
        for (int n = 0; n <= 3; ++n)
            for (long long m = min_degq(n, j); m <= min_degq(n, j) + 8; ++m)
                for (const FibonacciMonomial& mon : enumerate_fibonacci({n, m, j})) {
                    ElementaryVector q = leading_vector(mon, j);
                    CHECK(q.energy() ==
                          sector_vacuum_energy(0, j) + 2 * mon.degq() - mon.length());
                    CHECK(apply_monomial(mon, j).coefficient_of(q) != 0);
                }
}

TEST_CASE("reflected lex order") {
    FibonacciMonomial a = make_fibonacci({-5, -1});
    FibonacciMonomial b = make_fibonacci({-4, -2});
    CHECK(reflected_lex_compare(a, b) == std::strong_ordering::less);
    CHECK(reflected_lex_compare(b, a) == std::strong_ordering::greater);
    CHECK(reflected_lex_compare(a, a) == std::strong_ordering::equal);
    CHECK_THROWS_AS(reflected_lex_compare(a, make_fibonacci({-3, -1})), std::invalid_argument);

    // Totality on a bigger cell.
    auto cell = enumerate_fibonacci({3, 15, 0});
    for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t k = 0; k < cell.size(); ++k) {
            auto ord = reflected_lex_compare(cell[i], cell[k]);
            if (i < k) CHECK(ord == std::strong_ordering::less);
            if (i == k) CHECK(ord == std::strong_ordering::equal);
            if (i > k) CHECK(ord == std::strong_ordering::greater);
        }
}

TEST_CASE("independence worked cells") {
    IndependenceReport r = independence_check({1, 3, 0});
    CHECK(r.count == 1);
    CHECK(r.rank == 1);
    CHECK(r.triangular);

    r = independence_check({2, 6, 0});
    CHECK(r.count == 2);
    CHECK(r.rank == 2);
    CHECK(r.triangular);

    r = independence_check({0, 0, 0});
    CHECK(r.count == 1);
    CHECK(r.rank == 1);
    CHECK(r.triangular);
}

TEST_CASE("independence and triangularity across cells, both exec modes") {
    for (int j : {0, 1}) {
        for (int n = 0; n <= 3; ++n)
            for (long long m = min_degq(n, j); m <= min_degq(n, j) + 6; ++m) {
                IndependenceReport s = independence_check({n, m, j}, Exec::Serial);
                IndependenceReport p = independence_check({n, m, j}, Exec::Parallel);
                CHECK(s.count == p.count);
                CHECK(s.rank == p.rank);
                CHECK(s.triangular == p.triangular);
                CHECK(s.count == s.rank);
                CHECK(s.triangular);
            }
    }
}

TEST_CASE("spanning checks") {
    CHECK(apply_index_list_on({-1, -1}, vacuum_vector(0)).is_zero());
    CHECK(spanning_check(2, 2, 0));
    CHECK(spanning_check(2, 4, 0));
    for (long long m = 1; m <= 6; ++m) CHECK(spanning_check(1, m, 0));
    for (long long m = 0; m <= 8; ++m)
        for (int n = 0; n <= 3; ++n) CHECK(spanning_check(n, m, 0));
    CHECK(spanning_check(2, 10, 1));
    CHECK(spanning_check(2, 4, -1));
}

TEST_CASE("canonical tail data") {
    CHECK(tail_start(0, 0) == 1);
    CHECK(tail_start(0, 1) == -1);
    CHECK(tail_start(1, 0) == 0);
    CHECK(canonical_head_bound(0, 0) == -2);
    CHECK(canonical_head_bound(0, -1) == 0);
    CHECK(canonical_head_bound(1, 0) == -3);
}

TEST_CASE("semi-infinite enumeration: ground cells") {
    auto v0 = enumerate_semi_infinite(0, 0, 0);
    REQUIRE(v0.size() == 1);
    CHECK(v0[0].tail_charge == 0);
    CHECK(v0[0].head.indices.empty());

    // Weight 1, energy 1: the single monomial is the pure j=1 tail (the
    // head e_-1 over the j=0 tail absorbs into it).
    auto v1 = enumerate_semi_infinite(1, 1, 0);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].tail_charge == 1);
    CHECK(v1[0].head.indices.empty());
}

TEST_CASE("semi-infinite enumeration: deep cell with positive head indices") {
    // Weight 1, energy 7 needs tails j = 0, -1, -2; the j = -2 head uses
    // indices above zero.
    auto v = enumerate_semi_infinite(1, 7, 0);
    REQUIRE(v.size() == 3);
    std::set<std::pair<int, std::vector<int>>> got;
    for (const auto& m : v) got.insert({m.tail_charge, m.head.indices});
    CHECK(got.count({0, {-4}}) == 1);
    CHECK(got.count({-1, {-3, 0}}) == 1);
    CHECK(got.count({-2, {-2, 0, 2}}) == 1);
}

TEST_CASE("semi-infinite images live in the right weight cell") {
    for (int sector : {0, 1})
        for (int w = -2; w <= 2; ++w)
            for (long long d = 0; d <= 7; ++d)
                for (const SemiInfiniteMonomial& mon : enumerate_semi_infinite(w, d, sector)) {
                    FockVector img = semi_infinite_image(mon);
                    CHECK(!img.is_zero());
                    for (const auto& [t, c] : img.terms()) {
                        CHECK(t.charge() == sector);
                        CHECK(t.energy() == d);
                        CHECK(h0_weight(t) == 2 * w + sector);
                    }
                }
}

TEST_CASE("semi-infinite counts match the character multiplicities") {
    for (int sector : {0, 1})
        for (int w = -3; w <= 3; ++w)
            for (long long d = 0; d <= 9; ++d)
                CHECK(Int(enumerate_semi_infinite(w, d, sector).size()) ==
                      semi_infinite_character_coeff(sector, w, d));
}

TEST_CASE("global basis check passes at small truncation") {
    for (int sector : {0, 1}) {
        GlobalBasisReport r = global_basis_check(6, sector);
        CHECK(r.pass);
        for (const CellReport& c : r.cells) {
            CHECK(c.pass);
            CHECK(c.count == c.rank);
            CHECK(c.count == c.kernel_dim);
            CHECK(to_int(c.count) == c.character_coeff);
        }
    }
}

TEST_CASE("global basis check: serial and parallel agree") {
    GlobalBasisReport s = global_basis_check(5, 0, Exec::Serial);
    GlobalBasisReport p = global_basis_check(5, 0, Exec::Parallel);
    REQUIRE(s.cells.size() == p.cells.size());
    CHECK(s.pass == p.pass);
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        CHECK(s.cells[i].count == p.cells[i].count);
        CHECK(s.cells[i].rank == p.cells[i].rank);
        CHECK(s.cells[i].kernel_dim == p.cells[i].kernel_dim);
    }
}

TEST_CASE("cell report json keys") {
    CellReport c;
    c.sector = 0;
    c.weight = 1;
    c.energy = 3;
    c.count = c.rank = c.kernel_dim = 1;
    c.character_coeff = 1;
    c.in_kernel = c.pass = true;
    auto j = c.to_json();
    CHECK(j["sector"] == 0);
    CHECK(j["weight"] == 1);
    CHECK(j["energy"] == 3);
    CHECK(j["character_coeff"] == "1");
}
