#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fockbasis/fock.hpp"
#include "fockbasis/qseries.hpp"

using namespace fockbasis;

namespace {

// Brute-force partition counters used as oracles against the generating
// function machinery.
long long count_parts_bounded(long long n, long long max_part) {
    if (n == 0) return 1;
    if (max_part <= 0) return 0;
    std::vector<std::vector<int>> out;
    std::vector<int> scratch;
    partitions_into(n, max_part, scratch, out);
    return static_cast<long long>(out.size());
}

long long count_in_box(long long n, int rows, int cols) {
    if (n == 0) return 1;
    std::vector<std::vector<int>> out;
    std::vector<int> scratch;
    partitions_into(n, cols, scratch, out);
    long long c = 0;
    for (const auto& p : out)
        if (static_cast<int>(p.size()) <= rows) ++c;
    return c;
}

}  // namespace

TEST_CASE("pochhammer_inv") {
    CHECK(pochhammer_inv(0, 6) == QPolynomial::one());
    CHECK(pochhammer_inv(1, 4) == QPolynomial({Int(1), Int(1), Int(1), Int(1), Int(1)}));
    CHECK(pochhammer_inv(2, 4) == QPolynomial({Int(1), Int(1), Int(2), Int(2), Int(3)}));
    for (int n = 0; n <= 5; ++n) {
        QPolynomial p = pochhammer_inv(n, 10);
        for (long long d = 0; d <= 10; ++d) CHECK(p.coeff(d) == to_int(count_parts_bounded(d, n)));
    }
    // (q)_inf^{-1} counts all partitions.
    QPolynomial inf = pochhammer_inv(kPochhammerInf, 12);
    for (long long d = 0; d <= 12; ++d) CHECK(inf.coeff(d) == partition_count(d));
}

TEST_CASE("gaussian_binomial") {
    CHECK(gaussian_binomial(7, 0) == QPolynomial::one());
    CHECK(gaussian_binomial(2, 1) == QPolynomial({Int(1), Int(1)}));
    CHECK(gaussian_binomial(4, 2) == QPolynomial({Int(1), Int(1), Int(2), Int(1), Int(1)}));
    CHECK(gaussian_binomial(2, 3).is_zero());

    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b) {
            QPolynomial g = gaussian_binomial(a, b);
            CHECK(g.degree() <= static_cast<long long>(b) * (a - b));
            CHECK(g == gaussian_binomial(a, a - b));
            for (long long k = 0; k <= g.degree(); ++k)
                CHECK(g.coeff(k) == to_int(count_in_box(k, b, a - b)));
        }
}

TEST_CASE("gaussian binomial coefficients stabilize to 1/(q)_m") {
    for (int m = 0; m <= 5; ++m) {
        QPolynomial target = pochhammer_inv(m, 10);
        for (int N : {2 * m + 11, 2 * m + 13, 2 * m + 20})
            CHECK(gaussian_binomial(N - m, m).truncated(10) == target);
    }
}

TEST_CASE("ch_L01 coefficients") {
    BivariateSeries s = ch_L01(8, -2, 2);
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(1, 1) == 1);
    CHECK(s.coeff(0, 2) == 2);  // p(2)
    CHECK(s.coeff(1, 0) == 0);
    CHECK(s.coeff(-1, 1) == 1);
    for (long long d = 0; d <= 8; ++d) {
        CHECK(s.coeff(2, d) == (d >= 4 ? partition_count(d - 4) : Int(0)));
        CHECK(s.coeff(-2, d) == s.coeff(2, d));  // z <-> 1/z symmetry
    }
}

TEST_CASE("ch_W coefficients") {
    BivariateSeries w0 = ch_W(0, 8, 0, 3);
    CHECK(w0.coeff(2, 5) == 1);
    CHECK(w0.coeff(2, 6) == 2);
    for (long long d = 1; d <= 8; ++d) CHECK(w0.coeff(0, d) == 0);
    CHECK(w0.coeff(0, 0) == 1);

    // Embeddings W_{j} into W_{j-1} at character level.
    for (int j = -1; j <= 2; ++j) {
        BivariateSeries a = ch_W(j, 8, -2, 3);
        BivariateSeries b = ch_W(j - 1, 8, -2, 3);
        for (int zp = -2; zp <= 3; ++zp)
            for (long long d = 0; d <= 8; ++d) CHECK(a.coeff(zp, d) <= b.coeff(zp, d));
    }
}

TEST_CASE("ch_F rows") {
    BivariateSeries f = ch_F(10, -3, 3);
    for (long long d = 0; d <= 10; ++d) CHECK(f.coeff(0, d) == partition_count(d));
    CHECK(f.coeff(1, 0) == 0);
    CHECK(f.coeff(1, 1) == 1);
    CHECK(f.coeff(-1, 0) == 1);  // m(m+1)/2 = 0 at m = -1
}

TEST_CASE("ch_F matches the elementary-vector enumeration") {
    BivariateSeries f = ch_F(9, -3, 3);
    for (int m = -3; m <= 3; ++m)
        for (long long d = 0; d <= 9; ++d)
            CHECK(f.coeff(m, d) == Int(enumerate_elementary(m, d).size()));
}

TEST_CASE("limit stabilization of ch_W towards ch_L01") {
    auto r = limit_stabilization_check(6, -2, 2);
    CHECK(r.ok);
    BivariateSeries target = ch_L01(6, -2, 2);
    CHECK(ch_W(r.witness_m, 6, -2, 2).agrees_with(target));
    CHECK(ch_W(r.witness_m - 1, 6, -2, 2).agrees_with(target));
    CHECK(ch_W(r.witness_m - 3, 6, -2, 2).agrees_with(target));

    CHECK(limit_stabilization_check(0, 0, 0).ok);
    CHECK(limit_stabilization_check(3, 0, 0).ok);
}

TEST_CASE("restricted partition counts") {
    CHECK(restricted_partition_count(4, 2, 5) == 1);  // 3+1
    CHECK(restricted_partition_count(0, 0, 9) == 1);
    CHECK(restricted_partition_count(6, 2, 6) == 2);  // 5+1, 4+2
    CHECK(restricted_partition_count(2, 2, 9) == 0);  // needs gap >= 2
}

TEST_CASE("appendix identity") {
    CHECK(appendixA_identity_check(1, 4));
    CHECK(appendixA_identity_check(3, 9));
    CHECK(appendixA_identity_check(6, 16));
    CHECK(appendixA_identity_check(12, 40));
}

TEST_CASE("appendix identity N=3 by hand: 1 + z(q + q^2)") {
    QPolynomial m1 = gaussian_binomial(2, 1).shifted(1);
    CHECK(m1 == QPolynomial({Int(0), Int(1), Int(1)}));
    CHECK(restricted_partition_count(1, 1, 3) == 1);
    CHECK(restricted_partition_count(2, 1, 3) == 1);
    CHECK(restricted_partition_count(3, 1, 3) == 0);
}

TEST_CASE("series windows narrow under arithmetic") {
    BivariateSeries a = ch_L01(8, -2, 2);
    BivariateSeries b = ch_L01(5, -1, 3);
    a -= b;
    CHECK(a.z_min() == -1);
    CHECK(a.z_max() == 2);
    CHECK(a.q_max() == 5);
    for (int zp = -1; zp <= 2; ++zp)
        for (long long d = 0; d <= 5; ++d) CHECK(a.coeff(zp, d) == 0);
    CHECK_THROWS_AS(a.coeff(-2, 0), std::out_of_range);
}

TEST_CASE("csv and json emission") {
    BivariateSeries s(0, 1, 2);
    s.set(0, 0, Int(1));
    s.set(1, 2, Int(-3));
    CHECK(s.csv() == "z_power,q_power,coeff\n0,0,1\n1,2,-3\n");
    auto j = s.to_json();
    CHECK(j["coeffs"].size() == 2);
}
