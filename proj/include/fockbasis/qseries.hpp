#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockbasis/bigint.hpp"

#include "json.hpp"

namespace fockbasis {

// Polynomial in q with exact integer coefficients, ascending powers,
// trailing zeros trimmed.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(Int constant);
    explicit QPolynomial(std::vector<Int> coeffs);

    static QPolynomial one() { return QPolynomial(Int(1)); }
    static QPolynomial monomial(long long power, Int coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    Int coeff(long long power) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    QPolynomial shifted(long long power) const;        // * q^power
    QPolynomial truncated(long long q_max) const;      // drop powers > q_max
    bool operator==(const QPolynomial&) const = default;

    const std::vector<Int>& coeffs() const { return c_; }
    std::string str() const;  // ascending q-powers

private:
    void trim();
    std::vector<Int> c_;
};

inline constexpr int kPochhammerInf = -1;

// Truncation of 1 / ((1-q)(1-q^2)...(1-q^n)); n == kPochhammerInf means
// (q)_inf, where factors beyond q_max are 1 + O(q^{q_max+1}).
QPolynomial pochhammer_inv(int n, long long q_max);

// Gaussian binomial [a over b]_q via the q-Pascal recurrence
// [a b] = [a-1 b-1] + q^b [a-1 b]; stays in integer arithmetic, degree
// b(a-b). Zero polynomial unless 0 <= b <= a.
QPolynomial gaussian_binomial(int a, int b);

// Number of partitions of n (independent DP oracle; counts by largest part).
Int partition_count(long long n);

// Partitions of n into m distinct parts, each <= N-1, adjacent parts
// differing by >= 2; exhaustive enumeration. The brute-force oracle behind
// every [DERIVED] combinatorial value of the q-series layer.
long long restricted_partition_count(long long n, int m, int N);

// Truncated formal series in z and q with integer coefficients. The window
// (z_min..z_max, q <= q_max) is value-level data: coefficients outside it
// are unknown, not zero, and arithmetic narrows to the intersection.
class BivariateSeries {
public:
    BivariateSeries(int z_min, int z_max, long long q_max);

    int z_min() const { return z_min_; }
    int z_max() const { return z_max_; }
    long long q_max() const { return q_max_; }

    void set(int zp, long long qp, Int coeff);  // throws outside the window
    void add(int zp, long long qp, const Int& coeff);
    Int coeff(int zp, long long qp) const;      // throws outside the window
    QPolynomial z_row(int zp) const;

    BivariateSeries& operator+=(const BivariateSeries& o);  // window intersection
    BivariateSeries& operator-=(const BivariateSeries& o);

    // Equality of all coefficients on the intersection of the windows.
    bool agrees_with(const BivariateSeries& o) const;

    const std::map<std::pair<int, long long>, Int>& coeffs() const { return c_; }

    std::string csv() const;  // "z_power,q_power,coeff" rows
    nlohmann::ordered_json to_json() const;

private:
    void narrow(const BivariateSeries& o);
    int z_min_, z_max_;
    long long q_max_;
    std::map<std::pair<int, long long>, Int> c_;
};

// ch L_(0,1) = sum_{n in Z} z^n q^{n^2} / (q)_inf, truncated.
BivariateSeries ch_L01(long long q_max, int z_min, int z_max);

// ch W_j = sum_{n >= j} z^n q^{n^2} / (q)_{n-j}; j = 0 is the basic
// subspace character sum_{n>=0} z^n q^{n^2}/(q)_n.
BivariateSeries ch_W(int j, long long q_max, int z_min, int z_max);

// ch of the full Fock space, sum_m z^m q^{m(m+1)/2} / (q)_inf.
BivariateSeries ch_F(long long q_max, int z_min, int z_max);

// Finds m* such that ch_W(m) agrees with ch_L01 on the whole declared
// window for every m <= m* (the m -> -infinity limit at finite truncation).
struct StabilizationResult {
    bool ok = false;
    int witness_m = 0;
};
StabilizationResult limit_stabilization_check(long long q_max, int z_min, int z_max);

// sum_m z^m q^{m^2} [N-m over m]_q == sum_{n,m} rpc(n,m,N) z^m q^n,
// coefficientwise up to q_max (exact: both sides are polynomials).
bool appendixA_identity_check(int N, long long q_max);

}  // namespace fockbasis
