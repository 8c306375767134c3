#include "fockbasis/qseries.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fockbasis {

QPolynomial::QPolynomial(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(long long power, Int coeff) {
    QPolynomial p;
    if (coeff != 0) {
        p.c_.assign(power + 1, Int(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int QPolynomial::coeff(long long power) const {
    if (power < 0 || power >= static_cast<long long>(c_.size())) return Int(0);
    return c_[power];
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(long long power) const {
    if (is_zero()) return {};
    std::vector<Int> c(c_.size() + power, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + power] = c_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::truncated(long long q_max) const {
    if (q_max < 0) return {};
    std::vector<Int> c(c_.begin(), c_.begin() + std::min<long long>(c_.size(), q_max + 1));
    return QPolynomial(std::move(c));
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_string(c_[i]);
        if (i >= 1) os << "*q^" << i;
        first = false;
    }
    return os.str();
}

QPolynomial pochhammer_inv(int n, long long q_max) {
    if (n < 0 && n != kPochhammerInf)
        throw std::invalid_argument("pochhammer_inv: n must be nonnegative or INF");
    long long top = n == kPochhammerInf ? q_max : std::min<long long>(n, q_max);
    std::vector<Int> c(q_max + 1, Int(0));
    c[0] = 1;
    // Multiplying by 1/(1-q^i) truncated is the prefix recurrence
    // c[d] += c[d-i].
    for (long long i = 1; i <= top; ++i)
        for (long long d = i; d <= q_max; ++d) c[d] += c[d - i];
    return QPolynomial(std::move(c));
}

QPolynomial gaussian_binomial(int a, int b) {
    if (b < 0 || b > a) return {};
    if (b == 0 || b == a) return QPolynomial::one();
    // row[k] = [i over k]_q while i runs 1..a.
    std::vector<QPolynomial> row(b + 1);
    row[0] = QPolynomial::one();
    for (int i = 1; i <= a; ++i) {
        for (int k = std::min(i, b); k >= 1; --k) {
            QPolynomial t = k == i ? QPolynomial() : row[k].shifted(k);
            row[k] = row[k - 1] + t;
        }
    }
    return row[b];
}

Int partition_count(long long n) {
    if (n < 0) return Int(0);
    // dp[d] = #partitions of d with parts <= current bound.
    std::vector<Int> dp(n + 1, Int(0));
    dp[0] = 1;
    for (long long part = 1; part <= n; ++part)
        for (long long d = part; d <= n; ++d) dp[d] += dp[d - part];
    return dp[n];
}

namespace {

long long rpc_rec(long long n, int m, long long max_part) {
    if (m == 0) return n == 0 ? 1 : 0;
    long long count = 0;
    // Largest part first; the remaining m-1 parts are <= part - 2 with the
    // same gap condition, so they sum to at least (m-1)^2 and at most
    // (m-1)(part-m).
    for (long long part = max_part; part >= 1; --part) {
        long long rest = n - part;
        if (rest < 0) continue;
        long long k = m - 1;
        if (rest < k * k) continue;
        if (rest > k * (part - m)) break;  // shrinks as part shrinks
        count += rpc_rec(rest, m - 1, part - 2);
    }
    return count;
}

}  // namespace

long long restricted_partition_count(long long n, int m, int N) {
    if (m < 0) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    if (N <= 1) return 0;
    return rpc_rec(n, m, N - 1);
}

BivariateSeries::BivariateSeries(int z_min, int z_max, long long q_max)
    : z_min_(z_min), z_max_(z_max), q_max_(q_max) {
    if (z_min > z_max || q_max < 0)
        throw std::invalid_argument("BivariateSeries: empty window");
}

void BivariateSeries::set(int zp, long long qp, Int coeff) {
    if (zp < z_min_ || zp > z_max_ || qp < 0 || qp > q_max_)
        throw std::out_of_range("BivariateSeries::set outside declared window");
    if (coeff == 0)
        c_.erase({zp, qp});
    else
        c_[{zp, qp}] = std::move(coeff);
}

void BivariateSeries::add(int zp, long long qp, const Int& coeff) {
    set(zp, qp, this->coeff(zp, qp) + coeff);
}

Int BivariateSeries::coeff(int zp, long long qp) const {
    if (zp < z_min_ || zp > z_max_ || qp < 0 || qp > q_max_)
        throw std::out_of_range("BivariateSeries::coeff outside declared window");
    auto it = c_.find({zp, qp});
    return it == c_.end() ? Int(0) : it->second;
}

QPolynomial BivariateSeries::z_row(int zp) const {
    std::vector<Int> c(q_max_ + 1, Int(0));
    for (long long q = 0; q <= q_max_; ++q) c[q] = coeff(zp, q);
    return QPolynomial(std::move(c));
}

void BivariateSeries::narrow(const BivariateSeries& o) {
    int zl = std::max(z_min_, o.z_min_);
    int zh = std::min(z_max_, o.z_max_);
    long long qm = std::min(q_max_, o.q_max_);
    if (zl > zh) throw std::invalid_argument("BivariateSeries: disjoint z windows");
    z_min_ = zl;
    z_max_ = zh;
    q_max_ = qm;
    std::erase_if(c_, [&](const auto& kv) {
        auto [zp, qp] = kv.first;
        return zp < zl || zp > zh || qp > qm;
    });
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    narrow(o);
    for (const auto& [key, v] : o.c_) {
        auto [zp, qp] = key;
        if (zp >= z_min_ && zp <= z_max_ && qp <= q_max_) add(zp, qp, v);
    }
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    narrow(o);
    for (const auto& [key, v] : o.c_) {
        auto [zp, qp] = key;
        if (zp >= z_min_ && zp <= z_max_ && qp <= q_max_) add(zp, qp, -v);
    }
    return *this;
}

bool BivariateSeries::agrees_with(const BivariateSeries& o) const {
    int zl = std::max(z_min_, o.z_min_);
    int zh = std::min(z_max_, o.z_max_);
    long long qm = std::min(q_max_, o.q_max_);
    for (int zp = zl; zp <= zh; ++zp)
        for (long long qp = 0; qp <= qm; ++qp)
            if (coeff(zp, qp) != o.coeff(zp, qp)) return false;
    return true;
}

std::string BivariateSeries::csv() const {
    std::ostringstream os;
    os << "z_power,q_power,coeff\n";
    for (const auto& [key, v] : c_)
        os << key.first << ',' << key.second << ',' << to_string(v) << '\n';
    return os.str();
}

nlohmann::ordered_json BivariateSeries::to_json() const {
    nlohmann::ordered_json j;
    j["z_min"] = z_min_;
    j["z_max"] = z_max_;
    j["q_max"] = q_max_;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, v] : c_)
        entries.push_back({{"z", key.first}, {"q", key.second}, {"coeff", to_string(v)}});
    j["coeffs"] = std::move(entries);
    return j;
}

namespace {

// Shared builder: rows z^n * q^{offset(n)} * 1/(q)_{len(n)}; a nullopt
// length means the row is absent (all-zero).
template <class OffsetFn, class LenFn>
BivariateSeries row_series(long long q_max, int z_min, int z_max, OffsetFn offset, LenFn len) {
    BivariateSeries s(z_min, z_max, q_max);
    for (int n = z_min; n <= z_max; ++n) {
        long long off = offset(n);
        if (off < 0 || off > q_max) continue;
        std::optional<int> l = len(n);
        if (!l) continue;
        QPolynomial row = pochhammer_inv(*l, q_max - off);
        for (long long d = 0; d <= row.degree(); ++d)
            if (row.coeff(d) != 0) s.set(n, off + d, row.coeff(d));
    }
    return s;
}

}  // namespace

BivariateSeries ch_L01(long long q_max, int z_min, int z_max) {
    return row_series(
        q_max, z_min, z_max,
        [](long long n) { return n * n; },
        [](int) -> std::optional<int> { return kPochhammerInf; });
}

BivariateSeries ch_W(int j, long long q_max, int z_min, int z_max) {
    return row_series(
        q_max, z_min, z_max,
        [](long long n) { return n * n; },
        [j](int n) -> std::optional<int> {
            if (n < j) return std::nullopt;
            return n - j;
        });
}

BivariateSeries ch_F(long long q_max, int z_min, int z_max) {
    return row_series(
        q_max, z_min, z_max,
        [](long long m) { return m * (m + 1) / 2; },
        [](int) -> std::optional<int> { return kPochhammerInf; });
}

StabilizationResult limit_stabilization_check(long long q_max, int z_min, int z_max) {
    StabilizationResult r;
    BivariateSeries target = ch_L01(q_max, z_min, z_max);
    // Row n of ch_W(m) matches 1/(q)_inf up to q_max once n - m covers all
    // parts <= q_max - n^2, so this scan always terminates.
    int lo = z_min - static_cast<int>(q_max) - 1;
    for (int m = z_max; m >= lo; --m) {
        if (ch_W(m, q_max, z_min, z_max).agrees_with(target)) {
            r.ok = true;
            r.witness_m = m;
            return r;
        }
    }
    return r;
}

bool appendixA_identity_check(int N, long long q_max) {
    if (N < 1) return false;
    for (int m = 0; 2 * m <= N; ++m) {
        QPolynomial lhs = gaussian_binomial(N - m, m).shifted(static_cast<long long>(m) * m);
        lhs = lhs.truncated(q_max);
        std::vector<Int> rhs(q_max + 1, Int(0));
        for (long long n = 0; n <= q_max; ++n)
            rhs[n] = to_int(restricted_partition_count(n, m, N));
        if (lhs != QPolynomial(std::move(rhs))) return false;
    }
    // z-degrees above [N/2] carry no monomials at all.
    for (long long n = 0; n <= q_max; ++n)
        if (restricted_partition_count(n, N / 2 + 1, N) != 0) return false;
    return true;
}

}  // namespace fockbasis
