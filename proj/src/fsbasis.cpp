#include "fockbasis/fsbasis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fockbasis/exact_matrix.hpp"
#include "fockbasis/qseries.hpp"

namespace fockbasis {

long long FibonacciMonomial::degq() const {
    long long s = 0;
    for (int i : indices) s -= i;
    return s;
}

std::string FibonacciMonomial::str() const {
    if (indices.empty()) return "1";
    std::ostringstream os;
    for (int i : indices) os << "e(" << i << ")";
    return os.str();
}

FibonacciMonomial make_fibonacci(std::vector<int> indices) {
    for (std::size_t t = 1; t < indices.size(); ++t)
        if (indices[t] - indices[t - 1] < 2)
            throw std::invalid_argument("FibonacciMonomial: gaps must be >= 2");
    return FibonacciMonomial{std::move(indices)};
}

long long min_degq(int length, int sector_j) {
    long long n = length;
    return n * n + 2LL * sector_j * n;
}

namespace {

// Chooses -a_last = t ascending, so the output is already sorted ascending
// for reflected_lex_compare.
void enumerate_fib_rec(int remaining, long long sum_left, long long t_min,
                       std::vector<int>& tail_rev, std::vector<FibonacciMonomial>& out) {
    if (remaining == 0) {
        if (sum_left != 0) return;
        FibonacciMonomial m;
        m.indices.reserve(tail_rev.size());
        for (auto it = tail_rev.rbegin(); it != tail_rev.rend(); ++it) m.indices.push_back(-*it);
        out.push_back(std::move(m));
        return;
    }
    long long k = remaining;
    // The remaining k parts are >= t, pairwise gapped by 2:
    // min sum = k*t + k(k-1), so t <= (sum_left - k(k-1)) / k.
    long long t_max_num = sum_left - k * (k - 1);
    if (t_max_num < t_min * k) return;
    long long t_max = t_max_num >= 0 ? t_max_num / k
                                     : -((-t_max_num + k - 1) / k);  // floor
    for (long long t = t_min; t <= t_max; ++t) {
        tail_rev.push_back(static_cast<int>(t));
        enumerate_fib_rec(remaining - 1, sum_left - t, t + 2, tail_rev, out);
        tail_rev.pop_back();
    }
}

}  // namespace

std::vector<FibonacciMonomial> enumerate_fib_bounded(int length, long long neg_sum,
                                                     int max_index) {
    std::vector<FibonacciMonomial> out;
    if (length == 0) {
        if (neg_sum == 0) out.push_back({});
        return out;
    }
    std::vector<int> tail_rev;
    enumerate_fib_rec(length, neg_sum, -static_cast<long long>(max_index), tail_rev, out);
    return out;
}

std::vector<FibonacciMonomial> enumerate_fibonacci(const BidegreeCell& cell) {
    return enumerate_fib_bounded(cell.length, cell.degq, -2 * cell.sector_j - 1);
}

namespace {

void enumerate_parts_rec(int remaining, long long sum_left, long long lo, long long hi,
                         std::vector<int>& parts, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        if (sum_left != 0) return;
        out.push_back(parts);
        return;
    }
    // Weakly decreasing parts in [lo, hi].
    for (long long p = std::min(hi, sum_left - lo * (remaining - 1)); p >= lo; --p) {
        if (p * remaining < sum_left) break;
        parts.push_back(static_cast<int>(p));
        enumerate_parts_rec(remaining - 1, sum_left - p, lo, p, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_unrestricted(int length, long long degq, int j) {
    // Parts t = -index >= 2j+1, weakly decreasing; the returned index lists
    // are weakly increasing.
    std::vector<std::vector<int>> parts_out;
    if (length == 0) {
        if (degq == 0) parts_out.push_back({});
        return parts_out;
    }
    long long lo = 2LL * j + 1;
    long long hi = degq - lo * (length - 1);
    std::vector<int> parts;
    enumerate_parts_rec(length, degq, lo, hi, parts, parts_out);
    for (auto& p : parts_out) {
        for (int& x : p) x = -x;
        std::reverse(p.begin(), p.end());
    }
    std::sort(parts_out.begin(), parts_out.end());
    return parts_out;
}

FockVector apply_index_list_on(const std::vector<int>& indices, const ElementaryVector& vac) {
    FockVector v(vac);
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) v = apply_e(*it, v);
    return v;
}

FockVector apply_monomial_on(const FibonacciMonomial& mon, const ElementaryVector& vac) {
    return apply_index_list_on(mon.indices, vac);
}

FockVector apply_monomial(const FibonacciMonomial& mon, int j) {
    for (int i : mon.indices)
        if (i > -2 * j - 1)
            throw std::invalid_argument("apply_monomial: index violates the sector bound");
    return apply_monomial_on(mon, vacuum_vector(j));
}

ElementaryVector leading_vector(const FibonacciMonomial& mon, int j) {
    ElementaryVector vac = vacuum_vector(j);
    // Largest index acts on the top even index of the vacuum, the next on
    // the even below it, and so on; all evens below even_max are occupied.
    int top_even = vac.sea_start();
    if (((top_even % 2) + 2) % 2 != 0) --top_even;
    for (int k : vac.head_indices())
        if (((k % 2) + 2) % 2 == 0) {
            top_even = std::max(top_even, k);
            break;
        }
    ElementaryVector cur = vac;
    int k = mon.length();
    for (int t = 0; t < k; ++t) {
        int src = top_even - 2 * t;
        int idx = mon.indices[k - 1 - t];
        int target = src - 2 * idx - 1;
        if (!cur.occupied(src) || cur.occupied(target))
            throw std::invalid_argument("leading_vector: move collides (gap condition violated)");
        cur = psi_term(target, psi_star_term(-src, cur).vec).vec;
    }
    return cur;
}

std::strong_ordering reflected_lex_compare(const FibonacciMonomial& a,
                                           const FibonacciMonomial& b) {
    if (a.length() != b.length() || a.degq() != b.degq())
        throw std::invalid_argument("reflected_lex_compare: monomials from different cells");
    for (int t = a.length() - 1; t >= 0; --t) {
        if (a.indices[t] != b.indices[t])
            return a.indices[t] < b.indices[t] ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

IndependenceReport independence_check(const BidegreeCell& cell, Exec exec) {
    IndependenceReport r;
    std::vector<FibonacciMonomial> mons = enumerate_fibonacci(cell);
    r.count = static_cast<long long>(mons.size());
    if (mons.empty()) {
        r.triangular = true;
        return r;
    }
    std::vector<FockVector> images(mons.size());
    for_each_index(mons.size(), exec,
                   [&](std::size_t i) { images[i] = apply_monomial(mons[i], cell.sector_j); });
    std::vector<ElementaryVector> basis = support_union(images);
    r.rank = rank_fraction_free(matrix_from_vectors(images, basis), exec);

    std::vector<ElementaryVector> leads(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) leads[i] = leading_vector(mons[i], cell.sector_j);
    std::set<ElementaryVector> distinct(leads.begin(), leads.end());
    bool tri = distinct.size() == leads.size();
    // Monomials come sorted ascending by reflected-lex; Q(mon) may occur
    // only in expansions of monomials >= mon, so the pivot matrix must be
    // lower triangular with nonzero diagonal.
    for (std::size_t r_i = 0; tri && r_i < mons.size(); ++r_i) {
        if (images[r_i].coefficient_of(leads[r_i]) == 0) tri = false;
        for (std::size_t c_i = r_i + 1; tri && c_i < mons.size(); ++c_i)
            if (images[r_i].coefficient_of(leads[c_i]) != 0) tri = false;
    }
    r.triangular = tri;
    return r;
}

bool spanning_check(int length, long long degq, int j, Exec exec) {
    std::vector<std::vector<int>> all = enumerate_unrestricted(length, degq, j);
    ElementaryVector vac = vacuum_vector(j);
    std::vector<FockVector> all_images(all.size());
    for_each_index(all.size(), exec,
                   [&](std::size_t i) { all_images[i] = apply_index_list_on(all[i], vac); });
    std::vector<ElementaryVector> basis = support_union(all_images);
    long long rank_all = rank_fraction_free(matrix_from_vectors(all_images, basis), exec);

    BidegreeCell cell{length, degq, j};
    std::vector<FibonacciMonomial> fib = enumerate_fibonacci(cell);
    std::vector<FockVector> fib_images(fib.size());
    for_each_index(fib.size(), exec,
                   [&](std::size_t i) { fib_images[i] = apply_monomial(fib[i], j); });
    long long rank_fib = rank_fraction_free(matrix_from_vectors(fib_images, basis), exec);
    return rank_all == rank_fib;
}

std::string SemiInfiniteMonomial::str() const {
    std::ostringstream os;
    os << head.str() << "*tail(" << (sector == 0 ? "F0" : "F1") << ',' << tail_charge << ')';
    return os.str();
}

int tail_start(int sector, int j) { return -2 * j + 1 - sector; }

int canonical_head_bound(int sector, int j) {
    // One below the gap bound: an index at tail_start - 2 would extend the
    // tail, contradicting maximal absorption.
    return sector == 0 ? -2 * j - 2 : -2 * j - 3;
}

namespace {

// Minimal head energy sum(-2i-1) of h indices <= bound with gaps >= 2.
long long min_head_energy(int h, int bound) {
    long long b = bound;
    return h * (-2 * b - 1) + 2LL * h * (h - 1);
}

}  // namespace

std::vector<SemiInfiniteMonomial> enumerate_semi_infinite(int weight, long long energy,
                                                          int sector) {
    if (sector != 0 && sector != 1) throw std::invalid_argument("sector must be 0 or 1");
    std::vector<SemiInfiniteMonomial> out;
    for (int j = weight;; --j) {
        int h = weight - j;
        int bound = canonical_head_bound(sector, j);
        long long base = sector_vacuum_energy(sector, j);
        // The minimal reachable energy is linear decreasing in j, so the
        // first excess ends the scan.
        if (base + min_head_energy(h, bound) > energy) break;
        long long rest = energy - base;
        // sum(-2i-1) = rest  <=>  sum(-i) = (rest + h) / 2.
        if (((rest + h) % 2 + 2) % 2 != 0) continue;
        long long neg_sum = (rest + h) / 2;
        for (FibonacciMonomial& head : enumerate_fib_bounded(h, neg_sum, bound))
            out.push_back(SemiInfiniteMonomial{sector, j, std::move(head)});
    }
    return out;
}

FockVector semi_infinite_image(const SemiInfiniteMonomial& mon) {
    return apply_monomial_on(mon.head, sector_vacuum(mon.sector, mon.tail_charge));
}

Int semi_infinite_character_coeff(int sector, int weight, long long energy) {
    long long base = sector_vacuum_energy(sector, weight);
    long long excess = energy - base;
    if (excess < 0 || excess % 2 != 0) return Int(0);
    return partition_count(excess / 2);
}

nlohmann::ordered_json CellReport::to_json() const {
    return nlohmann::ordered_json{{"sector", sector},
                                  {"weight", weight},
                                  {"energy", energy},
                                  {"count", count},
                                  {"rank", rank},
                                  {"kernel_dim", kernel_dim},
                                  {"character_coeff", to_string(character_coeff)},
                                  {"in_kernel", in_kernel},
                                  {"pass", pass}};
}

namespace {

// Basis of the (charge = sector, h0 = 2*weight + sector, energy) cell.
std::vector<ElementaryVector> weight_cell_basis(int sector, int weight, long long energy) {
    std::vector<ElementaryVector> out;
    for (ElementaryVector& w : enumerate_elementary(sector, energy))
        if (h0_weight(w) == 2 * weight + sector) out.push_back(std::move(w));
    return out;
}

// dim of the joint kernel of Lambda_2, Lambda_4, ... on the cell. Lambda_{2k}
// lowers energy by 2k and is automatically zero past the cell energy, so the
// stack is complete, not truncated.
long long even_lambda_kernel_dim(int sector, int weight, long long energy, Exec exec) {
    std::vector<ElementaryVector> cell = weight_cell_basis(sector, weight, energy);
    if (cell.empty()) return 0;
    // One constraint row per (k, target vector) pair.
    IntMatrix constraints;
    for (int k = 1; 2 * k <= energy; ++k) {
        std::vector<FockVector> images(cell.size());
        for_each_index(cell.size(), exec, [&](std::size_t i) {
            images[i] = apply_lambda(2 * k, FockVector(cell[i]));
        });
        std::vector<ElementaryVector> targets = support_union(images);
        for (const ElementaryVector& t : targets) {
            std::vector<Int> row(cell.size());
            std::vector<Rat> rrow(cell.size());
            for (std::size_t i = 0; i < cell.size(); ++i) rrow[i] = images[i].coefficient_of(t);
            Int l = denominator_lcm(rrow);
            for (std::size_t i = 0; i < cell.size(); ++i) {
                Rat x = rrow[i] * Rat(l);
                x.canonicalize();
                row[i] = x.get_num();
            }
            constraints.push_back(std::move(row));
        }
    }
    long long rank = constraints.empty()
                         ? 0
                         : rank_fraction_free(std::move(constraints), exec);
    return static_cast<long long>(cell.size()) - rank;
}

}  // namespace

GlobalBasisReport global_basis_check(long long max_energy, int sector, Exec exec) {
    GlobalBasisReport report;
    // Weights whose lattice vector fits below max_energy; beyond them every
    // cell is empty on both sides (vacuum energy grows quadratically).
    std::vector<std::pair<int, long long>> cells;
    int w_span = static_cast<int>(max_energy) + 2;
    for (int w = -w_span; w <= w_span; ++w) {
        if (sector_vacuum_energy(sector, w) > max_energy) continue;
        for (long long d = 0; d <= max_energy; ++d) cells.emplace_back(w, d);
    }
    report.cells.resize(cells.size());
    for_each_index(cells.size(), exec, [&](std::size_t ci) {
        auto [w, d] = cells[ci];
        CellReport r;
        r.sector = sector;
        r.weight = w;
        r.energy = d;
        std::vector<SemiInfiniteMonomial> mons = enumerate_semi_infinite(w, d, sector);
        r.count = static_cast<long long>(mons.size());
        std::vector<FockVector> images(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) images[i] = semi_infinite_image(mons[i]);
        r.in_kernel = true;
        for (const FockVector& v : images)
            if (!lambda_even_kernel_check(v, static_cast<int>(d / 2))) r.in_kernel = false;
        if (images.empty()) {
            r.rank = 0;
        } else {
            std::vector<ElementaryVector> basis = support_union(images);
            r.rank = rank_fraction_free(matrix_from_vectors(images, basis), Exec::Serial);
        }
        r.kernel_dim = even_lambda_kernel_dim(sector, w, d, Exec::Serial);
        r.character_coeff = semi_infinite_character_coeff(sector, w, d);
        r.pass = r.in_kernel && r.count == r.rank && r.count == r.kernel_dim &&
                 to_int(r.count) == r.character_coeff;
        report.cells[ci] = std::move(r);
    });
    report.pass = true;
    for (const CellReport& r : report.cells)
        if (!r.pass) report.pass = false;
    return report;
}

}  // namespace fockbasis
