#include "fockbasis/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockbasis {

ElementaryVector::ElementaryVector(int charge, std::vector<int> partition)
    : charge_(charge), partition_(std::move(partition)) {
    for (std::size_t i = 0; i < partition_.size(); ++i) {
        if (partition_[i] <= 0)
            throw std::invalid_argument("ElementaryVector: partition parts must be positive");
        if (i > 0 && partition_[i] > partition_[i - 1])
            throw std::invalid_argument("ElementaryVector: partition must be weakly decreasing");
    }
}

long long ElementaryVector::energy() const {
    long long m = charge_;
    long long e = m * (m + 1) / 2;
    for (int p : partition_) e += p;
    return e;
}

int ElementaryVector::index_at(int i) const {
    int lam = i < head_size() ? partition_[i] : 0;
    return charge_ - i + lam;
}

std::vector<int> ElementaryVector::head_indices() const {
    std::vector<int> h(partition_.size());
    for (int i = 0; i < head_size(); ++i) h[i] = charge_ - i + partition_[i];
    return h;
}

bool ElementaryVector::occupied(int index) const {
    if (index <= sea_start()) return true;
    // Head indices are strictly decreasing in i.
    for (int i = 0; i < head_size(); ++i) {
        int k = charge_ - i + partition_[i];
        if (k == index) return true;
        if (k < index) return false;
    }
    return false;
}

std::string ElementaryVector::str() const {
    std::ostringstream os;
    os << '(' << charge_ << "; ";
    if (partition_.empty()) {
        os << "-";
    } else {
        for (std::size_t i = 0; i < partition_.size(); ++i) {
            if (i) os << ',';
            os << partition_[i];
        }
    }
    os << ')';
    return os.str();
}

namespace {

// Canonical vector from a strictly decreasing full head above `sea_start`.
ElementaryVector from_sorted_head(const std::vector<int>& head_desc, int sea_start) {
    int charge = sea_start + static_cast<int>(head_desc.size());
    std::vector<int> lam;
    lam.reserve(head_desc.size());
    for (std::size_t i = 0; i < head_desc.size(); ++i) {
        int part = head_desc[i] - charge + static_cast<int>(i);
        lam.push_back(part);
    }
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return ElementaryVector(charge, std::move(lam));
}

}  // namespace

NormalizeResult normalize(const std::vector<int>& head, int sea_start) {
    NormalizeResult r;
    for (int x : head)
        if (x <= sea_start)
            throw std::invalid_argument("normalize: head index duplicates a sea index");
    // Sign = parity of the permutation sorting the presented order into
    // strictly decreasing order = parity of #inversions.
    long long inversions = 0;
    for (std::size_t i = 0; i < head.size(); ++i)
        for (std::size_t j = i + 1; j < head.size(); ++j) {
            if (head[i] == head[j]) {
                r.zero = true;
                return r;
            }
            if (head[i] < head[j]) ++inversions;
        }
    r.sign = inversions % 2 == 0 ? 1 : -1;
    std::vector<int> sorted = head;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    r.vec = from_sorted_head(sorted, sea_start);
    return r;
}

FockVector::FockVector(const ElementaryVector& w, const Rat& c) {
    add_term(w, c);
}

void FockVector::add_term(const ElementaryVector& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat FockVector::coefficient_of(const ElementaryVector& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << to_string(c) << "*" << w.str();
        first = false;
    }
    return os.str();
}

TermResult psi_term(int i, const ElementaryVector& w) {
    TermResult r;
    if (w.occupied(i)) return r;  // psi ^ psi = 0
    // i > sea_start here, so its sorted position is its position within the
    // head alone.
    std::vector<int> head = w.head_indices();
    int p = 0;
    while (p < static_cast<int>(head.size()) && head[p] > i) ++p;
    head.insert(head.begin() + p, i);
    NormalizeResult n = normalize(head, w.sea_start());
    r.sign = (p % 2 == 0 ? 1 : -1) * n.sign;  // n.sign == 1: head is sorted
    r.vec = n.vec;
    return r;
}

TermResult psi_star_term(int i, const ElementaryVector& w) {
    TermResult r;
    int target = -i;  // psi_star(i) removes psi_{-i}
    if (!w.occupied(target)) return r;
    std::vector<int> head = w.head_indices();
    int sea = w.sea_start();
    if (target <= sea) {
        // Removing a sea index: promote the slice (target, sea] into the
        // head so the representation stays (head, lower sea).
        for (int x = sea; x > target; --x) head.push_back(x);
        sea = target - 1;
    } else {
        auto it = std::find(head.begin(), head.end(), target);
        head.erase(it);
    }
    // Position of `target` in the original full decreasing sequence.
    int p = 0;
    for (int x : w.head_indices())
        if (x > target) ++p;
    if (target <= w.sea_start()) p = w.head_size() + (w.sea_start() - target);
    NormalizeResult n = normalize(head, sea);
    r.sign = (p % 2 == 0 ? 1 : -1) * n.sign;
    r.vec = n.vec;
    return r;
}

namespace {

template <TermResult (*Op)(int, const ElementaryVector&)>
FockVector apply_clifford(int i, const FockVector& v) {
    FockVector out;
    for (const auto& [w, c] : v.terms()) {
        TermResult t = Op(i, w);
        if (t.sign != 0) out.add_term(t.vec, c * t.sign);
    }
    return out;
}

}  // namespace

FockVector psi(int i, const FockVector& v) { return apply_clifford<psi_term>(i, v); }
FockVector psi_star(int i, const FockVector& v) { return apply_clifford<psi_star_term>(i, v); }

void partitions_into(long long n, long long max_part,
                     std::vector<int>& scratch,
                     std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(scratch);
        return;
    }
    for (long long p = std::min<long long>(n, max_part); p >= 1; --p) {
        scratch.push_back(static_cast<int>(p));
        partitions_into(n - p, p, scratch, out);
        scratch.pop_back();
    }
}

std::vector<ElementaryVector> enumerate_elementary(int charge, long long energy) {
    long long m = charge;
    long long n = energy - m * (m + 1) / 2;
    std::vector<ElementaryVector> out;
    if (n < 0) return out;
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    partitions_into(n, n == 0 ? 1 : n, scratch, parts);
    out.reserve(parts.size());
    for (auto& lam : parts) out.emplace_back(charge, std::move(lam));
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::ordered_json to_json(const ElementaryVector& w) {
    return nlohmann::ordered_json{{"charge", w.charge()}, {"partition", w.partition()}};
}

nlohmann::ordered_json to_json(const FockVector& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [w, c] : v.terms())
        arr.push_back(nlohmann::ordered_json{{"term", to_json(w)}, {"coeff", to_string(c)}});
    return arr;
}

}  // namespace fockbasis
