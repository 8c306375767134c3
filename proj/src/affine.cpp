#include "fockbasis/affine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockbasis {

namespace {

int floordiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr int kAnyParity = -1;

// Sum over single-index moves src -> src + offset on one wedge: src must
// be occupied (and of the given parity), the target unoccupied. The
// candidate window is exact, never truncated: a target is unoccupied only
// above the sea, so src > sea_start - offset; occupied sources above the
// sea are the head.
FockVector shift_moves(const ElementaryVector& w, int parity, int offset) {
    FockVector out;
    std::vector<int> sources = w.head_indices();
    int sea = w.sea_start();
    for (int s = sea; s > sea - offset; --s) sources.push_back(s);  // empty unless offset > 0
    for (int src : sources) {
        if (parity != kAnyParity && ((src % 2 + 2) % 2) != parity) continue;
        int target = src + offset;
        if (w.occupied(target)) continue;
        TermResult removed = psi_star_term(-src, w);
        TermResult placed = psi_term(target, removed.vec);
        out.add_term(placed.vec, Rat(removed.sign * placed.sign));
    }
    return out;
}

template <class PerTerm>
FockVector apply_per_term(const FockVector& v, PerTerm&& fn) {
    FockVector out;
    for (const auto& [w, c] : v.terms()) {
        FockVector part = fn(w);
        part *= c;
        out += part;
    }
    return out;
}

}  // namespace

MatrixSymbol sym_E(int i, int j) { return {MatrixSymbol::Kind::E, i, j}; }
MatrixSymbol sym_lambda(int j) { return {MatrixSymbol::Kind::Lambda, j, 0}; }
MatrixSymbol sym_e(int k) { return {MatrixSymbol::Kind::e, k, 0}; }
MatrixSymbol sym_f(int k) { return {MatrixSymbol::Kind::f, k, 0}; }
MatrixSymbol sym_h(int k) { return {MatrixSymbol::Kind::h, k, 0}; }
MatrixSymbol sym_K() { return {MatrixSymbol::Kind::K, 0, 0}; }

std::string MatrixSymbol::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::E: os << "E(" << i << ',' << j << ')'; break;
        case Kind::Lambda: os << "Lambda(" << i << ')'; break;
        case Kind::e: os << "e(" << i << ')'; break;
        case Kind::f: os << "f(" << i << ')'; break;
        case Kind::h: os << "h(" << i << ')'; break;
        case Kind::K: os << "K"; break;
    }
    return os.str();
}

FockVector apply_E(int i, int j, const FockVector& v) {
    if (i == j) {
        FockVector out;
        for (const auto& [w, c] : v.terms()) {
            int eig = (w.occupied(i) ? 1 : 0) - (i <= 0 ? 1 : 0);
            if (eig != 0) out.add_term(w, c * eig);
        }
        return out;
    }
    return apply_per_term(v, [&](const ElementaryVector& w) {
        FockVector out;
        if (w.occupied(j) && !w.occupied(i)) {
            TermResult removed = psi_star_term(-j, w);
            TermResult placed = psi_term(i, removed.vec);
            out.add_term(placed.vec, Rat(removed.sign * placed.sign));
        }
        return out;
    });
}

int cocycle(const MatrixSymbol& a, const MatrixSymbol& b) {
    if (a.kind != MatrixSymbol::Kind::E || b.kind != MatrixSymbol::Kind::E)
        throw std::invalid_argument("cocycle: both arguments must be E symbols");
    if (a.j != b.i || a.i != b.j) return 0;
    if (a.i <= 0 && a.j >= 1) return 1;
    if (a.j <= 0 && a.i >= 1) return -1;
    return 0;
}

FockVector apply_lambda(int j, const FockVector& v) {
    if (j == 0) {
        // The normal-ordered diagonal sum telescopes to the charge.
        FockVector out;
        for (const auto& [w, c] : v.terms())
            if (w.charge() != 0) out.add_term(w, c * w.charge());
        return out;
    }
    return apply_per_term(v, [&](const ElementaryVector& w) {
        return shift_moves(w, kAnyParity, -j);  // E_{k,k+j}: source k+j, target k
    });
}

FockVector apply_e(int k, const FockVector& v) {
    return apply_per_term(v, [&](const ElementaryVector& w) {
        return shift_moves(w, 0, -(2 * k + 1));  // even source -> odd target
    });
}

FockVector apply_f(int k, const FockVector& v) {
    return apply_per_term(v, [&](const ElementaryVector& w) {
        return shift_moves(w, 1, 1 - 2 * k);  // odd source -> even target
    });
}

int h0_weight(const ElementaryVector& w) {
    int lo = std::min(w.sea_start(), 0);
    int hi = std::max(w.head_size() > 0 ? w.index_at(0) : w.sea_start(), 0);
    int odd = 0, even = 0;
    for (int a = lo + 1; a <= hi; ++a) {
        int d = (w.occupied(a) ? 1 : 0) - (a <= 0 ? 1 : 0);
        if (d == 0) continue;
        (((a % 2 + 2) % 2) ? odd : even) += d;
    }
    return odd - even;
}

FockVector apply_h(int k, const FockVector& v) {
    if (k == 0) {
        FockVector out;
        for (const auto& [w, c] : v.terms()) {
            int eig = h0_weight(w);
            if (eig != 0) out.add_term(w, c * eig);
        }
        return out;
    }
    return apply_per_term(v, [&](const ElementaryVector& w) {
        FockVector part = shift_moves(w, 1, -2 * k);
        part -= shift_moves(w, 0, -2 * k);
        return part;
    });
}

FockVector apply_mode(const MatrixSymbol& sym, const FockVector& v) {
    using Kind = MatrixSymbol::Kind;
    switch (sym.kind) {
        case Kind::E: return apply_E(sym.i, sym.j, v);
        case Kind::Lambda: return apply_lambda(sym.i, v);
        case Kind::e: return apply_e(sym.i, v);
        case Kind::f: return apply_f(sym.i, v);
        case Kind::h: return apply_h(sym.i, v);
        case Kind::K: return v;  // level one
    }
    return {};
}

namespace {

void add_bracket_term(BracketResult& r, const MatrixSymbol& s, long long c) {
    if (c == 0) return;
    for (auto& [sym, coeff] : r.terms)
        if (sym == s) {
            coeff += c;
            return;
        }
    r.terms.emplace_back(s, c);
}

void prune(BracketResult& r) {
    std::erase_if(r.terms, [](const auto& t) { return t.second == 0; });
}

// The affine sl2 relation table.
BracketResult bracket_sl2(const MatrixSymbol& a, const MatrixSymbol& b) {
    using Kind = MatrixSymbol::Kind;
    BracketResult r;
    int n = a.i, m = b.i;
    if (a.kind == Kind::e && b.kind == Kind::e) return r;
    if (a.kind == Kind::f && b.kind == Kind::f) return r;
    if (a.kind == Kind::e && b.kind == Kind::f) {
        add_bracket_term(r, sym_h(n + m), 1);
        if (n + m == 0) r.central = n;
        return r;
    }
    if (a.kind == Kind::h && b.kind == Kind::e) {
        add_bracket_term(r, sym_e(n + m), 2);
        return r;
    }
    if (a.kind == Kind::h && b.kind == Kind::f) {
        add_bracket_term(r, sym_f(n + m), -2);
        return r;
    }
    if (a.kind == Kind::h && b.kind == Kind::h) {
        if (n + m == 0) r.central = 2LL * n;
        return r;
    }
    // Remaining sl2 pairs by antisymmetry.
    BracketResult s = bracket_sl2(b, a);
    for (auto& [sym, c] : s.terms) add_bracket_term(r, sym, -c);
    r.central = -s.central;
    return r;
}

bool is_sl2(const MatrixSymbol& s) {
    using Kind = MatrixSymbol::Kind;
    return s.kind == Kind::e || s.kind == Kind::f || s.kind == Kind::h;
}

}  // namespace

BracketResult bracket(const MatrixSymbol& a, const MatrixSymbol& b) {
    using Kind = MatrixSymbol::Kind;
    BracketResult r;
    if (a.kind == Kind::K || b.kind == Kind::K) return r;
    if (a.kind == Kind::E && b.kind == Kind::E) {
        // [E_ij, E_mn] = d_{jm} E_in - d_{ni} E_mj + alpha(.,.) c
        if (a.j == b.i) add_bracket_term(r, sym_E(a.i, b.j), 1);
        if (b.j == a.i) add_bracket_term(r, sym_E(b.i, a.j), -1);
        r.central = cocycle(a, b);
        prune(r);
        return r;
    }
    if (a.kind == Kind::Lambda && b.kind == Kind::Lambda) {
        if (a.i + b.i == 0) r.central = a.i;
        return r;
    }
    if (is_sl2(a) && is_sl2(b)) return bracket_sl2(a, b);
    if (a.kind == Kind::Lambda && is_sl2(b)) {
        if (a.i % 2 == 0) return r;  // even Lambda's commute with sl2
        int k = (a.i - 1) / 2;       // Lambda_{2k+1} = e_k + f_{k+1}
        BracketResult re = bracket_sl2(sym_e(k), b);
        BracketResult rf = bracket_sl2(sym_f(k + 1), b);
        for (auto& [sym, c] : re.terms) add_bracket_term(r, sym, c);
        for (auto& [sym, c] : rf.terms) add_bracket_term(r, sym, c);
        r.central = re.central + rf.central;
        prune(r);
        return r;
    }
    if (is_sl2(a) && b.kind == Kind::Lambda) {
        BracketResult s = bracket(b, a);
        for (auto& [sym, c] : s.terms) add_bracket_term(r, sym, -c);
        r.central = -s.central;
        return r;
    }
    throw std::logic_error("bracket: unsupported symbol pair " + a.str() + ", " + b.str());
}

FockVector apply_bracket(const BracketResult& br, const FockVector& v) {
    FockVector out;
    for (const auto& [sym, c] : br.terms) {
        FockVector part = apply_mode(sym, v);
        part *= to_rat(c);
        out += part;
    }
    if (br.central != 0) {
        FockVector central = v;
        central *= to_rat(br.central);
        out += central;
    }
    return out;
}

RelationDiagnostic verify_relation(const MatrixSymbol& a, const MatrixSymbol& b,
                                   const FockVector& v) {
    RelationDiagnostic d;
    d.a = a;
    d.b = b;
    FockVector lhs = apply_mode(a, apply_mode(b, v));
    lhs -= apply_mode(b, apply_mode(a, v));
    lhs -= apply_bracket(bracket(a, b), v);
    d.lhs_minus_rhs = std::move(lhs);
    d.ok = d.lhs_minus_rhs.is_zero();
    return d;
}

nlohmann::ordered_json RelationDiagnostic::to_json(const FockVector& v) const {
    return nlohmann::ordered_json{{"a", a.str()},
                                  {"b", b.str()},
                                  {"vector", fockbasis::to_json(v)},
                                  {"lhs_minus_rhs", fockbasis::to_json(lhs_minus_rhs)}};
}

namespace {

// Largest even occupied index of w (the sea always holds one).
int even_max(const ElementaryVector& w) {
    for (int k : w.head_indices())
        if (((k % 2) + 2) % 2 == 0) return k;
    int s = w.sea_start();
    return ((s % 2) + 2) % 2 == 0 ? s : s - 1;
}

}  // namespace

FockVector esq_mode_sum(int N, const FockVector& v) {
    FockVector out;
    for (const auto& [w, c] : v.terms()) {
        // e_a e_b w == 0 unless both a,b <= K1: e-moves never create even
        // occupied indices above even_max(w) nor odd holes at or below the
        // sea, so each factor needs an even source above sea+2k+2.
        int k1 = floordiv(even_max(w) - w.sea_start() - 2, 2);
        FockVector acc;
        for (int b = N - k1; b <= k1; ++b) {
            FockVector inner = apply_e(b, FockVector(w));
            if (inner.is_zero()) continue;
            acc += apply_e(N - b, inner);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

ElementaryVector vacuum_vector(int j) { return sector_vacuum(0, j); }

ElementaryVector sector_vacuum(int sector, int j) {
    if (sector != 0 && sector != 1) throw std::invalid_argument("sector must be 0 or 1");
    std::vector<int> head;
    int sea;
    if (sector == 0) {
        if (j == 0) return ElementaryVector::vacuum(0);
        if (j > 0) {  // odd ladder 2j-1, 2j-3, ..., -2j+1 over sea -2j
            for (int x = 2 * j - 1; x >= -2 * j + 1; x -= 2) head.push_back(x);
            sea = -2 * j;
        } else {  // even ladder 2n, ..., -2n over sea -2n-1, n = -j
            int n = -j;
            for (int x = 2 * n; x >= -2 * n; x -= 2) head.push_back(x);
            sea = -2 * n - 1;
        }
    } else {
        if (j >= 0) {  // odd ladder 2j+1, ..., -2j+1 over sea -2j
            for (int x = 2 * j + 1; x >= -2 * j + 1; x -= 2) head.push_back(x);
            sea = -2 * j;
        } else {  // even ladder 2n, ..., -2n+2 over sea -2n+1, n = -j
            int n = -j;
            for (int x = 2 * n; x >= -2 * n + 2; x -= 2) head.push_back(x);
            sea = -2 * n + 1;
        }
    }
    NormalizeResult r = normalize(head, sea);
    return r.vec;
}

long long sector_vacuum_energy(int sector, int j) {
    long long jj = j;
    return sector == 0 ? jj * (2 * jj - 1) : 2 * jj * jj + jj + 1;
}

bool lambda_even_kernel_check(const FockVector& v, int k_max) {
    for (int k = 1; k <= k_max; ++k)
        if (!apply_lambda(2 * k, v).is_zero()) return false;
    return true;
}

}  // namespace fockbasis
