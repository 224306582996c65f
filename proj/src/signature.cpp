#include "holant/signature.hpp"

#include <bit>
#include <sstream>

namespace holant {

SymSignature::SymSignature(std::initializer_list<Scalar> e) : entries(e) {
    if (entries.empty()) throw error("symmetric signature needs at least one entry");
    arity = static_cast<int>(entries.size()) - 1;
}

SymSignature::SymSignature(std::vector<Scalar> e) : entries(std::move(e)) {
    if (entries.empty()) throw error("symmetric signature needs at least one entry");
    arity = static_cast<int>(entries.size()) - 1;
}

bool SymSignature::is_zero() const {
    for (const Scalar& x : entries)
        if (!x.is_zero()) return false;
    return true;
}

bool SymSignature::is_real() const {
    for (const Scalar& x : entries)
        if (!x.is_real()) return false;
    return true;
}

SymSignature SymSignature::reversed() const {
    std::vector<Scalar> e(entries.rbegin(), entries.rend());
    return SymSignature(std::move(e));
}

SymSignature SymSignature::scaled(const Scalar& c) const {
    std::vector<Scalar> e = entries;
    for (Scalar& x : e) x *= c;
    return SymSignature(std::move(e));
}

std::string SymSignature::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= arity; ++i) os << (i ? "," : "") << entries[static_cast<size_t>(i)].str();
    os << "]";
    return os.str();
}

DenseSignature::DenseSignature(int k, std::vector<Scalar> t) : arity(k), table(std::move(t)) {
    if (k < 0 || table.size() != (size_t{1} << k))
        throw error("dense signature table size must be 2^arity");
}

const char* ClassTag::name(Kind k) {
    switch (k) {
        case Kind::F1: return "F1";
        case Kind::F2: return "F2";
        case Kind::F3: return "F3";
        case Kind::G1: return "G1";
        case Kind::G2: return "G2";
        case Kind::G3: return "G3";
        case Kind::A_sym: return "A";
        case Kind::P_sym: return "P";
        case Kind::M_std_even: return "M-even";
        case Kind::M_std_odd: return "M-odd";
        case Kind::Vanishing2: return "Vanishing2";
        case Kind::Vanishing3: return "Vanishing3";
        case Kind::Arity_le_2: return "Arity<=2";
        case Kind::Degenerate: return "Degenerate";
    }
    return "?";
}

Scalar binomial(int n, int k) {
    if (k < 0 || k > n) return Scalar(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(Rational(b));
}

DenseSignature from_symmetric(const SymSignature& f) {
    const int k = f.arity;
    std::vector<Scalar> table(size_t{1} << k);
    for (size_t w = 0; w < table.size(); ++w)
        table[w] = f[static_cast<int>(std::popcount(w))];
    return DenseSignature(k, std::move(table));
}

std::optional<SymSignature> symmetric_view(const DenseSignature& d) {
    std::vector<Scalar> e(static_cast<size_t>(d.arity) + 1);
    std::vector<bool> seen(e.size(), false);
    for (size_t w = 0; w < d.size(); ++w) {
        size_t c = static_cast<size_t>(std::popcount(w));
        if (!seen[c]) {
            e[c] = d[w];
            seen[c] = true;
        } else if (e[c] != d[w]) {
            return std::nullopt;
        }
    }
    return SymSignature(std::move(e));
}

std::optional<std::pair<Scalar, SymSignature>> is_degenerate(const SymSignature& f) {
    const int n = f.arity;
    if (f.is_zero()) return std::make_pair(Scalar(0), SymSignature{Scalar(1), Scalar(0)});
    if (n == 0) return std::make_pair(f[0], SymSignature{Scalar(1), Scalar(0)});
    if (n == 1) return std::make_pair(Scalar(1), f);
    if (!f[0].is_zero()) {
        Scalar y = f[1] / f[0];
        Scalar acc = f[0];
        for (int i = 1; i <= n; ++i) {
            acc *= y;
            if (f[i] != acc) return std::nullopt;
        }
        return std::make_pair(f[0], SymSignature{Scalar(1), y});
    }
    // f0 == 0 forces x == 0, so only the top entry may be nonzero
    for (int i = 0; i < n; ++i)
        if (!f[i].is_zero()) return std::nullopt;
    return std::make_pair(f[n], SymSignature{Scalar(0), Scalar(1)});
}

SymSignature pin(const SymSignature& f, int bit, int count) {
    if (count < 0 || count > f.arity) throw error("pin: count exceeds arity");
    const int m = f.arity - count;
    std::vector<Scalar> e(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) e[static_cast<size_t>(i)] = f[bit == 0 ? i : i + count];
    return SymSignature(std::move(e));
}

SymSignature join(const SymSignature& f, const SymSignature& g, int j) {
    if (j < 0 || j > f.arity || j > g.arity) throw error("join: edge count exceeds arity");
    const int np = f.arity - j, nq = g.arity - j;
    const int n = np + nq;
    std::vector<Scalar> e(static_cast<size_t>(n) + 1);
    std::vector<bool> seen(e.size(), false);
    for (int p = 0; p <= np; ++p) {
        for (int q = 0; q <= nq; ++q) {
            Scalar v(0);
            for (int k = 0; k <= j; ++k) v += binomial(j, k) * f[p + k] * g[q + k];
            size_t w = static_cast<size_t>(p + q);
            if (!seen[w]) {
                e[w] = v;
                seen[w] = true;
            } else if (e[w] != v) {
                throw verify_error("join: contraction is not symmetric");
            }
        }
    }
    return SymSignature(std::move(e));
}

SymSignature self_join(const SymSignature& f, int pairs) {
    if (pairs < 0 || 2 * pairs > f.arity) throw error("self_join: too many pairs");
    const int n = f.arity - 2 * pairs;
    std::vector<Scalar> e(static_cast<size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) {
        Scalar v(0);
        for (int k = 0; k <= pairs; ++k) v += binomial(pairs, k) * f[w + 2 * k];
        e[static_cast<size_t>(w)] = v;
    }
    return SymSignature(std::move(e));
}

SymSignature canonicalize(const SymSignature& f) {
    for (const Scalar& x : f.entries)
        if (!x.is_exact()) throw error("canonicalize requires the exact backend");
    for (const Scalar& x : f.entries)
        if (!x.is_zero()) {
            return f.scaled(Scalar(1) / x);
        }
    return f;
}

namespace {

// Kernel direction of rows {(u_k, v_k)}: a vector (r1,r2) != 0 with
// r1*u_k + r2*v_k == 0 for all k, or nullopt if only (0,0) works.
std::optional<std::pair<Scalar, Scalar>> kernel2(const std::vector<std::pair<Scalar, Scalar>>& rows) {
    Scalar r1(1), r2(0);
    bool pinned = false;
    for (const auto& [u, v] : rows) {
        if (u.is_zero() && v.is_zero()) continue;
        if (!pinned) {
            r1 = -v;
            r2 = u;
            if (r1.is_zero() && r2.is_zero()) continue;
            pinned = true;
            continue;
        }
        if (r1 * u + r2 * v != Scalar(0)) return std::nullopt;
    }
    if (!pinned) return std::make_pair(Scalar(1), Scalar(1));
    // canonical scale: first nonzero component = 1
    Scalar s = r1.is_zero() ? r2 : r1;
    return std::make_pair(r1 / s, r2 / s);
}

std::optional<std::pair<Scalar, Scalar>> parity_geometric(const SymSignature& f, int parity) {
    for (int i = 1 - parity; i <= f.arity; i += 2)
        if (!f[i].is_zero()) return std::nullopt;
    std::vector<std::pair<Scalar, Scalar>> rows;
    for (int k = parity + 2; k <= f.arity; k += 2) rows.push_back({f[k - 2], -f[k]});
    return kernel2(rows);
}

}  // namespace

std::optional<std::pair<Scalar, Scalar>> parity_geometric_even(const SymSignature& f) {
    return parity_geometric(f, 0);
}

std::optional<std::pair<Scalar, Scalar>> parity_geometric_odd(const SymSignature& f) {
    return parity_geometric(f, 1);
}

namespace {

const Scalar kI = Scalar::imaginary_unit();

bool fourth_root_of_unity(const Scalar& r) {
    return r == Scalar(1) || r == Scalar(-1) || r == kI || r == -kI;
}

// even entries all alpha, odd entries all beta, with alpha=0, beta=0, or
// beta/alpha a primitive fourth root of unity.
bool alternating_pair_ok(const std::vector<Scalar>& v) {
    for (size_t i = 2; i < v.size(); ++i)
        if (v[i] != v[i - 2]) return false;
    const Scalar& alpha = v[0];
    if (v.size() < 2) return true;
    const Scalar& beta = v[1];
    if (alpha.is_zero() || beta.is_zero()) return true;
    Scalar r = beta / alpha;
    return r == kI || r == -kI;
}

}  // namespace

bool in_F1(const SymSignature& f) {
    if (f.is_zero()) return true;
    const int n = f.arity;
    if (n < 1) return false;
    for (int i = 1; i < n; ++i)
        if (!f[i].is_zero()) return false;
    if (f[0].is_zero() || f[n].is_zero()) return false;
    return fourth_root_of_unity(f[n] / f[0]);
}

bool in_F2(const SymSignature& f) {
    if (f.is_zero()) return true;
    if (f.arity < 1) return false;
    return alternating_pair_ok(f.entries);
}

bool in_F3(const SymSignature& f) {
    if (f.is_zero()) return true;
    if (f.arity < 1) return false;
    std::vector<Scalar> g(f.entries);
    Scalar p(1);
    for (size_t i = 0; i < g.size(); ++i) {
        g[i] /= p;
        p *= kI;
    }
    return alternating_pair_ok(g);
}

bool in_F123(const SymSignature& f) { return in_F1(f) || in_F2(f) || in_F3(f); }

bool in_A_sym(const SymSignature& f) {
    if (in_F123(f)) return true;
    if (auto d = is_degenerate(f)) {
        const Scalar& x = d->second[0];
        const Scalar& y = d->second[1];
        if (x.is_zero() || y.is_zero()) return true;
        return fourth_root_of_unity(y / x);
    }
    return false;
}

bool in_P_sym(const SymSignature& f) {
    const int n = f.arity;
    if (n <= 1) return true;
    if (n == 2 && f[0].is_zero() && f[2].is_zero()) return true;  // disequality scale
    bool middle_zero = true;
    for (int i = 1; i < n; ++i)
        if (!f[i].is_zero()) middle_zero = false;
    if (middle_zero) return true;  // generalized equality [x,0,...,0,y]
    return is_degenerate(f).has_value();
}

namespace {

// a*f_k + b*f_{k+1} - a*f_{k+2} == 0 for all k, the Holant* case-2 shape.
std::optional<std::pair<Scalar, Scalar>> vanishing2_witness(const SymSignature& f) {
    std::vector<std::pair<Scalar, Scalar>> rows;
    for (int k = 0; k + 2 <= f.arity; ++k) rows.push_back({f[k] - f[k + 2], f[k + 1]});
    return kernel2(rows);
}

bool vanishing3(const SymSignature& f) {
    bool rec = true;
    for (int k = 0; k + 2 <= f.arity; ++k)
        if (f[k] + f[k + 2] != Scalar(0)) rec = false;
    if (rec) return true;
    return f.arity == 2 && f[1].is_zero() && f[0] == f[2];
}

}  // namespace

std::vector<ClassTag> class_membership(const SymSignature& f) {
    std::vector<ClassTag> tags;
    auto add = [&tags](ClassTag::Kind k, std::vector<Scalar> params = {}) {
        tags.push_back(ClassTag{k, std::move(params)});
    };
    const int n = f.arity;

    if (in_F1(f)) add(ClassTag::Kind::F1);
    if (in_F2(f)) add(ClassTag::Kind::F2);
    if (in_F3(f)) add(ClassTag::Kind::F3);

    bool middle_zero = true;
    for (int i = 1; i < n; ++i)
        if (!f[i].is_zero()) middle_zero = false;
    if (n >= 1 && middle_zero && !f[0].is_zero() && !f[n].is_zero()) add(ClassTag::Kind::G1);

    bool even_zero = true, odd_zero = true;
    for (int i = 0; i <= n; ++i) {
        if (!f[i].is_zero()) (i % 2 == 0 ? even_zero : odd_zero) = false;
    }
    if (even_zero || odd_zero) add(ClassTag::Kind::G2);

    bool g3 = true;
    for (int k = 0; k + 2 <= n; ++k)
        if (f[k] + f[k + 2] != Scalar(0)) g3 = false;
    if (g3) add(ClassTag::Kind::G3);

    if (in_A_sym(f)) add(ClassTag::Kind::A_sym);
    if (in_P_sym(f)) add(ClassTag::Kind::P_sym);

    if (auto w = parity_geometric_even(f)) add(ClassTag::Kind::M_std_even, {w->first, w->second});
    if (auto w = parity_geometric_odd(f)) add(ClassTag::Kind::M_std_odd, {w->first, w->second});

    if (auto w = vanishing2_witness(f)) {
        add(ClassTag::Kind::Vanishing2, {w->first, w->second});
    } else if (n == 2 && f[0] == -f[2] && !(f[0].is_zero() && f[1].is_zero())) {
        // binary exceptional form [2a*l, b*l, -2a*l]
        add(ClassTag::Kind::Vanishing2, {f[0] / Scalar(2), f[1]});
    }
    if (vanishing3(f)) add(ClassTag::Kind::Vanishing3);

    if (n <= 2) add(ClassTag::Kind::Arity_le_2);
    if (auto d = is_degenerate(f))
        add(ClassTag::Kind::Degenerate, {d->first, d->second[0], d->second[1]});
    return tags;
}

}  // namespace holant
