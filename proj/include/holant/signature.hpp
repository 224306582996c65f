#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holant/scalar.hpp"

namespace holant {

/// Symmetric signature [f0..fn]; entry i is the value on inputs of
/// Hamming weight i.
struct SymSignature {
    int arity = 0;
    std::vector<Scalar> entries;  // arity+1 values

    SymSignature() : entries{Scalar(0)} {}
    SymSignature(std::initializer_list<Scalar> e);
    explicit SymSignature(std::vector<Scalar> e);

    const Scalar& operator[](int i) const { return entries[static_cast<size_t>(i)]; }
    Scalar& operator[](int i) { return entries[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_real() const;
    SymSignature reversed() const;
    SymSignature scaled(const Scalar& c) const;
    std::string str() const;

    friend bool operator==(const SymSignature& a, const SymSignature& b) {
        if (a.arity != b.arity) return false;
        for (int i = 0; i <= a.arity; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
};

/// Full truth table; index bits read with variable 1 as most significant.
struct DenseSignature {
    int arity = 0;
    std::vector<Scalar> table;  // 2^arity values

    DenseSignature() : table{Scalar(0)} {}
    DenseSignature(int k, std::vector<Scalar> t);

    size_t size() const { return table.size(); }
    const Scalar& operator[](size_t w) const { return table[w]; }
    Scalar& operator[](size_t w) { return table[w]; }

    friend bool operator==(const DenseSignature& a, const DenseSignature& b) {
        if (a.arity != b.arity) return false;
        for (size_t w = 0; w < a.table.size(); ++w)
            if (a.table[w] != b.table[w]) return false;
        return true;
    }
};

struct ClassTag {
    enum class Kind {
        F1,
        F2,
        F3,
        G1,
        G2,
        G3,
        A_sym,
        P_sym,
        M_std_even,
        M_std_odd,
        Vanishing2,
        Vanishing3,
        Arity_le_2,
        Degenerate
    };
    Kind kind;
    std::vector<Scalar> params;  // witness payload, meaning depends on kind

    static const char* name(Kind k);
};

Scalar binomial(int n, int k);

DenseSignature from_symmetric(const SymSignature& f);

/// Inverse of from_symmetric when the table is constant on Hamming-weight
/// classes.
std::optional<SymSignature> symmetric_view(const DenseSignature& d);

/// Witness (lambda, [x,y]) with f = lambda * [x,y]^{tensor arity}.
/// The zero signature reports (0, [1,0]).
std::optional<std::pair<Scalar, SymSignature>> is_degenerate(const SymSignature& f);

SymSignature pin(const SymSignature& f, int bit, int count);

/// F-gate of f and g joined along j shared edges. Throws verify_error if
/// the contraction is not symmetric (value not a function of total weight).
SymSignature join(const SymSignature& f, const SymSignature& g, int j);

SymSignature self_join(const SymSignature& f, int pairs);

SymSignature canonicalize(const SymSignature& f);

/// (r1, r2), not both zero, with r1*z[k-2] == r2*z[k] over the stated
/// parity class; nullopt when the parity condition or the relation fails.
std::optional<std::pair<Scalar, Scalar>> parity_geometric_even(const SymSignature& f);
std::optional<std::pair<Scalar, Scalar>> parity_geometric_odd(const SymSignature& f);

bool in_F1(const SymSignature& f);
bool in_F2(const SymSignature& f);
bool in_F3(const SymSignature& f);
bool in_F123(const SymSignature& f);

/// Symmetric membership in the affine class: F1/F2/F3 plus tensor powers
/// of affine unaries.
bool in_A_sym(const SymSignature& f);

/// Symmetric membership in the product class: arity <= 1, [0,1,0],
/// generalized equalities [x,0,...,0,y], and degenerate signatures.
bool in_P_sym(const SymSignature& f);

std::vector<ClassTag> class_membership(const SymSignature& f);

}  // namespace holant
