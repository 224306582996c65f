#pragma once

#include "holant/fkt.hpp"
#include "holant/grid.hpp"
#include "holant/transform.hpp"

namespace holant {

/// Planar weighted graph with ordered external nodes (degree <= 1,
/// on the outer face). Standard signature entry at external subset S is
/// the weighted perfect-matching count after deleting the nodes in S.
struct Matchgate {
    WeightedPlanarGraph graph;
    std::vector<int> externals;
};

struct RealizabilityWitness {
    enum class Kind { EvenStd, OddStd, Form1, Form2, Form3, No };
    Kind kind = Kind::No;
    // EvenStd/OddStd: {r1, r2}
    // Form1: {lambda, s, t, epsilon}; Form2/Form3: {lambda}
    std::vector<Scalar> params;

    explicit operator bool() const { return kind != Kind::No; }
    static const char* name(Kind k);
};

DenseSignature std_signature_dense(const Matchgate& g);

/// Standard signature as a symmetric signature; throws verify_error if
/// the entries depend on more than the size of the deleted subset.
SymSignature std_signature(const Matchgate& g);

/// Parity plus geometric-progression test of the standard-realizability
/// lemmas. Even witnesses win ties.
RealizabilityWitness is_std_realizable(const SymSignature& f);

/// Fit against the three realizable forms under basis [[1,1],[1,-1]],
/// tried in order Form1, Form2, Form3.
RealizabilityWitness is_realizable_under_H(const SymSignature& f);

/// Regenerates f from a witness (or checks the geometric relation for
/// EvenStd/OddStd); used to validate witnesses.
bool witness_valid(const SymSignature& f, const RealizabilityWitness& w);

/// Arity-2 basis condition: either both single-column conditions hold or
/// the mixed condition does. Columns of T are read as (n | p).
bool is_realizable_under_basis_arity2(const SymSignature& f, const Mat2& t);

struct SynthesizedGate {
    Matchgate gate;
    SymSignature realized;  // the standard signature the gate was built for
};

/// Builds and verifies a matchgate whose standard signature is f; with a
/// basis, the gate realizes (T^-1)^{tensor n} f so that f is the gate's
/// transformed signature. Throws verify_error("unsupported shape") when
/// the template library cannot produce the target.
SynthesizedGate synthesize_matchgate(const SymSignature& f, const Mat2* basis = nullptr);

/// Expands weighted edges into paths of length two carrying [1,0,w]
/// nodes, the normalization used when weights must be unit.
Matchgate expand_edge_weights(const Matchgate& g);

/// Transforms the grid under T (bipartite sides required unless T = I),
/// replaces every vertex by a synthesized matchgate spliced into the
/// embedding, and returns the FKT count. Equals brute_holant exactly.
Scalar holographic_solve(const SignatureGrid& grid, const Mat2& t);

}  // namespace holant
