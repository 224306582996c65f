#pragma once

#include "holant/grid.hpp"

namespace holant {

enum class Variance { Contravariant, Covariant };

Mat2 basis_inverse(const Mat2& t);
bool basis_is_identity(const Mat2& t);

/// Contravariant applies T to every tensor index; covariant applies
/// (T^-1) on the row side, so a transformed grid keeps its Holant value.
DenseSignature transform_dense(const DenseSignature& f, const Mat2& t, Variance variance);

SignatureGrid::Sig transform_signature(const SignatureGrid::Sig& f, const Mat2& t, Variance variance);

/// Replaces each edge by a path of length two through a binary equality;
/// the inserted vertices form the generator side.
SignatureGrid to_bipartite(const SignatureGrid& grid);

/// Generator side contravariant, recognizer side covariant; the Holant
/// value is preserved.
SignatureGrid transform_grid(const SignatureGrid& grid, const Mat2& t);

}  // namespace holant
