#pragma once

#include <string>
#include <vector>

#include "holant/scalar.hpp"

namespace holant {

/// Undirected weighted multigraph with a combinatorial embedding given as
/// a rotation system (cyclic order of incident half-edges per vertex).
/// Half-edge 2e leaves edges[e].u, half-edge 2e+1 leaves edges[e].v.
struct WeightedPlanarGraph {
    struct Edge {
        int u, v;
        Scalar w = Scalar(1);
    };
    std::vector<std::string> ids;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // per vertex: half-edge ids, cyclic

    int n() const { return static_cast<int>(ids.size()); }
    int add_vertex(std::string id = "");
    int add_edge(int u, int v, Scalar w = Scalar(1));
    /// Set rotations from neighbor-order lists; only usable for simple graphs.
    void rotation_from_neighbors(int v, const std::vector<int>& neighbors);
    void validate() const;

    WeightedPlanarGraph induced_without(const std::vector<int>& removed) const;
};

struct GraphFace {
    std::vector<int> half_edges;
    int component;
};

/// Faces per connected component; throws unless every component satisfies
/// V - E + F == 2 (edge-free components count one face).
std::vector<GraphFace> graph_faces(const WeightedPlanarGraph& g);

/// Direction bit per edge: true means oriented u -> v.
struct Orientation {
    std::vector<char> from_u;
};

/// Orientation with an odd number of walk-aligned edges on every face
/// except one designated face per component.
Orientation kasteleyn_orient(const WeightedPlanarGraph& g);

/// Pfaffian via skew elimination; exact over the exact backend. Odd
/// dimension gives 0; non-skew input throws.
Scalar pfaffian(Mat m);

/// Sum over perfect matchings of the product of edge weights, via the
/// Pfaffian of the Kasteleyn-signed adjacency matrix.
Scalar count_weighted_pm(const WeightedPlanarGraph& g);

}  // namespace holant
