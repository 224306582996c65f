#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holant/signature.hpp"

namespace holant {

struct PortRef {
    int vertex = -1;
    int port = -1;
    friend bool operator==(const PortRef& a, const PortRef& b) {
        return a.vertex == b.vertex && a.port == b.port;
    }
};

/// Vertices carry signatures, edges are the Boolean variables. A rotation
/// system (cyclic port order per vertex) is the planarity interface.
struct SignatureGrid {
    using Sig = std::variant<SymSignature, DenseSignature>;
    enum class Side { None, Generator, Recognizer };

    struct Vertex {
        std::string id;
        Sig sig;
        Side side = Side::None;
    };
    struct Edge {
        PortRef a, b;
        Scalar weight = Scalar(1);  // used only by matching-based views
    };
    struct Dangling {
        std::string id;
        PortRef at;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Dangling> dangling;
    std::map<int, std::vector<int>> rotation;  // vertex -> cyclic port order

    int add_vertex(std::string id, Sig sig, Side side = Side::None);
    void add_edge(PortRef a, PortRef b, Scalar w = Scalar(1));
    void add_dangling(std::string id, PortRef at);
    void set_rotation(int v, std::vector<int> ports);

    int vertex_arity(int v) const;
    bool has_rotation() const;

    /// Every port used exactly once, arities consistent. Throws on violation.
    void validate() const;
};

static constexpr int kDefaultBruteCap = 30;

/// Sum over all edge assignments of the product of vertex evaluations.
/// Requires a closed grid (no dangling edges).
Scalar brute_holant(const SignatureGrid& grid, int cap = kDefaultBruteCap);

/// Signature of an F-gate: external variables are the dangling edges in
/// id-sorted order, first dangling edge on the most significant bit.
DenseSignature fgate_signature(const SignatureGrid& grid, int cap = kDefaultBruteCap);

struct Face {
    std::vector<PortRef> steps;  // outgoing (vertex,port) half-edges along the walk
};

/// Traces faces from the rotation system; succeeds iff V - E + F == 2.
/// Dangling edges count as edges to virtual degree-1 endpoints.
std::vector<Face> validate_embedding(const SignatureGrid& grid);

/// Restriction of the F-gate signature to bundles of two external
/// variables forced equal, reported as a symmetric signature over bundles.
SymSignature bundle_view(const SignatureGrid& grid, const std::vector<std::pair<int, int>>& bundles,
                         int cap = kDefaultBruteCap);

int sig_arity(const SignatureGrid::Sig& s);
DenseSignature sig_dense(const SignatureGrid::Sig& s);

}  // namespace holant
