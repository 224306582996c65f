#include "holant/grid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace holant {

int sig_arity(const SignatureGrid::Sig& s) {
    return std::visit([](const auto& f) { return f.arity; }, s);
}

DenseSignature sig_dense(const SignatureGrid::Sig& s) {
    if (std::holds_alternative<SymSignature>(s)) return from_symmetric(std::get<SymSignature>(s));
    return std::get<DenseSignature>(s);
}

int SignatureGrid::add_vertex(std::string id, Sig sig, Side side) {
    vertices.push_back(Vertex{std::move(id), std::move(sig), side});
    return static_cast<int>(vertices.size()) - 1;
}

void SignatureGrid::add_edge(PortRef a, PortRef b, Scalar w) {
    edges.push_back(Edge{a, b, std::move(w)});
}

void SignatureGrid::add_dangling(std::string id, PortRef at) {
    dangling.push_back(Dangling{std::move(id), at});
}

void SignatureGrid::set_rotation(int v, std::vector<int> ports) { rotation[v] = std::move(ports); }

int SignatureGrid::vertex_arity(int v) const { return sig_arity(vertices[static_cast<size_t>(v)].sig); }

bool SignatureGrid::has_rotation() const {
    if (rotation.size() != vertices.size()) return false;
    return true;
}

void SignatureGrid::validate() const {
    std::vector<std::vector<int>> use(vertices.size());
    for (size_t v = 0; v < vertices.size(); ++v) use[v].assign(static_cast<size_t>(vertex_arity(static_cast<int>(v))), 0);
    auto touch = [&](const PortRef& p, const char* what) {
        if (p.vertex < 0 || p.vertex >= static_cast<int>(vertices.size()))
            throw error(std::string(what) + ": bad vertex index");
        auto& u = use[static_cast<size_t>(p.vertex)];
        if (p.port < 0 || p.port >= static_cast<int>(u.size()))
            throw error(std::string(what) + ": port out of range (arity mismatch)");
        ++u[static_cast<size_t>(p.port)];
    };
    for (const Edge& e : edges) {
        touch(e.a, "edge");
        touch(e.b, "edge");
    }
    for (const Dangling& d : dangling) touch(d.at, "dangling");
    for (size_t v = 0; v < vertices.size(); ++v)
        for (size_t p = 0; p < use[v].size(); ++p)
            if (use[v][p] != 1)
                throw error("port " + vertices[v].id + "." + std::to_string(p) +
                            (use[v][p] ? " used more than once" : " unused"));
    for (const auto& [v, ports] : rotation) {
        if (v < 0 || v >= static_cast<int>(vertices.size())) throw error("rotation: bad vertex");
        std::vector<int> sorted = ports;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(static_cast<size_t>(vertex_arity(v)));
        std::iota(expect.begin(), expect.end(), 0);
        if (sorted != expect) throw error("rotation of " + vertices[static_cast<size_t>(v)].id +
                                          " is not a permutation of its ports");
    }
}

namespace {

struct Incidence {
    // per vertex, per port: edge index (>=0) or ~dangling index (<0)
    std::vector<std::vector<int>> slot;

    explicit Incidence(const SignatureGrid& g) {
        slot.resize(g.vertices.size());
        for (size_t v = 0; v < g.vertices.size(); ++v)
            slot[v].assign(static_cast<size_t>(g.vertex_arity(static_cast<int>(v))), -1);
        for (size_t e = 0; e < g.edges.size(); ++e) {
            slot[static_cast<size_t>(g.edges[e].a.vertex)][static_cast<size_t>(g.edges[e].a.port)] =
                static_cast<int>(e);
            slot[static_cast<size_t>(g.edges[e].b.vertex)][static_cast<size_t>(g.edges[e].b.port)] =
                static_cast<int>(e);
        }
        for (size_t d = 0; d < g.dangling.size(); ++d)
            slot[static_cast<size_t>(g.dangling[d].at.vertex)][static_cast<size_t>(g.dangling[d].at.port)] =
                ~static_cast<int>(d);
    }
};

struct Evaluator {
    const SignatureGrid& g;
    Incidence inc;
    std::vector<DenseSignature> tables;
    std::vector<std::pair<int, Scalar>> weighted;  // edges with weight != 1

    explicit Evaluator(const SignatureGrid& grid) : g(grid), inc(grid) {
        g.validate();
        tables.reserve(g.vertices.size());
        for (const auto& v : g.vertices) tables.push_back(sig_dense(v.sig));
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (!(g.edges[e].weight == Scalar(1))) weighted.push_back({static_cast<int>(e), g.edges[e].weight});
    }

    // bits per edge in `edge_bits` (bit e = assignment of edge e),
    // bits per dangling in `dang_bits` (bit d, d-th dangling entry).
    // Edges set to 1 contribute their weight (weight 1 by default).
    Scalar value(uint64_t edge_bits, uint64_t dang_bits) const {
        Scalar prod(1);
        for (const auto& [e, w] : weighted)
            if ((edge_bits >> e) & 1) prod *= w;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            const auto& slots = inc.slot[v];
            const int k = static_cast<int>(slots.size());
            size_t idx = 0;
            for (int p = 0; p < k; ++p) {
                int s = slots[static_cast<size_t>(p)];
                int bit = s >= 0 ? static_cast<int>((edge_bits >> s) & 1)
                                 : static_cast<int>((dang_bits >> ~s) & 1);
                idx = (idx << 1) | static_cast<size_t>(bit);
            }
            const Scalar& val = tables[v][idx];
            if (val.is_zero()) return Scalar(0);
            prod *= val;
        }
        return prod;
    }
};

}  // namespace

Scalar brute_holant(const SignatureGrid& grid, int cap) {
    if (!grid.dangling.empty()) throw error("brute_holant: grid has dangling edges");
    if (static_cast<int>(grid.edges.size()) > cap)
        throw error("brute_holant: edge count " + std::to_string(grid.edges.size()) +
                    " exceeds cap " + std::to_string(cap));
    Evaluator ev(grid);
    Scalar acc(0);
    const uint64_t top = uint64_t{1} << grid.edges.size();
    for (uint64_t a = 0; a < top; ++a) acc += ev.value(a, 0);
    return acc;
}

static std::vector<size_t> sorted_dangling_order(const SignatureGrid& grid) {
    std::vector<size_t> order(grid.dangling.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return grid.dangling[a].id < grid.dangling[b].id; });
    for (size_t i = 1; i < order.size(); ++i)
        if (grid.dangling[order[i - 1]].id == grid.dangling[order[i]].id)
            throw error("duplicate dangling id " + grid.dangling[order[i]].id);
    return order;
}

DenseSignature fgate_signature(const SignatureGrid& grid, int cap) {
    if (grid.dangling.empty()) throw error("fgate_signature: no dangling edges");
    if (static_cast<int>(grid.edges.size()) > cap)
        throw error("fgate_signature: internal edge count exceeds cap");
    Evaluator ev(grid);
    auto order = sorted_dangling_order(grid);
    const int n = static_cast<int>(order.size());
    std::vector<Scalar> table(size_t{1} << n);
    const uint64_t etop = uint64_t{1} << grid.edges.size();
    for (uint64_t y = 0; y < table.size(); ++y) {
        // external variable i (msb-first) is the i-th dangling edge in id order
        uint64_t dang_bits = 0;
        for (int i = 0; i < n; ++i)
            if ((y >> (n - 1 - i)) & 1) dang_bits |= uint64_t{1} << order[static_cast<size_t>(i)];
        Scalar acc(0);
        for (uint64_t a = 0; a < etop; ++a) acc += ev.value(a, dang_bits);
        table[y] = acc;
    }
    return DenseSignature(n, std::move(table));
}

std::vector<Face> validate_embedding(const SignatureGrid& grid) {
    grid.validate();
    if (!grid.has_rotation()) throw error("validate_embedding: rotation system missing");

    // connectivity over real vertices
    std::vector<int> comp(grid.vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[static_cast<size_t>(x)] == x ? x : comp[static_cast<size_t>(x)] = find(comp[static_cast<size_t>(x)]); };
    for (const auto& e : grid.edges) comp[static_cast<size_t>(find(e.a.vertex))] = find(e.b.vertex);
    int roots = 0;
    for (size_t v = 0; v < grid.vertices.size(); ++v)
        if (find(static_cast<int>(v)) == static_cast<int>(v)) ++roots;
    if (roots > 1) throw error("validate_embedding: graph is not connected");

    Incidence inc(grid);
    // Half-edges: for edge e, 2e = out of a, 2e+1 = out of b. For dangling d,
    // a single bounce half-edge handled via a sentinel.
    const int E = static_cast<int>(grid.edges.size());
    const int D = static_cast<int>(grid.dangling.size());
    auto out_half = [&](const PortRef& p) -> int {
        int s = inc.slot[static_cast<size_t>(p.vertex)][static_cast<size_t>(p.port)];
        if (s >= 0) {
            const auto& e = grid.edges[static_cast<size_t>(s)];
            return (e.a == p) ? 2 * s : 2 * s + 1;
        }
        return 2 * E + ~s;  // dangling half-edge (vertex -> virtual endpoint)
    };
    auto head_port = [&](int h) -> std::optional<PortRef> {
        if (h < 2 * E) {
            const auto& e = grid.edges[static_cast<size_t>(h / 2)];
            return (h % 2 == 0) ? e.b : e.a;
        }
        return std::nullopt;  // virtual endpoint of a dangling edge
    };
    auto tail_port = [&](int h) -> PortRef {
        if (h < 2 * E) {
            const auto& e = grid.edges[static_cast<size_t>(h / 2)];
            return (h % 2 == 0) ? e.a : e.b;
        }
        return grid.dangling[static_cast<size_t>(h - 2 * E)].at;
    };
    auto next_at = [&](const PortRef& arrive) -> int {
        const auto& rot = grid.rotation.at(arrive.vertex);
        auto it = std::find(rot.begin(), rot.end(), arrive.port);
        size_t i = static_cast<size_t>(it - rot.begin());
        int q = rot[(i + 1) % rot.size()];
        return out_half(PortRef{arrive.vertex, q});
    };
    auto next = [&](int h) -> int {
        auto hp = head_port(h);
        if (!hp) return h ^ 0;  // bounce: dangling half-edge reverses
        return next_at(*hp);
    };
    // successor of a dangling half-edge is its own reverse, i.e. continue
    // from the dangling port as if we just arrived there
    auto succ = [&](int h) -> int {
        auto hp = head_port(h);
        if (hp) return next_at(*hp);
        return next_at(tail_port(h));  // bounced off the virtual endpoint
    };
    (void)next;

    const int H = 2 * E + D;
    std::vector<char> used(static_cast<size_t>(H), 0);
    std::vector<Face> faces;
    for (int h0 = 0; h0 < H; ++h0) {
        if (used[static_cast<size_t>(h0)]) continue;
        Face f;
        int h = h0;
        do {
            used[static_cast<size_t>(h)] = 1;
            f.steps.push_back(tail_port(h));
            h = succ(h);
        } while (h != h0);
        faces.push_back(std::move(f));
    }
    // dangling half-edges traverse both directions inside one walk already,
    // but each dangling contributes only one half-edge id; Euler with
    // virtual endpoints: (V + D) - (E + D) + F == 2
    long V = static_cast<long>(grid.vertices.size());
    long euler = V - E + static_cast<long>(faces.size());
    if (euler != 2)
        throw error("not a planar embedding: V-E+F = " + std::to_string(euler));
    return faces;
}

SymSignature bundle_view(const SignatureGrid& grid, const std::vector<std::pair<int, int>>& bundles,
                         int cap) {
    DenseSignature d = fgate_signature(grid, cap);
    const int n = d.arity;
    const int m = static_cast<int>(bundles.size());
    if (2 * m != n) throw error("bundle_view: bundles must partition the external variables");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (auto [a, b] : bundles) {
        if (a < 0 || b < 0 || a >= n || b >= n || seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)] || a == b)
            throw error("bundle_view: bundles must partition the external variables");
        seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = 1;
    }
    std::vector<Scalar> entries(static_cast<size_t>(m) + 1);
    std::vector<bool> have(entries.size(), false);
    for (uint64_t t = 0; t < (uint64_t{1} << m); ++t) {
        uint64_t full = 0;
        int w = 0;
        for (int i = 0; i < m; ++i) {
            if ((t >> (m - 1 - i)) & 1) {
                ++w;
                full |= uint64_t{1} << (n - 1 - bundles[static_cast<size_t>(i)].first);
                full |= uint64_t{1} << (n - 1 - bundles[static_cast<size_t>(i)].second);
            }
        }
        const Scalar& v = d[full];
        if (!have[static_cast<size_t>(w)]) {
            entries[static_cast<size_t>(w)] = v;
            have[static_cast<size_t>(w)] = true;
        } else if (entries[static_cast<size_t>(w)] != v) {
            throw verify_error("bundle_view: restricted table is not symmetric over bundles");
        }
    }
    return SymSignature(std::move(entries));
}

}  // namespace holant
