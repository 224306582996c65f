#include "holant/fkt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace holant {

int WeightedPlanarGraph::add_vertex(std::string id) {
    if (id.empty()) id = "v" + std::to_string(ids.size());
    ids.push_back(std::move(id));
    rotation.emplace_back();
    return n() - 1;
}

int WeightedPlanarGraph::add_edge(int u, int v, Scalar w) {
    edges.push_back(Edge{u, v, std::move(w)});
    return static_cast<int>(edges.size()) - 1;
}

void WeightedPlanarGraph::rotation_from_neighbors(int v, const std::vector<int>& neighbors) {
    std::vector<int> halves;
    for (int nb : neighbors) {
        int found = -1;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].u == v && edges[e].v == nb) found = 2 * static_cast<int>(e);
            if (edges[e].v == v && edges[e].u == nb) found = 2 * static_cast<int>(e) + 1;
            if (found >= 0) break;
        }
        if (found < 0)
            throw error("rotation_from_neighbors: no edge " + std::to_string(v) + "-" + std::to_string(nb));
        halves.push_back(found);
    }
    rotation[static_cast<size_t>(v)] = std::move(halves);
}

void WeightedPlanarGraph::validate() const {
    std::vector<std::vector<int>> expect(static_cast<size_t>(n()));
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (ed.u < 0 || ed.u >= n() || ed.v < 0 || ed.v >= n()) throw error("edge endpoint out of range");
        expect[static_cast<size_t>(ed.u)].push_back(2 * static_cast<int>(e));
        expect[static_cast<size_t>(ed.v)].push_back(2 * static_cast<int>(e) + 1);
    }
    for (int v = 0; v < n(); ++v) {
        std::vector<int> have = rotation[static_cast<size_t>(v)];
        std::vector<int>& want = expect[static_cast<size_t>(v)];
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want)
            throw error("rotation of vertex " + ids[static_cast<size_t>(v)] +
                        " does not list its incident half-edges");
    }
}

WeightedPlanarGraph WeightedPlanarGraph::induced_without(const std::vector<int>& removed) const {
    std::vector<char> gone(static_cast<size_t>(n()), 0);
    for (int v : removed) gone[static_cast<size_t>(v)] = 1;
    WeightedPlanarGraph out;
    std::vector<int> vmap(static_cast<size_t>(n()), -1);
    for (int v = 0; v < n(); ++v)
        if (!gone[static_cast<size_t>(v)]) vmap[static_cast<size_t>(v)] = out.add_vertex(ids[static_cast<size_t>(v)]);
    std::vector<int> emap(edges.size(), -1);
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (gone[static_cast<size_t>(ed.u)] || gone[static_cast<size_t>(ed.v)]) continue;
        emap[e] = out.add_edge(vmap[static_cast<size_t>(ed.u)], vmap[static_cast<size_t>(ed.v)], ed.w);
    }
    for (int v = 0; v < n(); ++v) {
        if (gone[static_cast<size_t>(v)]) continue;
        std::vector<int> rot;
        for (int h : rotation[static_cast<size_t>(v)]) {
            int e = h / 2;
            if (emap[static_cast<size_t>(e)] < 0) continue;
            rot.push_back(2 * emap[static_cast<size_t>(e)] + (h & 1));
        }
        out.rotation[static_cast<size_t>(vmap[static_cast<size_t>(v)])] = std::move(rot);
    }
    return out;
}

namespace {

int half_tail(const WeightedPlanarGraph& g, int h) {
    const auto& e = g.edges[static_cast<size_t>(h / 2)];
    return (h & 1) ? e.v : e.u;
}
int half_head(const WeightedPlanarGraph& g, int h) {
    const auto& e = g.edges[static_cast<size_t>(h / 2)];
    return (h & 1) ? e.u : e.v;
}

std::vector<int> components(const WeightedPlanarGraph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& e : g.edges) comp[static_cast<size_t>(find(e.u))] = find(e.v);
    for (int v = 0; v < g.n(); ++v) comp[static_cast<size_t>(v)] = find(v);
    return comp;
}

}  // namespace

std::vector<GraphFace> graph_faces(const WeightedPlanarGraph& g) {
    g.validate();
    const int H = 2 * static_cast<int>(g.edges.size());
    // position of each half-edge in its tail's rotation
    std::vector<int> pos(static_cast<size_t>(H), -1);
    for (int v = 0; v < g.n(); ++v) {
        const auto& rot = g.rotation[static_cast<size_t>(v)];
        for (size_t i = 0; i < rot.size(); ++i) pos[static_cast<size_t>(rot[i])] = static_cast<int>(i);
    }
    auto succ = [&](int h) {
        int rev = h ^ 1;
        int v = half_head(g, h);  // == tail of rev
        const auto& rot = g.rotation[static_cast<size_t>(v)];
        int i = pos[static_cast<size_t>(rev)];
        return rot[(static_cast<size_t>(i) + 1) % rot.size()];
    };

    std::vector<int> comp = components(g);
    std::vector<char> used(static_cast<size_t>(H), 0);
    std::vector<GraphFace> faces;
    for (int h0 = 0; h0 < H; ++h0) {
        if (used[static_cast<size_t>(h0)]) continue;
        GraphFace f;
        f.component = comp[static_cast<size_t>(half_tail(g, h0))];
        int h = h0;
        do {
            used[static_cast<size_t>(h)] = 1;
            f.half_edges.push_back(h);
            h = succ(h);
        } while (h != h0);
        faces.push_back(std::move(f));
    }

    // per-component Euler check; edge-free components have one face
    std::map<int, long> vcnt, ecnt, fcnt;
    for (int v = 0; v < g.n(); ++v) ++vcnt[comp[static_cast<size_t>(v)]];
    for (const auto& e : g.edges) ++ecnt[comp[static_cast<size_t>(e.u)]];
    for (const auto& f : faces) ++fcnt[f.component];
    for (const auto& [c, nv] : vcnt) {
        long ne = ecnt.count(c) ? ecnt[c] : 0;
        long nf = fcnt.count(c) ? fcnt[c] : (ne == 0 ? 1 : 0);
        if (nv - ne + nf != 2)
            throw error("not a planar embedding: component Euler count " + std::to_string(nv - ne + nf));
    }
    return faces;
}

Orientation kasteleyn_orient(const WeightedPlanarGraph& g) {
    std::vector<GraphFace> faces = graph_faces(g);
    const int E = static_cast<int>(g.edges.size());
    Orientation ori;
    ori.from_u.assign(static_cast<size_t>(E), 1);

    // spanning forest; non-tree edges form the dual tree on faces
    std::vector<int> comp(static_cast<size_t>(g.n()));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
        return x;
    };
    std::vector<char> in_tree(static_cast<size_t>(E), 0);
    for (int e = 0; e < E; ++e) {
        int a = find(g.edges[static_cast<size_t>(e)].u), b = find(g.edges[static_cast<size_t>(e)].v);
        if (a != b) {
            comp[static_cast<size_t>(a)] = b;
            in_tree[static_cast<size_t>(e)] = 1;
        }
    }

    const int F = static_cast<int>(faces.size());
    std::vector<int> face_of(static_cast<size_t>(2 * E), -1);
    for (int f = 0; f < F; ++f)
        for (int h : faces[static_cast<size_t>(f)].half_edges) face_of[static_cast<size_t>(h)] = f;

    // dual adjacency over non-tree edges
    std::vector<std::vector<std::pair<int, int>>> dual(static_cast<size_t>(F));  // (other face, edge)
    for (int e = 0; e < E; ++e) {
        if (in_tree[static_cast<size_t>(e)]) continue;
        int f1 = face_of[static_cast<size_t>(2 * e)], f2 = face_of[static_cast<size_t>(2 * e + 1)];
        dual[static_cast<size_t>(f1)].push_back({f2, e});
        dual[static_cast<size_t>(f2)].push_back({f1, e});
    }

    // one root face per component, processed leaves-first
    std::vector<int> parent_edge(static_cast<size_t>(F), -1), order;
    std::vector<char> seen(static_cast<size_t>(F), 0);
    std::map<int, int> root_of_comp;
    for (int f = 0; f < F; ++f) {
        int c = faces[static_cast<size_t>(f)].component;
        if (root_of_comp.count(c)) continue;
        root_of_comp[c] = f;
        // BFS
        std::vector<int> queue{f};
        seen[static_cast<size_t>(f)] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int cur = queue[qi];
            order.push_back(cur);
            for (auto [nxt, e] : dual[static_cast<size_t>(cur)]) {
                if (seen[static_cast<size_t>(nxt)]) continue;
                seen[static_cast<size_t>(nxt)] = 1;
                parent_edge[static_cast<size_t>(nxt)] = e;
                queue.push_back(nxt);
            }
        }
    }

    auto aligned_count = [&](int f) {
        int cnt = 0;
        for (int h : faces[static_cast<size_t>(f)].half_edges) {
            bool walks_from_u = (h & 1) == 0;
            if (walks_from_u == static_cast<bool>(ori.from_u[static_cast<size_t>(h / 2)])) ++cnt;
        }
        return cnt;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        int pe = parent_edge[static_cast<size_t>(f)];
        if (pe < 0) continue;  // root face stays unconstrained
        if (aligned_count(f) % 2 == 0)
            ori.from_u[static_cast<size_t>(pe)] = static_cast<char>(!ori.from_u[static_cast<size_t>(pe)]);
    }
    for (int f = 0; f < F; ++f)
        if (parent_edge[static_cast<size_t>(f)] >= 0 && aligned_count(f) % 2 == 0)
            throw error("internal: Kasteleyn property violated after orientation");
    return ori;
}

Scalar pfaffian(Mat m) {
    const long n = m.rows();
    if (m.cols() != n) throw error("pfaffian: matrix must be square");
    bool exact = true;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!m(i, j).is_exact()) exact = false;
    for (long i = 0; i < n; ++i) {
        if (!m(i, i).is_zero()) throw error("pfaffian: non-skew input (diagonal)");
        for (long j = i + 1; j < n; ++j)
            if (m(i, j) != -m(j, i)) throw error("pfaffian: non-skew input");
    }
    if (n % 2 != 0) return Scalar(0);

    Scalar result(1);
    for (long k = 0; k + 1 < n; k += 2) {
        long pivot = -1;
        if (exact) {
            for (long j = k + 1; j < n; ++j)
                if (!m(k, j).is_zero()) {
                    pivot = j;
                    break;
                }
        } else {
            double best = 0;
            for (long j = k + 1; j < n; ++j) {
                double mag = std::abs(m(k, j).to_complex_double());
                if (mag > best) {
                    best = mag;
                    pivot = j;
                }
            }
            if (pivot >= 0 && m(k, pivot).is_zero()) pivot = -1;
        }
        if (pivot < 0) return Scalar(0);
        if (pivot != k + 1) {
            m.row(pivot).swap(m.row(k + 1));
            m.col(pivot).swap(m.col(k + 1));
            result = -result;
        }
        Scalar p = m(k, k + 1);
        result *= p;
        for (long i = k + 2; i < n; ++i) {
            for (long j = i + 1; j < n; ++j) {
                Scalar upd = (m(k + 1, i) * m(k, j) - m(k, i) * m(k + 1, j)) / p;
                m(i, j) += upd;
                m(j, i) = -m(i, j);
            }
        }
    }
    return result;
}

Scalar count_weighted_pm(const WeightedPlanarGraph& g) {
    const int n = g.n();
    if (n == 0) return Scalar(1);
    if (n % 2 != 0) return Scalar(0);
    Orientation ori = kasteleyn_orient(g);

    bool exact = true;
    for (const auto& e : g.edges)
        if (!e.w.is_exact()) exact = false;
    Mat kw = Mat::Constant(n, n, exact ? Scalar(0) : Scalar::approx(0.0));
    Mat k1 = Mat::Constant(n, n, Scalar(0));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int u = g.edges[e].u, v = g.edges[e].v;
        if (u == v) continue;  // self-loops never join a matching
        Scalar w = exact ? g.edges[e].w : g.edges[e].w.to_float();
        if (!ori.from_u[e]) std::swap(u, v);
        kw(u, v) += w;
        kw(v, u) -= w;
        k1(u, v) += Scalar(1);
        k1(v, u) -= Scalar(1);
    }
    Scalar pf1 = pfaffian(k1);
    if (pf1.is_zero()) return Scalar(0);  // the graph has no perfect matching
    bool negative = pf1.exact_re() < 0;
    Scalar pfw = pfaffian(std::move(kw));
    return negative ? -pfw : pfw;
}

}  // namespace holant
