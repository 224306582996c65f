#include "holant/transform.hpp"

namespace holant {

Mat2 basis_inverse(const Mat2& t) {
    Scalar det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
    if (det.is_zero()) throw error("basis is singular");
    Mat2 inv;
    inv(0, 0) = t(1, 1) / det;
    inv(0, 1) = -t(0, 1) / det;
    inv(1, 0) = -t(1, 0) / det;
    inv(1, 1) = t(0, 0) / det;
    return inv;
}

bool basis_is_identity(const Mat2& t) {
    return t(0, 0) == Scalar(1) && t(0, 1) == Scalar(0) && t(1, 0) == Scalar(0) &&
           t(1, 1) == Scalar(1);
}

namespace {

// apply m to one tensor index of the table
void apply_index(std::vector<Scalar>& table, int arity, int index, const Mat2& m) {
    const size_t stride = size_t{1} << (arity - 1 - index);
    for (size_t base = 0; base < table.size(); ++base) {
        if (base & stride) continue;
        Scalar x0 = table[base], x1 = table[base | stride];
        table[base] = m(0, 0) * x0 + m(0, 1) * x1;
        table[base | stride] = m(1, 0) * x0 + m(1, 1) * x1;
    }
}

}  // namespace

DenseSignature transform_dense(const DenseSignature& f, const Mat2& t, Variance variance) {
    Mat2 m = t;
    if (variance == Variance::Covariant) {
        Mat2 inv = basis_inverse(t);
        m(0, 0) = inv(0, 0);
        m(0, 1) = inv(1, 0);
        m(1, 0) = inv(0, 1);
        m(1, 1) = inv(1, 1);  // (T^-1)^T applied on the left == right-multiplying by T^-1
    }
    std::vector<Scalar> table = f.table;
    for (int i = 0; i < f.arity; ++i) apply_index(table, f.arity, i, m);
    return DenseSignature(f.arity, std::move(table));
}

SignatureGrid::Sig transform_signature(const SignatureGrid::Sig& f, const Mat2& t, Variance variance) {
    DenseSignature d = transform_dense(sig_dense(f), t, variance);
    if (std::holds_alternative<SymSignature>(f)) {
        auto sym = symmetric_view(d);
        if (!sym) throw error("internal: transform of a symmetric signature must stay symmetric");
        return *sym;
    }
    return d;
}

SignatureGrid to_bipartite(const SignatureGrid& grid) {
    grid.validate();
    SignatureGrid out;
    for (const auto& v : grid.vertices) out.add_vertex(v.id, v.sig, SignatureGrid::Side::Recognizer);
    for (const auto& [v, rot] : grid.rotation) out.set_rotation(v, rot);
    SymSignature eq2{Scalar(1), Scalar(0), Scalar(1)};
    for (size_t e = 0; e < grid.edges.size(); ++e) {
        const auto& ed = grid.edges[e];
        int mid = out.add_vertex("eq" + std::to_string(e), eq2, SignatureGrid::Side::Generator);
        out.add_edge(ed.a, PortRef{mid, 0}, ed.weight);
        out.add_edge(ed.b, PortRef{mid, 1});
        if (grid.has_rotation()) out.set_rotation(mid, {0, 1});
    }
    for (const auto& d : grid.dangling) out.add_dangling(d.id, d.at);
    return out;
}

SignatureGrid transform_grid(const SignatureGrid& grid, const Mat2& t) {
    grid.validate();
    SignatureGrid out = grid;
    for (auto& v : out.vertices) {
        switch (v.side) {
            case SignatureGrid::Side::Generator:
                v.sig = transform_signature(v.sig, t, Variance::Contravariant);
                break;
            case SignatureGrid::Side::Recognizer:
                v.sig = transform_signature(v.sig, t, Variance::Covariant);
                break;
            case SignatureGrid::Side::None:
                throw error("transform_grid: vertex " + v.id + " has no bipartite side");
        }
    }
    for (const auto& e : out.edges) {
        auto sa = out.vertices[static_cast<size_t>(e.a.vertex)].side;
        auto sb = out.vertices[static_cast<size_t>(e.b.vertex)].side;
        if (sa == sb) throw error("transform_grid: grid is not bipartite between sides");
    }
    return out;
}

}  // namespace holant
