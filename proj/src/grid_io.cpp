#include "holant/grid_io.hpp"

#include <fstream>
#include <sstream>

namespace holant {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

std::pair<std::string, int> parse_port(const std::string& tok, int line) {
    auto dot = tok.rfind('.');
    if (dot == std::string::npos || dot + 1 == tok.size()) fail(line, "expected <vid>.<port>: '" + tok + "'");
    try {
        return {tok.substr(0, dot), std::stoi(tok.substr(dot + 1))};
    } catch (const std::exception&) {
        fail(line, "bad port number in '" + tok + "'");
    }
}

}  // namespace

GridFile parse_grid(std::istream& in) {
    std::vector<Line> lines = tokenize(in);

    std::map<std::string, SignatureGrid::Sig> signatures;
    struct VDecl {
        int line;
        std::string id, sig;
        SignatureGrid::Side side;
    };
    std::vector<VDecl> vdecls;
    std::map<std::string, int> vindex;
    struct EDecl {
        int line;
        std::string a, b;
        int pa, pb;
        Scalar w;
    };
    std::vector<EDecl> edecls;
    struct DDecl {
        int line;
        std::string id, v;
        int p;
    };
    std::vector<DDecl> ddecls;
    std::map<std::string, std::pair<int, std::vector<int>>> rotations;
    std::vector<std::string> externals;

    for (const Line& ln : lines) {
        const auto& t = ln.tokens;
        const std::string& kw = t[0];
        if (kw == "signature") {
            if (t.size() < 4) fail(ln.number, "signature needs: <name> sym|dense <n> values...");
            const std::string& name = t[1];
            if (signatures.count(name)) fail(ln.number, "duplicate signature '" + name + "'");
            int n;
            try {
                n = std::stoi(t[3]);
            } catch (const std::exception&) {
                fail(ln.number, "bad arity '" + t[3] + "'");
            }
            if (n < 0) fail(ln.number, "negative arity");
            size_t count = t[2] == "sym" ? static_cast<size_t>(n) + 1
                         : t[2] == "dense" ? (size_t{1} << n)
                                           : 0;
            if (count == 0) fail(ln.number, "signature kind must be sym or dense");
            if (t.size() != 4 + count)
                fail(ln.number, "expected " + std::to_string(count) + " scalar entries");
            std::vector<Scalar> vals;
            for (size_t i = 0; i < count; ++i) {
                try {
                    vals.push_back(Scalar::parse(t[4 + i]));
                } catch (const parse_error& e) {
                    fail(ln.number, e.what());
                }
            }
            if (t[2] == "sym")
                signatures.emplace(name, SymSignature(std::move(vals)));
            else
                signatures.emplace(name, DenseSignature(n, std::move(vals)));
        } else if (kw == "vertex") {
            if (t.size() < 3 || t.size() > 4) fail(ln.number, "vertex needs: <vid> <signature-name> [side=gen|rec]");
            if (vindex.count(t[1])) fail(ln.number, "duplicate vertex '" + t[1] + "'");
            SignatureGrid::Side side = SignatureGrid::Side::None;
            if (t.size() == 4) {
                if (t[3] == "side=gen")
                    side = SignatureGrid::Side::Generator;
                else if (t[3] == "side=rec")
                    side = SignatureGrid::Side::Recognizer;
                else
                    fail(ln.number, "unknown vertex option '" + t[3] + "'");
            }
            vindex[t[1]] = static_cast<int>(vdecls.size());
            vdecls.push_back(VDecl{ln.number, t[1], t[2], side});
        } else if (kw == "edge") {
            if (t.size() < 3 || t.size() > 4) fail(ln.number, "edge needs: <vid>.<port> <vid>.<port> [w=<scalar>]");
            auto [a, pa] = parse_port(t[1], ln.number);
            auto [b, pb] = parse_port(t[2], ln.number);
            Scalar w(1);
            if (t.size() == 4) {
                if (t[3].rfind("w=", 0) != 0) fail(ln.number, "edge option must be w=<scalar>");
                try {
                    w = Scalar::parse(t[3].substr(2));
                } catch (const parse_error& e) {
                    fail(ln.number, e.what());
                }
            }
            edecls.push_back(EDecl{ln.number, a, b, pa, pb, w});
        } else if (kw == "dangling") {
            if (t.size() != 3) fail(ln.number, "dangling needs: <did> <vid>.<port>");
            auto [v, p] = parse_port(t[2], ln.number);
            ddecls.push_back(DDecl{ln.number, t[1], v, p});
        } else if (kw == "rotation") {
            if (t.size() < 2) fail(ln.number, "rotation needs: <vid> <ports...>");
            std::vector<int> ports;
            for (size_t i = 2; i < t.size(); ++i) {
                try {
                    ports.push_back(std::stoi(t[i]));
                } catch (const std::exception&) {
                    fail(ln.number, "bad port '" + t[i] + "'");
                }
            }
            rotations[t[1]] = {ln.number, std::move(ports)};
        } else if (kw == "external") {
            for (size_t i = 1; i < t.size(); ++i) externals.push_back(t[i]);
        } else {
            fail(ln.number, "unknown directive '" + kw + "'");
        }
    }

    // placeholder arities from the ports actually used
    std::map<std::string, int> max_port;
    auto touch = [&max_port](const std::string& v, int p) {
        auto [it, _] = max_port.emplace(v, -1);
        if (p > it->second) it->second = p;
    };
    for (const auto& e : edecls) {
        touch(e.a, e.pa);
        touch(e.b, e.pb);
    }
    for (const auto& d : ddecls) touch(d.v, d.p);

    GridFile out;
    for (const auto& vd : vdecls) {
        SignatureGrid::Sig sig;
        if (vd.sig == "_") {
            int arity = max_port.count(vd.id) ? max_port[vd.id] + 1 : 0;
            std::vector<Scalar> exact_one(static_cast<size_t>(arity) + 1, Scalar(0));
            if (arity >= 1) exact_one[1] = Scalar(1);
            else exact_one[0] = Scalar(1);
            sig = SymSignature(std::move(exact_one));
        } else {
            auto it = signatures.find(vd.sig);
            if (it == signatures.end()) fail(vd.line, "unknown signature '" + vd.sig + "'");
            sig = it->second;
        }
        out.grid.add_vertex(vd.id, std::move(sig), vd.side);
    }
    out.vertex_index = vindex;
    auto vid = [&](const std::string& name, int line) {
        auto it = vindex.find(name);
        if (it == vindex.end()) fail(line, "unknown vertex '" + name + "'");
        return it->second;
    };
    for (const auto& e : edecls)
        out.grid.add_edge(PortRef{vid(e.a, e.line), e.pa}, PortRef{vid(e.b, e.line), e.pb}, e.w);
    for (const auto& d : ddecls) out.grid.add_dangling(d.id, PortRef{vid(d.v, d.line), d.p});
    for (const auto& [name, rot] : rotations) out.grid.set_rotation(vid(name, rot.first), rot.second);
    for (const auto& x : externals)
        if (!vindex.count(x)) throw parse_error("external lists unknown vertex '" + x + "'");
    out.externals = externals;

    try {
        out.grid.validate();
    } catch (const error& e) {
        throw parse_error(std::string("grid invalid: ") + e.what());
    }
    return out;
}

GridFile parse_grid_string(const std::string& text) {
    std::istringstream is(text);
    return parse_grid(is);
}

GridFile parse_grid_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open '" + path + "'");
    return parse_grid(is);
}

std::string write_grid(const SignatureGrid& grid, const std::vector<std::string>& externals) {
    std::ostringstream os;
    std::map<std::string, const SignatureGrid::Sig*> named;
    std::vector<std::string> vsig(grid.vertices.size());
    int counter = 0;
    for (size_t v = 0; v < grid.vertices.size(); ++v) {
        const auto& sig = grid.vertices[v].sig;
        std::string found;
        for (const auto& [name, s] : named) {
            bool same = std::visit(
                [&](const auto& a) {
                    using T = std::decay_t<decltype(a)>;
                    return std::holds_alternative<T>(*s) && std::get<T>(*s) == a;
                },
                sig);
            if (same) {
                found = name;
                break;
            }
        }
        if (found.empty()) {
            found = "s" + std::to_string(counter++);
            named[found] = &sig;
        }
        vsig[v] = found;
    }
    for (const auto& [name, s] : named) {
        os << "signature " << name;
        if (std::holds_alternative<SymSignature>(*s)) {
            const auto& f = std::get<SymSignature>(*s);
            os << " sym " << f.arity;
            for (const auto& x : f.entries) os << " " << x.str();
        } else {
            const auto& f = std::get<DenseSignature>(*s);
            os << " dense " << f.arity;
            for (const auto& x : f.table) os << " " << x.str();
        }
        os << "\n";
    }
    for (size_t v = 0; v < grid.vertices.size(); ++v) {
        os << "vertex " << grid.vertices[v].id << " " << vsig[v];
        if (grid.vertices[v].side == SignatureGrid::Side::Generator) os << " side=gen";
        if (grid.vertices[v].side == SignatureGrid::Side::Recognizer) os << " side=rec";
        os << "\n";
    }
    auto pname = [&grid](const PortRef& p) {
        return grid.vertices[static_cast<size_t>(p.vertex)].id + "." + std::to_string(p.port);
    };
    for (const auto& e : grid.edges) {
        os << "edge " << pname(e.a) << " " << pname(e.b);
        if (!(e.weight == Scalar(1))) os << " w=" << e.weight.str();
        os << "\n";
    }
    for (const auto& d : grid.dangling) os << "dangling " << d.id << " " << pname(d.at) << "\n";
    for (const auto& [v, rot] : grid.rotation) {
        os << "rotation " << grid.vertices[static_cast<size_t>(v)].id;
        for (int p : rot) os << " " << p;
        os << "\n";
    }
    if (!externals.empty()) {
        os << "external";
        for (const auto& x : externals) os << " " << x;
        os << "\n";
    }
    return os.str();
}

WeightedPlanarGraph graph_view(const SignatureGrid& grid) {
    grid.validate();
    if (!grid.dangling.empty()) throw error("graph_view: dangling edges not allowed");
    WeightedPlanarGraph g;
    for (const auto& v : grid.vertices) g.add_vertex(v.id);
    // port -> half-edge
    std::map<std::pair<int, int>, int> half;
    for (size_t e = 0; e < grid.edges.size(); ++e) {
        const auto& ed = grid.edges[e];
        g.add_edge(ed.a.vertex, ed.b.vertex, ed.weight);
        half[{ed.a.vertex, ed.a.port}] = 2 * static_cast<int>(e);
        half[{ed.b.vertex, ed.b.port}] = 2 * static_cast<int>(e) + 1;
    }
    if (grid.has_rotation()) {
        for (const auto& [v, ports] : grid.rotation) {
            std::vector<int> rot;
            for (int p : ports) rot.push_back(half.at({v, p}));
            g.rotation[static_cast<size_t>(v)] = std::move(rot);
        }
    } else {
        throw error("graph_view: rotation system required");
    }
    return g;
}

}  // namespace holant
