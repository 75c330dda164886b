#include "goeritz/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace goeritz {

namespace {

// ---------------------------------------------------------------- lexer ---

struct Token {
    enum Kind { Ident, Number, LBrace, RBrace, LParen, RParen, Semi, Dot, End } kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = src_[pos_];
        switch (c) {
            case '{': t.kind = Token::LBrace; advance(); return t;
            case '}': t.kind = Token::RBrace; advance(); return t;
            case '(': t.kind = Token::LParen; advance(); return t;
            case ')': t.kind = Token::RParen; advance(); return t;
            case ';': t.kind = Token::Semi; advance(); return t;
            case '.': t.kind = Token::Dot; advance(); return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text.push_back(src_[pos_]);
                advance();
            }
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError("SYNTAX", "number out of range: " + t.text, t.line, t.col);
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '-') {
                    t.text.push_back(d);
                    advance();
                } else {
                    break;
                }
            }
            return t;
        }
        throw ParseError("SYNTAX", std::string("unexpected character '") + c + "'", line_, col_);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct PendingRef {
    std::string piece;
    int face = 0;
    int line = 1, col = 1;
};

[[noreturn]] void fail(const std::string& code, const std::string& msg, const Token& t) {
    throw ParseError(code, msg, t.line, t.col);
}

// ---------------------------------------------------- per-piece topology ---

int local_mate_table(const Piece& p, std::vector<int>& mate) {
    // Pairs the two occurrences of each edge label; returns label count.
    mate.assign(p.dart_count(), -1);
    if (p.free_loop) {
        mate = {1, 0};
        return 1;
    }
    std::map<long long, std::vector<int>> occ;
    for (size_t ci = 0; ci < p.crossings.size(); ++ci)
        for (int k = 0; k < 4; ++k) occ[p.crossings[ci].edge[k]].push_back(4 * static_cast<int>(ci) + k);
    for (const auto& [label, darts] : occ) {
        if (darts.size() != 2)
            throw ParseError("LABEL_COUNT",
                             "edge label " + std::to_string(label) + " occurs " +
                                 std::to_string(darts.size()) + " times in piece " + p.name +
                                 " (expected 2)",
                             0, 0);
        mate[darts[0]] = darts[1];
        mate[darts[1]] = darts[0];
    }
    return static_cast<int>(occ.size());
}

// Local face ids by ascending minimal dart; returns face-of-dart map.
std::vector<int> local_face_map(const Piece& p, const std::vector<int>& mate, int& face_count) {
    int nd = p.dart_count();
    std::vector<int> face(nd, -1);
    face_count = 0;
    if (p.free_loop) {
        face = {0, 1};
        face_count = 2;
        return face;
    }
    for (int d0 = 0; d0 < nd; ++d0) {
        if (face[d0] >= 0) continue;
        int d = d0;
        do {
            face[d] = face_count;
            int e = mate[d];
            d = (e & ~3) | ((e + 1) & 3);
        } while (d != d0);
        ++face_count;
    }
    return face;
}

bool piece_connected(const Piece& p) {
    if (p.free_loop || p.crossings.size() <= 1) return true;
    std::map<long long, std::vector<int>> at;
    for (size_t ci = 0; ci < p.crossings.size(); ++ci)
        for (long long lab : p.crossings[ci].edge) at[lab].push_back(static_cast<int>(ci));
    std::vector<int> parent(p.crossings.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [lab, cs] : at)
        for (size_t i = 1; i < cs.size(); ++i) parent[find(cs[i])] = find(cs[0]);
    int root = find(0);
    for (size_t i = 1; i < p.crossings.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int piece_local_face_count(const Piece& p) {
    std::vector<int> mate;
    local_mate_table(p, mate);
    int n = 0;
    local_face_map(p, mate, n);
    return n;
}

// ---------------------------------------------------------------- parser ---

Diagram parse_diagram(std::string_view text) {
    Lexer lex(text);
    Diagram d;
    std::map<std::string, int> piece_index;
    struct RawPlace {
        std::string child, host;
        int face;
        Token at;
    };
    std::vector<RawPlace> raw_places;
    struct RawOuter {
        std::string piece;
        int face;
        Token at;
    };
    std::vector<RawOuter> raw_outers;

    Token t = lex.next();
    while (t.kind != Token::End) {
        if (t.kind != Token::Ident) fail("SYNTAX", "expected 'piece', 'place' or 'outer'", t);
        if (t.text == "piece") {
            Token name = lex.next();
            if (name.kind != Token::Ident) fail("SYNTAX", "expected piece name", name);
            if (piece_index.count(name.text))
                fail("DUP_PIECE", "piece '" + name.text + "' defined twice", name);
            Token brace = lex.next();
            if (brace.kind != Token::LBrace) fail("SYNTAX", "expected '{'", brace);

            Piece p;
            p.name = name.text;
            Token body = lex.next();
            if (body.kind == Token::Ident && body.text == "O") {
                p.free_loop = true;
                body = lex.next();
                if (body.kind != Token::RBrace) fail("SYNTAX", "expected '}' after 'O'", body);
            } else {
                for (;;) {
                    if (body.kind == Token::RBrace) break;
                    if (body.kind != Token::Ident || body.text != "X")
                        fail("SYNTAX", "expected 'X' record or '}'", body);
                    Crossing c;
                    for (int k = 0; k < 4; ++k) {
                        Token num = lex.next();
                        if (num.kind != Token::Number)
                            fail("SYNTAX", "expected edge label (nonnegative integer)", num);
                        c.edge[k] = num.value;
                    }
                    p.crossings.push_back(c);
                    body = lex.next();
                    if (body.kind == Token::Semi) body = lex.next();
                }
                if (p.crossings.empty())
                    fail("SYNTAX", "piece '" + p.name + "' has no crossings (use 'O' for a free loop)",
                         body);
            }
            piece_index[p.name] = static_cast<int>(d.pieces.size());
            d.pieces.push_back(std::move(p));
        } else if (t.text == "place") {
            Token child = lex.next();
            if (child.kind != Token::Ident) fail("SYNTAX", "expected piece name after 'place'", child);
            Token kw = lex.next();
            if (kw.kind != Token::Ident || kw.text != "in") fail("SYNTAX", "expected 'in'", kw);
            Token host = lex.next();
            if (host.kind != Token::Ident) fail("SYNTAX", "expected host piece name", host);
            Token dot = lex.next();
            if (dot.kind != Token::Dot) fail("SYNTAX", "expected '.'", dot);
            Token facekw = lex.next();
            if (facekw.kind != Token::Ident || facekw.text != "face") fail("SYNTAX", "expected 'face'", facekw);
            Token lp = lex.next();
            if (lp.kind != Token::LParen) fail("SYNTAX", "expected '('", lp);
            Token num = lex.next();
            if (num.kind != Token::Number) fail("SYNTAX", "expected face id", num);
            Token rp = lex.next();
            if (rp.kind != Token::RParen) fail("SYNTAX", "expected ')'", rp);
            raw_places.push_back({child.text, host.text, static_cast<int>(num.value), child});
        } else if (t.text == "outer") {
            Token name = lex.next();
            if (name.kind != Token::Ident) fail("SYNTAX", "expected piece name after 'outer'", name);
            Token dot = lex.next();
            if (dot.kind != Token::Dot) fail("SYNTAX", "expected '.'", dot);
            Token facekw = lex.next();
            if (facekw.kind != Token::Ident || facekw.text != "face") fail("SYNTAX", "expected 'face'", facekw);
            Token lp = lex.next();
            if (lp.kind != Token::LParen) fail("SYNTAX", "expected '('", lp);
            Token num = lex.next();
            if (num.kind != Token::Number) fail("SYNTAX", "expected face id", num);
            Token rp = lex.next();
            if (rp.kind != Token::RParen) fail("SYNTAX", "expected ')'", rp);
            raw_outers.push_back({name.text, static_cast<int>(num.value), name});
        } else {
            fail("SYNTAX", "unknown directive '" + t.text + "'", t);
        }
        t = lex.next();
    }

    for (const auto& rp : raw_places) {
        auto ci = piece_index.find(rp.child);
        if (ci == piece_index.end()) fail("UNKNOWN_PIECE", "unknown piece '" + rp.child + "'", rp.at);
        auto hi = piece_index.find(rp.host);
        if (hi == piece_index.end()) fail("UNKNOWN_PIECE", "unknown piece '" + rp.host + "'", rp.at);
        for (const auto& existing : d.placements)
            if (existing.child == ci->second)
                fail("PLACEMENT_CYCLE", "piece '" + rp.child + "' placed more than once", rp.at);
        d.placements.push_back({ci->second, hi->second, rp.face});
    }
    for (const auto& ro : raw_outers) {
        auto pi = piece_index.find(ro.piece);
        if (pi == piece_index.end()) fail("UNKNOWN_PIECE", "unknown piece '" + ro.piece + "'", ro.at);
        d.pieces[pi->second].outer_face = ro.face;
    }

    // Placements must form a forest: child pointers are unique (checked
    // above), so a cycle is the only remaining failure mode.
    {
        std::vector<int> parent(d.pieces.size(), -1);
        for (const auto& pl : d.placements) parent[pl.child] = pl.host;
        for (size_t start = 0; start < d.pieces.size(); ++start) {
            int hops = 0;
            for (int x = static_cast<int>(start); x >= 0; x = parent[x]) {
                if (++hops > static_cast<int>(d.pieces.size()))
                    throw ParseError("PLACEMENT_CYCLE", "placements form a cycle", 0, 0);
            }
        }
    }

    // Surface label-count problems at parse time.
    for (const auto& p : d.pieces) {
        std::vector<int> mate;
        local_mate_table(p, mate);
    }
    return d;
}

// ------------------------------------------------------------ validation ---

ValidationReport validate_diagram(const Diagram& d) {
    ValidationReport rep;
    if (d.pieces.empty()) {
        rep.fail("EMPTY_DIAGRAM", "a diagram needs at least one piece");
        return rep;
    }
    for (const auto& p : d.pieces) {
        std::vector<int> mate;
        int labels = 0;
        try {
            labels = local_mate_table(p, mate);
        } catch (const ParseError& e) {
            rep.fail(e.code, e.what(), p.name);
            continue;
        }
        if (!piece_connected(p)) {
            rep.fail("PIECE_DISCONNECTED", "piece is not connected", p.name);
            continue;
        }
        int faces = 0;
        local_face_map(p, mate, faces);
        if (!p.free_loop) {
            int v = static_cast<int>(p.crossings.size());
            int e = labels;
            if (v - e + faces != 2) {
                std::ostringstream msg;
                msg << "rotation system is not planar: V=" << v << " E=" << e << " F=" << faces
                    << " gives V-E+F=" << (v - e + faces);
                rep.fail("GENUS_NONZERO", msg.str(), p.name);
                continue;
            }
        }
        if (p.outer_face && (*p.outer_face < 0 || *p.outer_face >= faces))
            rep.fail("UNKNOWN_FACE",
                     "outer face " + std::to_string(*p.outer_face) + " does not exist (piece has " +
                         std::to_string(faces) + " faces)",
                     p.name);
    }
    for (const auto& pl : d.placements) {
        const Piece& host = d.pieces[pl.host];
        int faces = 0;
        try {
            std::vector<int> mate;
            local_mate_table(host, mate);
            local_face_map(host, mate, faces);
        } catch (const ParseError&) {
            continue;  // already reported above
        }
        if (pl.host_face < 0 || pl.host_face >= faces)
            rep.fail("UNKNOWN_FACE",
                     "host face " + std::to_string(pl.host_face) + " does not exist in piece " +
                         host.name,
                     d.pieces[pl.child].name);
    }
    // Forest check (parse enforces this too; diagrams can also be built in code).
    {
        std::vector<int> parent(d.pieces.size(), -1);
        for (const auto& pl : d.placements) {
            if (parent[pl.child] >= 0) {
                rep.fail("PLACEMENT_CYCLE", "piece placed more than once", d.pieces[pl.child].name);
                return rep;
            }
            parent[pl.child] = pl.host;
        }
        for (size_t start = 0; start < d.pieces.size(); ++start) {
            int hops = 0;
            for (int x = static_cast<int>(start); x >= 0; x = parent[x])
                if (++hops > static_cast<int>(d.pieces.size())) {
                    rep.fail("PLACEMENT_CYCLE", "placements form a cycle", d.pieces[start].name);
                    return rep;
                }
        }
    }
    return rep;
}

// -------------------------------------------------------------- analysis ---

void analyze(Diagram& d) {
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok) throw std::runtime_error("analyze: diagram failed validation: " + rep.errors[0].code);

    const int np = static_cast<int>(d.pieces.size());
    d.piece_dart_offset.assign(np + 1, 0);
    for (int p = 0; p < np; ++p)
        d.piece_dart_offset[p + 1] = d.piece_dart_offset[p] + d.pieces[p].dart_count();
    d.n_darts = d.piece_dart_offset[np];

    // Global edges. Crossing pieces enumerate labels in ascending order,
    // a free loop contributes a single edge.
    d.edges.clear();
    d.crossings.clear();
    d.dart_mate.assign(d.n_darts, -1);
    d.edge_of_dart.assign(d.n_darts, -1);
    for (int p = 0; p < np; ++p) {
        const Piece& piece = d.pieces[p];
        const int base = d.piece_dart_offset[p];
        if (piece.free_loop) {
            EdgeInfo e;
            e.piece = p;
            e.label = -1;
            e.darts = {base, base + 1};
            d.edge_of_dart[base] = d.edge_of_dart[base + 1] = static_cast<int>(d.edges.size());
            d.dart_mate[base] = base + 1;
            d.dart_mate[base + 1] = base;
            d.edges.push_back(e);
            continue;
        }
        std::map<long long, std::vector<int>> occ;
        for (size_t ci = 0; ci < piece.crossings.size(); ++ci)
            for (int k = 0; k < 4; ++k)
                occ[piece.crossings[ci].edge[k]].push_back(base + 4 * static_cast<int>(ci) + k);
        std::map<long long, int> edge_id;
        for (const auto& [label, darts] : occ) {
            EdgeInfo e;
            e.piece = p;
            e.label = label;
            e.darts = {darts[0], darts[1]};
            d.dart_mate[darts[0]] = darts[1];
            d.dart_mate[darts[1]] = darts[0];
            d.edge_of_dart[darts[0]] = d.edge_of_dart[darts[1]] = static_cast<int>(d.edges.size());
            edge_id[label] = static_cast<int>(d.edges.size());
            d.edges.push_back(e);
        }
        for (size_t ci = 0; ci < piece.crossings.size(); ++ci) {
            CrossingInfo info;
            info.piece = p;
            info.index_in_piece = static_cast<int>(ci);
            info.dart0 = base + 4 * static_cast<int>(ci);
            for (int k = 0; k < 4; ++k) info.edge[k] = edge_id[piece.crossings[ci].edge[k]];
            d.crossings.push_back(info);
        }
    }

    // Local orbits per piece; each is one boundary curve.
    struct Orbit {
        int piece;
        int local_face;
        std::vector<int> darts;  // global ids, walk order
    };
    std::vector<Orbit> orbits;
    std::vector<std::vector<int>> piece_local_orbit(np);  // local face -> orbit index
    std::vector<int> orbit_of_dart(d.n_darts, -1);
    for (int p = 0; p < np; ++p) {
        const Piece& piece = d.pieces[p];
        const int base = d.piece_dart_offset[p];
        std::vector<int> mate;
        local_mate_table(piece, mate);
        int nfaces = 0;
        std::vector<int> lf = local_face_map(piece, mate, nfaces);
        piece_local_orbit[p].assign(nfaces, -1);
        if (piece.free_loop) {
            for (int side = 0; side < 2; ++side) {
                piece_local_orbit[p][side] = static_cast<int>(orbits.size());
                orbit_of_dart[base + side] = static_cast<int>(orbits.size());
                orbits.push_back({p, side, {base + side}});
            }
            continue;
        }
        std::vector<char> seen(piece.dart_count(), 0);
        for (int d0 = 0; d0 < piece.dart_count(); ++d0) {
            if (seen[d0]) continue;
            Orbit orb;
            orb.piece = p;
            orb.local_face = lf[d0];
            int dd = d0;
            do {
                seen[dd] = 1;
                orb.darts.push_back(base + dd);
                orbit_of_dart[base + dd] = static_cast<int>(orbits.size());
                int e = mate[dd];
                dd = (e & ~3) | ((e + 1) & 3);
            } while (dd != d0);
            piece_local_orbit[p][orb.local_face] = static_cast<int>(orbits.size());
            orbits.push_back(std::move(orb));
        }
    }

    // Merge local faces into global faces: a child's outer face joins its
    // host face, and all top-level outer faces join the unbounded face.
    UnionFind uf(static_cast<int>(orbits.size()));
    std::vector<char> placed(np, 0);
    for (const auto& pl : d.placements) {
        placed[pl.child] = 1;
        int child_outer = piece_local_orbit[pl.child][d.pieces[pl.child].default_outer()];
        int host_face = piece_local_orbit[pl.host][pl.host_face];
        uf.unite(child_outer, host_face);
    }
    int first_top_outer = -1;
    for (int p = 0; p < np; ++p) {
        if (placed[p]) continue;
        int outer = piece_local_orbit[p][d.pieces[p].default_outer()];
        if (first_top_outer < 0)
            first_top_outer = outer;
        else
            uf.unite(outer, first_top_outer);
    }

    // Face ids by minimal incident dart.
    std::vector<int> face_min_dart(orbits.size(), -1);
    for (int dart = 0; dart < d.n_darts; ++dart) {
        int root = uf.find(orbit_of_dart[dart]);
        if (face_min_dart[root] < 0) face_min_dart[root] = dart;
    }
    std::vector<int> roots;
    for (size_t i = 0; i < orbits.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
    std::sort(roots.begin(), roots.end(),
              [&](int a, int b) { return face_min_dart[a] < face_min_dart[b]; });

    d.faces.assign(roots.size(), {});
    std::vector<int> face_of_root(orbits.size(), -1);
    for (size_t f = 0; f < roots.size(); ++f) {
        face_of_root[roots[f]] = static_cast<int>(f);
        d.faces[f].id = static_cast<int>(f);
    }
    int unbounded_root = uf.find(first_top_outer);
    d.faces[face_of_root[unbounded_root]].unbounded = true;

    d.face_of_dart.assign(d.n_darts, -1);
    d.curve_of_dart.assign(d.n_darts, -1);
    // Boundary curves in ascending min-dart order within each face.
    {
        std::vector<int> orbit_order(orbits.size());
        std::iota(orbit_order.begin(), orbit_order.end(), 0);
        std::sort(orbit_order.begin(), orbit_order.end(),
                  [&](int a, int b) { return orbits[a].darts.front() < orbits[b].darts.front(); });
        for (int oi : orbit_order) {
            int f = face_of_root[uf.find(oi)];
            int curve = static_cast<int>(d.faces[f].boundary_curves.size());
            d.faces[f].boundary_curves.push_back(orbits[oi].darts);
            for (int dart : orbits[oi].darts) {
                d.face_of_dart[dart] = f;
                d.curve_of_dart[dart] = curve;
            }
        }
    }

    d.piece_local_faces.assign(np, {});
    for (int p = 0; p < np; ++p) {
        d.piece_local_faces[p].resize(piece_local_orbit[p].size());
        for (size_t lf = 0; lf < piece_local_orbit[p].size(); ++lf)
            d.piece_local_faces[p][lf] = face_of_root[uf.find(piece_local_orbit[p][lf])];
    }

    // Arcs: edges merged through over-passes (slots 1-3). Link components
    // additionally merge through under-passes (slots 0-2).
    const int ne = static_cast<int>(d.edges.size());
    UnionFind arc_uf(ne), comp_uf(ne);
    for (const auto& c : d.crossings) {
        arc_uf.unite(c.edge[1], c.edge[3]);
        comp_uf.unite(c.edge[1], c.edge[3]);
        comp_uf.unite(c.edge[0], c.edge[2]);
    }
    auto build_classes = [&](UnionFind& uf2, auto assign_id) {
        std::map<int, std::vector<int>> classes;
        for (int e = 0; e < ne; ++e) classes[uf2.find(e)].push_back(e);
        int id = 0;
        for (auto& [root, members] : classes) assign_id(id++, members);
        (void)id;
    };
    d.arcs.clear();
    build_classes(arc_uf, [&](int id, std::vector<int>& members) {
        Arc a;
        a.id = id;
        a.edges = members;
        a.free_loop = d.edges[members[0]].label < 0;
        for (int e : members) d.edges[e].arc = id;
        d.arcs.push_back(std::move(a));
    });
    d.components.clear();
    build_classes(comp_uf, [&](int id, std::vector<int>& members) {
        LinkComponent k;
        k.id = id;
        k.edges = members;
        for (int e : members) d.edges[e].component = id;
        d.components.push_back(std::move(k));
    });

    d.adjacencies.clear();
    for (int e = 0; e < ne; ++e) {
        const EdgeInfo& info = d.edges[e];
        FaceAdjacency adj;
        adj.edge = e;
        adj.face_a = d.face_of_dart[std::min(info.darts[0], info.darts[1])];
        adj.face_b = d.face_of_dart[std::max(info.darts[0], info.darts[1])];
        adj.arc = info.arc;
        adj.component = info.component;
        d.adjacencies.push_back(adj);
    }

    d.analyzed = true;
}

int Diagram::unbounded_face() const {
    for (const auto& f : faces)
        if (f.unbounded) return f.id;
    throw std::logic_error("diagram has no unbounded face (not analyzed?)");
}

Diagram load_diagram(std::string_view text) {
    Diagram d = parse_diagram(text);
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok)
        throw std::runtime_error("invalid diagram: " + rep.errors[0].code + ": " +
                                 rep.errors[0].message);
    analyze(d);
    return d;
}

Diagram flatten_placements(const Diagram& d) {
    Diagram out;
    out.pieces = d.pieces;
    analyze(out);
    return out;
}

Diagram top_level_subdiagram(const Diagram& d, int root_piece) {
    std::vector<int> keep;
    std::vector<char> in(d.pieces.size(), 0);
    in[root_piece] = 1;
    keep.push_back(root_piece);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& pl : d.placements)
            if (in[pl.host] && !in[pl.child]) {
                in[pl.child] = 1;
                keep.push_back(pl.child);
                grew = true;
            }
    }
    std::sort(keep.begin(), keep.end());
    std::vector<int> remap(d.pieces.size(), -1);
    Diagram out;
    for (int p : keep) {
        remap[p] = static_cast<int>(out.pieces.size());
        out.pieces.push_back(d.pieces[p]);
    }
    for (const auto& pl : d.placements)
        if (in[pl.child] && in[pl.host])
            out.placements.push_back({remap[pl.child], remap[pl.host], pl.host_face});
    analyze(out);
    return out;
}

}  // namespace goeritz
