#include "goeritz/shading.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace goeritz {

Shading checkerboard_shade(const Diagram& d, int ref_face, int ref_value) {
    if (!d.analyzed) throw std::logic_error("checkerboard_shade: diagram not analyzed");
    if (ref_face < 0 || ref_face >= static_cast<int>(d.faces.size()))
        throw std::invalid_argument("checkerboard_shade: no such face");
    if (ref_value != 0 && ref_value != 1)
        throw std::invalid_argument("checkerboard_shade: ref value must be 0 or 1");

    Shading s;
    s.ref_face = ref_face;
    s.ref_value = ref_value;
    s.sigma.assign(d.faces.size(), 2);

    std::vector<std::vector<int>> nbr(d.faces.size());
    for (const auto& adj : d.adjacencies) {
        nbr[adj.face_a].push_back(adj.face_b);
        nbr[adj.face_b].push_back(adj.face_a);
    }
    std::queue<int> work;
    s.sigma[ref_face] = static_cast<std::uint8_t>(ref_value);
    work.push(ref_face);
    while (!work.empty()) {
        int f = work.front();
        work.pop();
        for (int g : nbr[f]) {
            std::uint8_t want = 1 - s.sigma[f];
            if (s.sigma[g] == 2) {
                s.sigma[g] = want;
                work.push(g);
            } else if (s.sigma[g] != want) {
                throw std::logic_error("checkerboard parity conflict (bug: faces not 2-colorable)");
            }
        }
    }
    for (std::uint8_t v : s.sigma)
        if (v == 2) throw std::logic_error("face adjacency graph disconnected (bug)");
    return s;
}

int TaitGraph::component_count() const {
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> index_of(vertices.empty() ? 0 : vertices.back() + 1, -1);
    for (size_t i = 0; i < vertices.size(); ++i) index_of[vertices[i]] = static_cast<int>(i);
    for (const auto& e : edges) parent[find(index_of[e.face_u])] = find(index_of[e.face_v]);
    int n = 0;
    for (size_t i = 0; i < vertices.size(); ++i) n += find(static_cast<int>(i)) == static_cast<int>(i);
    return n;
}

TaitGraph tait_graph(const Diagram& d, const Shading& s, int color) {
    TaitGraph g;
    g.color = color;
    for (const auto& f : d.faces)
        if (s.sigma[f.id] == color) g.vertices.push_back(f.id);
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        int ci = static_cast<int>(c);
        // The two same-color quadrants are a diagonal pair: q0/q2 or q1/q3.
        int base = (s.sigma[d.quadrant_face(ci, 0)] == color) ? 0 : 1;
        TaitGraph::Edge e;
        e.crossing = ci;
        e.face_u = d.quadrant_face(ci, base);
        e.face_v = d.quadrant_face(ci, base + 2);
        e.eta = goeritz_index(d, s, ci);
        g.edges.push_back(e);
    }
    return g;
}

int beta_count(const Diagram& d, const Shading& s) {
    return tait_graph(d, s, 1).component_count();
}

int goeritz_index(const Diagram& d, const Shading& s, int crossing) {
    return s.sigma[d.quadrant_face(crossing, 0)] == 0 ? +1 : -1;
}

GoeritzMatrix goeritz_matrix(const Diagram& d, const Shading& s) {
    GoeritzMatrix g;
    g.index_of_face.assign(d.faces.size(), -1);
    for (const auto& f : d.faces)
        if (s.sigma[f.id] == 0) {
            g.index_of_face[f.id] = static_cast<int>(g.face_order.size());
            g.face_order.push_back(f.id);
        }
    const int n = static_cast<int>(g.face_order.size());
    g.matrix = IntMatrix(n, n);
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        int ci = static_cast<int>(c);
        int base = (s.sigma[d.quadrant_face(ci, 0)] == 0) ? 0 : 1;
        int fi = d.quadrant_face(ci, base);
        int fj = d.quadrant_face(ci, base + 2);
        if (fi == fj) continue;  // only one unshaded face incident
        int eta = goeritz_index(d, s, ci);
        int i = g.index_of_face[fi];
        int j = g.index_of_face[fj];
        g.matrix.at(i, j) -= eta;
        g.matrix.at(j, i) -= eta;
    }
    for (int i = 0; i < n; ++i) {
        Int sum = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) sum += g.matrix.at(i, j);
        g.matrix.at(i, i) = -sum;
    }
    return g;
}

RhoVector boundary_rho(const Diagram& d, const Shading& s, int face, int curve) {
    if (face < 0 || face >= static_cast<int>(d.faces.size()))
        throw std::invalid_argument("boundary_rho: no such face");
    if (s.sigma[face] != 0) throw std::invalid_argument("boundary_rho: face is shaded");
    if (curve < 0 || curve >= static_cast<int>(d.faces[face].boundary_curves.size()))
        throw std::invalid_argument("boundary_rho: no such boundary curve");

    GoeritzMatrix g = goeritz_matrix(d, s);
    RhoVector rho;
    rho.face = face;
    rho.curve = curve;
    rho.entries.assign(g.face_order.size(), Int(0));
    const int i = g.index_of_face[face];

    for (size_t c = 0; c < d.crossings.size(); ++c) {
        int ci = static_cast<int>(c);
        int base = (s.sigma[d.quadrant_face(ci, 0)] == 0) ? 0 : 1;
        int fa = d.quadrant_face(ci, base);
        int fb = d.quadrant_face(ci, base + 2);
        if (fa == fb) continue;
        int other;
        int own_quad;
        if (fa == face) {
            other = fb;
            own_quad = base;
        } else if (fb == face) {
            other = fa;
            own_quad = base + 2;
        } else {
            continue;
        }
        // The crossing lies on the boundary curve that owns this corner.
        if (d.curve_of_dart[d.quadrant_dart(ci, own_quad)] != curve) continue;
        rho.entries[g.index_of_face[other]] -= goeritz_index(d, s, ci);
    }
    Int sum = 0;
    for (int j = 0; j < static_cast<int>(rho.entries.size()); ++j)
        if (j != i) sum += rho.entries[j];
    rho.entries[i] = -sum;
    return rho;
}

}  // namespace goeritz
