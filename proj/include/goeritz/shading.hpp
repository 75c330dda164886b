#pragma once

#include "goeritz/abelian.hpp"
#include "goeritz/diagram.hpp"

#include <cstdint>
#include <vector>

namespace goeritz {

/// One of the two checkerboard 2-colorings of the faces. sigma is 0 on
/// unshaded faces and 1 on shaded ones.
struct Shading {
    int ref_face = 0;
    int ref_value = 0;
    std::vector<std::uint8_t> sigma;
};

Shading checkerboard_shade(const Diagram& d, int ref_face, int ref_value);

inline Shading opposite_shading(const Diagram& d, const Shading& s) {
    return checkerboard_shade(d, s.ref_face, 1 - s.ref_value);
}

/// Checkerboard graph: one vertex per face of the chosen color, one edge per
/// crossing joining the two same-color quadrant faces (loops allowed).
struct TaitGraph {
    int color = 1;  // matches sigma values of the vertices
    std::vector<int> vertices;
    struct Edge {
        int crossing;
        int face_u;
        int face_v;
        int eta;
    };
    std::vector<Edge> edges;
    int component_count() const;
};

TaitGraph tait_graph(const Diagram& d, const Shading& s, int color);

/// Number of connected components of the shaded checkerboard graph.
int beta_count(const Diagram& d, const Shading& s);

/// Goeritz index of a crossing: +1 when the quadrants immediately
/// counterclockwise of the under-strand slots (q0 and q2) are unshaded,
/// -1 otherwise. Flipping the shading negates every index.
int goeritz_index(const Diagram& d, const Shading& s, int crossing);

/// Unreduced Goeritz matrix over the unshaded faces, in ascending face-id
/// order. Symmetric with zero row and column sums; crossings incident on
/// only one unshaded face contribute nothing.
struct GoeritzMatrix {
    std::vector<int> face_order;     // unshaded face ids, ascending
    std::vector<int> index_of_face;  // face id -> row index, -1 if shaded
    IntMatrix matrix;
};

GoeritzMatrix goeritz_matrix(const Diagram& d, const Shading& s);

/// Row-style vector of one boundary curve of an unshaded face: entry j is
/// minus the sum of Goeritz indices over crossings on the curve shared with
/// face j, and the own entry balances the rest to zero.
struct RhoVector {
    int face = 0;
    int curve = 0;
    std::vector<Int> entries;
};

RhoVector boundary_rho(const Diagram& d, const Shading& s, int face, int curve);

}  // namespace goeritz
