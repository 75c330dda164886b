#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goeritz {

// A link diagram is a forest of connected pieces. Each piece is either a
// free loop (crossing-free circle) or a connected 4-valent rotation system
// given by PD-style records: X e0 e1 e2 e3, edge labels counterclockwise,
// slots 0 and 2 carrying the under-strand.
//
// Darts: a crossing owns four darts, one per slot; a free loop owns two,
// one per side (dart 0 on the outer side). Faces are the orbits of
// rot(mate(dart)) where rot advances one slot counterclockwise and mate
// jumps to the other occurrence of the edge label. The quadrant q_i of a
// crossing, the sector counterclockwise from slot i to slot i+1, belongs
// to the orbit containing dart i+1.

struct ParseError : std::runtime_error {
    std::string code;
    int line = 0;
    int col = 0;
    ParseError(std::string code_, const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), code(std::move(code_)), line(line_), col(col_) {}
};

struct Crossing {
    std::array<long long, 4> edge;  // local labels, ccw, slots 0/2 under
};

struct Piece {
    std::string name;
    bool free_loop = false;
    std::vector<Crossing> crossings;
    std::optional<int> outer_face;  // local face id; defaults to face 0

    int dart_count() const { return free_loop ? 2 : 4 * static_cast<int>(crossings.size()); }
    int default_outer() const { return outer_face.value_or(0); }
};

struct Placement {
    int child = -1;
    int host = -1;
    int host_face = 0;  // local face id within host
};

struct Face {
    int id = 0;
    // One dart orbit per constituent boundary curve; curves from merged
    // pieces in split/nested diagrams stack up here.
    std::vector<std::vector<int>> boundary_curves;
    bool unbounded = false;
};

struct Arc {
    int id = 0;
    std::vector<int> edges;  // global edge ids
    bool free_loop = false;
};

struct LinkComponent {
    int id = 0;
    std::vector<int> edges;
};

struct EdgeInfo {
    int piece = 0;
    long long label = -1;  // -1 for a free loop's edge
    std::array<int, 2> darts{-1, -1};
    int arc = -1;
    int component = -1;
};

struct CrossingInfo {
    int piece = 0;
    int index_in_piece = 0;
    int dart0 = 0;                 // global dart id of slot 0
    std::array<int, 4> edge{};     // global edge ids per slot
};

struct FaceAdjacency {
    int edge = 0;
    int face_a = 0;  // side of the lower-numbered dart
    int face_b = 0;
    int arc = 0;
    int component = 0;
};

struct ValidationIssue {
    std::string code;
    std::string message;
    std::string location;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> errors;

    void fail(std::string code, std::string message, std::string location = {}) {
        ok = false;
        errors.push_back({std::move(code), std::move(message), std::move(location)});
    }
};

class Diagram {
public:
    std::vector<Piece> pieces;
    std::vector<Placement> placements;

    // Everything below is derived by analyze() and immutable afterwards.
    bool analyzed = false;
    int n_darts = 0;
    std::vector<int> piece_dart_offset;
    std::vector<int> dart_mate;
    std::vector<int> edge_of_dart;
    std::vector<int> face_of_dart;
    std::vector<int> curve_of_dart;  // index into faces[f].boundary_curves
    std::vector<CrossingInfo> crossings;
    std::vector<EdgeInfo> edges;
    std::vector<Face> faces;
    std::vector<Arc> arcs;
    std::vector<LinkComponent> components;
    std::vector<FaceAdjacency> adjacencies;
    std::vector<std::vector<int>> piece_local_faces;  // piece -> local face -> global face

    int mu() const { return static_cast<int>(components.size()); }
    int unbounded_face() const;

    int quadrant_dart(int crossing, int q) const {
        return crossings[crossing].dart0 + ((q + 1) & 3);
    }
    int quadrant_face(int crossing, int q) const { return face_of_dart[quadrant_dart(crossing, q)]; }

    /// Arc carrying the under-strand end at slot 0 / slot 2, and the over-strand.
    int under_arc(int crossing, int end) const { return edges[crossings[crossing].edge[end ? 2 : 0]].arc; }
    int over_arc(int crossing) const { return edges[crossings[crossing].edge[1]].arc; }
};

/// Parses the diagram file format. Throws ParseError on syntax and
/// structural label problems (duplicate labels, unknown piece names,
/// placement cycles).
Diagram parse_diagram(std::string_view text);

/// Checks the parsed structure: nonempty, pieces connected and genus 0,
/// placements a forest with existing host faces.
ValidationReport validate_diagram(const Diagram& d);

/// Derives faces, arcs, link components and the face adjacency list.
/// Requires validate_diagram(d).ok.
void analyze(Diagram& d);

/// parse + validate + analyze; throws std::runtime_error on invalid input.
Diagram load_diagram(std::string_view text);

/// Per-piece face count of the standalone piece (local orbits).
int piece_local_face_count(const Piece& p);

/// The same diagram with all placements dropped (pieces side by side).
Diagram flatten_placements(const Diagram& d);

/// The connected sub-diagram consisting of one top-level piece and all
/// pieces nested inside it.
Diagram top_level_subdiagram(const Diagram& d, int root_piece);

}  // namespace goeritz
