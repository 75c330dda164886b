#pragma once

#include "goeritz/abelian.hpp"
#include "goeritz/diagram.hpp"
#include "goeritz/shading.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace goeritz {

/// Brute-force enumeration refuses to scan more assignments than this.
/// The CLI can override it through GOERITZ_ENUM_CAP.
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

struct ColoringError : std::runtime_error {
    std::string code;
    ColoringError(std::string code_, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code_)) {}
};

/// Arc labeling with f(a1) + f(a2) = 2 f(a3) at every crossing
/// (a1, a2 under, a3 over).
struct FoxColoring {
    long long modulus = 2;
    std::vector<long long> values;  // per arc id
};

/// Face labeling with d(q0) + d(q1) = d(q2) + d(q3) at every crossing.
struct DehnColoring {
    long long modulus = 2;
    std::vector<long long> values;  // per face id
};

/// One row per crossing over the arcs: +1, +1 at the under-arcs, -2 at the
/// over-arc (entries accumulate when arcs coincide).
IntMatrix fox_matrix(const Diagram& d);

/// One row per crossing over the faces: +1, +1, -1, -1 on the quadrants.
IntMatrix dehn_matrix(const Diagram& d);

bool is_fox_coloring(const Diagram& d, const FoxColoring& f);
bool is_dehn_coloring(const Diagram& d, const DehnColoring& dc);

bool fox_enum_within_cap(const Diagram& d, long long m, std::uint64_t cap = kDefaultEnumCap);
bool dehn_enum_within_cap(const Diagram& d, long long m, std::uint64_t cap = kDefaultEnumCap);

/// All Fox colorings over Z/m by exhaustive search. Throws CAP_EXCEEDED when
/// m^#arcs is past the cap.
std::vector<FoxColoring> enumerate_fox_mod_m(const Diagram& d, long long m,
                                             std::uint64_t cap = kDefaultEnumCap);
std::vector<DehnColoring> enumerate_dehn_mod_m(const Diagram& d, long long m,
                                               std::uint64_t cap = kDefaultEnumCap);

/// Structure of the Fox coloring group: ker_A G(D,s) + A^(beta-1).
FgAbelianGroup fox_group(const Diagram& d, const Shading& s, const FgAbelianGroup& coeff);
/// Structure of the Dehn coloring group: ker_A G(D,s) + A^beta.
FgAbelianGroup dehn_group(const Diagram& d, const Shading& s, const FgAbelianGroup& coeff);

/// phi: Dehn -> Fox, f(a) = d(F) + d(F') across any edge of a. Throws
/// INCONSISTENT_DEHN when edge sums disagree along an arc.
FoxColoring phi_map(const Diagram& d, const DehnColoring& dc);

/// Section of phi: propagates d(F') = f(a) - d(F) over face adjacency from
/// base_face = alpha0 and checks every adjacency. Throws INCONSISTENT_FOX
/// when the input is not a Fox coloring.
DehnColoring lift_fox_to_dehn(const Diagram& d, const FoxColoring& f, int base_face,
                              long long alpha0);

/// Restriction of a Dehn coloring to the unshaded faces, in Goeritz matrix
/// order; the result is checked to lie in ker G.
ModVector v_map(const Diagram& d, const Shading& s, const GoeritzMatrix& g, const DehnColoring& dc);
ModVector v_map(const Diagram& d, const Shading& s, const DehnColoring& dc);

/// Section of v: fills the shaded faces by propagation over the shaded
/// checkerboard graph, seeded by one value per component (0 when absent).
/// Throws NOT_IN_KERNEL when the vector is not annihilated by G.
DehnColoring extend_kernel_to_dehn(const Diagram& d, const Shading& s, const ModVector& v,
                                   const std::map<int, long long>& seeds = {});

/// Parity table idx[face][component]: crossings of a path from the face to
/// the unbounded face with each link component, mod 2.
std::vector<std::vector<std::uint8_t>> face_component_indices(const Diagram& d);
int face_component_index(const Diagram& d, int face, int component);

struct CheckRow {
    std::string check;
    int shading = -1;        // 0/1 = ref value of the shading, -1 = n/a
    long long modulus = 0;   // 0 = n/a
    std::string expected;
    std::string actual;
    bool pass = true;
    bool skipped = false;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckRow> rows;
    bool all_pass() const;
    int failed_count() const;
    int skipped_count() const;
};

/// Exponent-2 checks: Fox colorings over Z/2 are the component-constant
/// maps, ker G over Z/2 is spanned by the all-ones and index vectors, and
/// its dimension is mu - beta + 1.
VerifyReport exponent2_kernel_check(const Diagram& d, const Shading& s);

/// Runs the counting, round-trip, orthogonality and invariance checks for
/// the given moduli, over both shadings. Enumerations beyond the cap are
/// reported as skipped rows, never failures.
VerifyReport verify_theorems(const Diagram& d, const std::vector<long long>& moduli,
                             std::uint64_t cap = kDefaultEnumCap);

/// Coefficient groups used by the isomorphism-invariance checks.
const std::vector<FgAbelianGroup>& standard_coefficient_samples();

struct ModulusCounts {
    long long modulus = 0;
    std::optional<Int> fox_enumerated;   // absent when the cap was hit
    std::optional<Int> dehn_enumerated;
    Int fox_predicted;
    Int dehn_predicted;
};

/// Everything the `invariants` command reports for one diagram + shading.
struct ColoringReport {
    int pieces = 0, crossings = 0, edges = 0, arcs = 0, faces = 0, components = 0;
    Shading shading;
    int beta = 0;
    GoeritzMatrix goeritz;
    std::vector<int> eta;
    SnfResult snf;
    FgAbelianGroup coefficient;
    FgAbelianGroup kernel;
    FgAbelianGroup fox;
    FgAbelianGroup dehn;
    std::vector<ModulusCounts> counts;
};

ColoringReport coloring_report(const Diagram& d, const Shading& s, const FgAbelianGroup& coeff,
                               const std::vector<long long>& moduli,
                               std::uint64_t cap = kDefaultEnumCap);

}  // namespace goeritz
