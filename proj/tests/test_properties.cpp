#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goeritz/colorings.hpp"

#include <map>
#include <random>
#include <sstream>

using namespace goeritz;

namespace {

// Trace closure of a random braid word, emitted as diagram-file text.
// Braid closures are always planar, so they make good random inputs.
//
// Strand segments carry fresh labels; a crossing at position i swaps the
// strands and mints two output labels. For a positive generator the
// descending-left strand passes over (slots: under in, over in, under out,
// over out, counterclockwise), for a negative one the other way. The
// closure merges each strand's final label with its initial one; a strand
// no crossing touches closes into a free loop. Connected groups of
// crossings become separate pieces, side by side unless nested below.
std::string random_braid_closure(std::mt19937& rng, int strands, int length, bool try_nesting) {
    std::vector<long long> cur(strands), init(strands);
    long long next_label = 1;
    for (int j = 0; j < strands; ++j) cur[j] = init[j] = next_label++;

    std::vector<std::array<long long, 4>> xs;
    std::uniform_int_distribution<int> pos(0, strands - 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = 0; k < length; ++k) {
        int i = pos(rng);
        long long a = cur[i], b = cur[i + 1];
        long long c = next_label++, d = next_label++;
        if (coin(rng))
            xs.push_back({b, a, c, d});
        else
            xs.push_back({a, c, d, b});
        cur[i] = c;
        cur[i + 1] = d;
    }

    // close up: final labels fold back onto the initial ones
    std::map<long long, long long> fold;
    int free_loops = 0;
    for (int j = 0; j < strands; ++j) {
        if (cur[j] == init[j])
            ++free_loops;
        else
            fold[cur[j]] = init[j];
    }
    for (auto& x : xs)
        for (auto& e : x)
            if (auto it = fold.find(e); it != fold.end()) e = it->second;

    // split the crossings into connected groups
    std::vector<int> parent(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::map<long long, int> first_seen;
    for (size_t i = 0; i < xs.size(); ++i)
        for (long long e : xs[i]) {
            auto [it, fresh] = first_seen.try_emplace(e, static_cast<int>(i));
            if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
        }
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < xs.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

    std::ostringstream out;
    int piece_count = 0;
    for (const auto& [root, members] : groups) {
        out << "piece g" << piece_count++ << " {";
        for (size_t k = 0; k < members.size(); ++k) {
            const auto& x = xs[members[k]];
            out << (k ? " ; " : " ") << "X " << x[0] << " " << x[1] << " " << x[2] << " " << x[3];
        }
        out << " }\n";
    }
    for (int j = 0; j < free_loops; ++j) out << "piece o" << j << " { O }\n";
    int total_pieces = piece_count + free_loops;

    if (try_nesting && total_pieces >= 2 && coin(rng)) {
        // drop one piece into a random face of the first one
        Diagram probe = load_diagram(out.str());
        std::uniform_int_distribution<int> child(1, total_pieces - 1);
        int c = child(rng);
        std::uniform_int_distribution<int> face(0, piece_local_face_count(probe.pieces[0]) - 1);
        out << "place " << probe.pieces[c].name << " in " << probe.pieces[0].name << ".face("
            << face(rng) << ")\n";
    }
    return out.str();
}

}  // namespace

TEST_CASE("random braid closures validate and satisfy the counting laws") {
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> strands(2, 5), length(0, 8);
    const std::uint64_t small_cap = 300000;

    for (int trial = 0; trial < 60; ++trial) {
        std::string src = random_braid_closure(rng, strands(rng), length(rng), true);
        INFO("diagram:\n", src);
        Diagram d = load_diagram(src);  // parses, validates, analyzes

        // one arc per under-pass, plus one unbroken arc per component that
        // never passes under (free loops are the crossing-free case)
        std::vector<char> has_under(d.components.size(), 0);
        for (size_t c = 0; c < d.crossings.size(); ++c) {
            int ci = static_cast<int>(c);
            has_under[d.edges[d.crossings[ci].edge[0]].component] = 1;
        }
        int unbroken = 0;
        for (char h : has_under) unbroken += h ? 0 : 1;
        CHECK(d.arcs.size() == d.crossings.size() + unbroken);

        for (int sval : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), sval);
            GoeritzMatrix g = goeritz_matrix(d, s);
            int beta = beta_count(d, s);
            // matrix shape and symmetry
            CHECK(static_cast<int>(g.face_order.size()) ==
                  static_cast<int>(d.faces.size()) - static_cast<int>(tait_graph(d, s, 1).vertices.size()));
            for (int i = 0; i < g.matrix.rows; ++i) {
                Int sum = 0;
                for (int j = 0; j < g.matrix.cols; ++j) {
                    CHECK(g.matrix.at(i, j) == g.matrix.at(j, i));
                    sum += g.matrix.at(i, j);
                }
                CHECK(sum == 0);
            }

            for (long long m : {2, 3}) {
                Int ker = solution_count_mod_m(g.matrix, m);
                if (fox_enum_within_cap(d, m, small_cap)) {
                    Int fox = Int(enumerate_fox_mod_m(d, m, small_cap).size());
                    CHECK(fox == ker * boost::multiprecision::pow(Int(m), beta - 1));
                    if (dehn_enum_within_cap(d, m, small_cap)) {
                        Int dehn = Int(enumerate_dehn_mod_m(d, m, small_cap).size());
                        CHECK(dehn == m * fox);
                    }
                }
                // v . u stays the identity on random diagrams
                for (const auto& v : kernel_basis_mod_m(g.matrix, m)) {
                    DehnColoring u = extend_kernel_to_dehn(d, s, v);
                    CHECK(v_map(d, s, g, u).entries == v.entries);
                }
            }

            // exponent-2 dimension formula
            SnfResult snf = smith_normal_form(g.matrix);
            int dim = static_cast<int>(g.face_order.size()) - snf.rank;
            for (const Int& di : snf.diag)
                if (di % 2 == 0) ++dim;
            CHECK(dim == d.mu() - beta + 1);
        }

        // the two shadings give isomorphic coloring groups
        Shading s0 = checkerboard_shade(d, d.unbounded_face(), 0);
        Shading s1 = checkerboard_shade(d, d.unbounded_face(), 1);
        for (const char* spec : {"Z", "Z/4", "Z/6", "Z/2+Z/8"}) {
            FgAbelianGroup coeff = FgAbelianGroup::parse(spec);
            CHECK(groups_isomorphic(fox_group(d, s0, coeff), fox_group(d, s1, coeff)));
        }
    }
}

TEST_CASE("random lifts and phi round-trip on random braid closures") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> strands(2, 4), length(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        Diagram d = load_diagram(random_braid_closure(rng, strands(rng), length(rng), false));
        const long long m = 3;
        if (!fox_enum_within_cap(d, m, 20000)) continue;
        auto foxes = enumerate_fox_mod_m(d, m, 20000);
        std::uniform_int_distribution<size_t> pick(0, foxes.size() - 1);
        for (int k = 0; k < 8; ++k) {
            const FoxColoring& f = foxes[pick(rng)];
            DehnColoring lifted = lift_fox_to_dehn(d, f, d.unbounded_face(), k % m);
            CHECK(is_dehn_coloring(d, lifted));
            CHECK(phi_map(d, lifted).values == f.values);
        }
    }
}

TEST_CASE("re-nesting random split closures preserves the fox group") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> strands(3, 5), length(1, 6);
    int exercised = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Diagram d = load_diagram(random_braid_closure(rng, strands(rng), length(rng), true));
        if (d.placements.empty()) continue;
        ++exercised;
        Diagram flat = flatten_placements(d);
        CHECK(flat.arcs.size() == d.arcs.size());
        CHECK(flat.components.size() == d.components.size());
        Shading sd = checkerboard_shade(d, d.unbounded_face(), 0);
        Shading sf = checkerboard_shade(flat, flat.unbounded_face(), 0);
        for (const char* spec : {"Z", "Z/9", "Z/2+Z/4"}) {
            FgAbelianGroup coeff = FgAbelianGroup::parse(spec);
            CHECK(groups_isomorphic(fox_group(d, sd, coeff), fox_group(flat, sf, coeff)));
            CHECK(groups_isomorphic(dehn_group(d, sd, coeff), dehn_group(flat, sf, coeff)));
        }
    }
    CHECK(exercised > 0);
}
