#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goeritz/examples.hpp"
#include "goeritz/json_io.hpp"
#include "goeritz/shading.hpp"

using namespace goeritz;

namespace {

Diagram example(const std::string& name) { return load_diagram(example_source(name)); }

Shading default_shading(const Diagram& d) { return checkerboard_shade(d, d.unbounded_face(), 0); }

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_symmetric_zero_sums(const IntMatrix& g) {
    for (int i = 0; i < g.rows; ++i) {
        Int row = 0, col = 0;
        for (int j = 0; j < g.cols; ++j) {
            CHECK(g.at(i, j) == g.at(j, i));
            row += g.at(i, j);
            col += g.at(j, i);
        }
        CHECK(row == 0);
        CHECK(col == 0);
    }
}

}  // namespace

TEST_CASE("shading a free loop and the trefoil") {
    Diagram loop = example("unknot-0x");
    Shading s = default_shading(loop);
    CHECK(s.sigma[loop.unbounded_face()] == 0);
    int shaded = 0;
    for (auto v : s.sigma) shaded += v;
    CHECK(shaded == 1);  // the disk

    Diagram tre = example("trefoil");
    Shading st = default_shading(tre);
    // classes: two faces (outer and center) unshaded, three petals shaded
    int unshaded = 0;
    for (auto v : st.sigma) unshaded += v == 0;
    CHECK(unshaded == 2);

    Shading flipped = opposite_shading(tre, st);
    for (size_t f = 0; f < st.sigma.size(); ++f) CHECK(flipped.sigma[f] == 1 - st.sigma[f]);
}

TEST_CASE("tait graphs of the trefoil") {
    Diagram tre = example("trefoil");
    Shading s = default_shading(tre);

    TaitGraph shaded = tait_graph(tre, s, 1);
    CHECK(shaded.vertices.size() == 3);  // petals
    CHECK(shaded.edges.size() == 3);
    for (const auto& e : shaded.edges) CHECK(e.face_u != e.face_v);  // a 3-cycle
    CHECK(shaded.component_count() == 1);

    TaitGraph unshaded = tait_graph(tre, s, 0);
    CHECK(unshaded.vertices.size() == 2);
    CHECK(unshaded.edges.size() == 3);  // three parallel edges
    CHECK(unshaded.component_count() == 1);
}

TEST_CASE("beta counts") {
    for (const char* name : {"torus-2-8", "whitehead"}) {
        Diagram d = example(name);
        Shading s = default_shading(d);
        CHECK(beta_count(d, s) == 1);
        CHECK(beta_count(d, opposite_shading(d, s)) == 1);
    }
    // side-by-side unlinks: interiors shaded -> isolated vertices
    for (int mu : {2, 3, 4}) {
        Diagram d = example("unlink-" + std::to_string(mu));
        Shading s = default_shading(d);
        CHECK(beta_count(d, s) == mu);
        CHECK(beta_count(d, opposite_shading(d, s)) == 1);
    }
    Diagram one = example("unknot-0x");
    CHECK(beta_count(one, default_shading(one)) == 1);
}

TEST_CASE("goeritz index flips with the shading") {
    for (const char* name : {"trefoil", "hopf", "figure-eight", "whitehead", "torus-2-8"}) {
        Diagram d = example(name);
        Shading s = default_shading(d);
        Shading sbar = opposite_shading(d, s);
        for (size_t c = 0; c < d.crossings.size(); ++c) {
            int ci = static_cast<int>(c);
            CHECK(goeritz_index(d, s, ci) == -goeritz_index(d, sbar, ci));
        }
    }
}

TEST_CASE("torus-2-8 reproduces its standard Goeritz matrix") {
    Diagram d = example("torus-2-8");
    Shading s = default_shading(d);
    for (size_t c = 0; c < d.crossings.size(); ++c)
        CHECK(goeritz_index(d, s, static_cast<int>(c)) == -1);
    GoeritzMatrix g = goeritz_matrix(d, s);
    CHECK(g.matrix == from_rows({{-8, 8}, {8, -8}}));
    // a corrupted index calibration would negate the matrix and miss the target
    IntMatrix negated = g.matrix;
    for (auto& x : negated.data) x = -x;
    CHECK_FALSE(negated == from_rows({{-8, 8}, {8, -8}}));
}

TEST_CASE("whitehead reproduces its standard Goeritz matrix") {
    Diagram d = example("whitehead");
    Shading s = default_shading(d);
    GoeritzMatrix g = goeritz_matrix(d, s);
    CHECK(g.matrix == from_rows({{-3, 1, 2}, {1, -3, 2}, {2, 2, -4}}));
}

TEST_CASE("goeritz json surface is frozen byte for byte") {
    Diagram d = example("whitehead");
    Shading s = default_shading(d);
    ordered_json j = json_goeritz(d, s, goeritz_matrix(d, s));
    CHECK(j.dump() ==
          R"({"face_order":[0,2,4],"matrix":[[-3,1,2],[1,-3,2],[2,2,-4]],"eta":[-1,-1,-1,-1,-1],)"
          R"("beta":1,"sigma":[0,1,0,1,0,1,1],"ref_face":0,"ref_value":0})");
}

TEST_CASE("unlink Goeritz matrices are zero of size mu+1-beta") {
    for (const char* name : {"unlink-2", "unlink-3", "unlink-4", "unlink-2-nested",
                             "unlink-3-nested", "unlink-4-nested", "unknot-0x"}) {
        Diagram d = example(name);
        int mu = d.mu();
        for (int val : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), val);
            GoeritzMatrix g = goeritz_matrix(d, s);
            int beta = beta_count(d, s);
            CHECK(static_cast<int>(g.face_order.size()) == mu + 1 - beta);
            for (const auto& x : g.matrix.data) CHECK(x == 0);
        }
    }
}

TEST_CASE("goeritz matrices are symmetric with zero sums, both shadings") {
    for (const std::string& name : example_names()) {
        Diagram d = example(name);
        for (int val : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), val);
            check_symmetric_zero_sums(goeritz_matrix(d, s).matrix);
        }
    }
}

TEST_CASE("rho of a connected boundary is the matrix row, and sums recover rows") {
    for (const std::string& name : example_names()) {
        Diagram d = example(name);
        for (int val : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), val);
            GoeritzMatrix g = goeritz_matrix(d, s);
            for (int f : g.face_order) {
                int i = g.index_of_face[f];
                const auto& curves = d.faces[f].boundary_curves;
                std::vector<Int> total(g.face_order.size(), Int(0));
                for (int k = 0; k < static_cast<int>(curves.size()); ++k) {
                    RhoVector rho = boundary_rho(d, s, f, k);
                    for (size_t j = 0; j < total.size(); ++j) total[j] += rho.entries[j];
                }
                for (size_t j = 0; j < total.size(); ++j) CHECK(total[j] == g.matrix.at(i, static_cast<int>(j)));
                if (curves.size() == 1) {
                    RhoVector rho = boundary_rho(d, s, f, 0);
                    for (size_t j = 0; j < rho.entries.size(); ++j)
                        CHECK(rho.entries[j] == g.matrix.at(i, static_cast<int>(j)));
                }
            }
        }
    }
}

TEST_CASE("rho annihilates kernel vectors mod m on nested diagrams") {
    for (const char* name : {"trefoil-nested-in-trefoil", "unlink-3-nested", "trefoil-hopf-split"}) {
        Diagram d = example(name);
        for (int val : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), val);
            GoeritzMatrix g = goeritz_matrix(d, s);
            for (long long m = 2; m <= 9; ++m) {
                auto basis = kernel_basis_mod_m(g.matrix, m);
                for (int f : g.face_order)
                    for (int k = 0; k < static_cast<int>(d.faces[f].boundary_curves.size()); ++k) {
                        RhoVector rho = boundary_rho(d, s, f, k);
                        for (const auto& v : basis) {
                            Int dot = 0;
                            for (size_t j = 0; j < rho.entries.size(); ++j)
                                dot += rho.entries[j] * v.entries[j];
                            CHECK(mod_reduce(dot, m) == 0);
                        }
                    }
            }
        }
    }
}

TEST_CASE("kernel coordinates agree at crossings with a single shaded face") {
    // If F_i and F_j share a crossing where the two shaded quadrants are one
    // face, kernel vectors have equal i and j coordinates.
    for (const std::string& name : example_names()) {
        Diagram d = example(name);
        for (int val : {0, 1}) {
            Shading s = checkerboard_shade(d, d.unbounded_face(), val);
            GoeritzMatrix g = goeritz_matrix(d, s);
            for (long long m : {2, 3, 4, 5, 8, 9}) {
                auto basis = kernel_basis_mod_m(g.matrix, m);
                for (size_t c = 0; c < d.crossings.size(); ++c) {
                    int ci = static_cast<int>(c);
                    int ubase = (s.sigma[d.quadrant_face(ci, 0)] == 0) ? 0 : 1;
                    int fi = d.quadrant_face(ci, ubase);
                    int fj = d.quadrant_face(ci, ubase + 2);
                    int si = d.quadrant_face(ci, ubase + 1);
                    int sj = d.quadrant_face(ci, (ubase + 3) & 3);
                    if (si != sj || fi == fj) continue;
                    for (const auto& v : basis)
                        CHECK(v.entries[g.index_of_face[fi]] == v.entries[g.index_of_face[fj]]);
                }
            }
        }
    }
}

TEST_CASE("rho rejects bad arguments") {
    Diagram d = example("trefoil");
    Shading s = default_shading(d);
    GoeritzMatrix g = goeritz_matrix(d, s);
    int unshaded = g.face_order[0];
    CHECK_THROWS_AS(boundary_rho(d, s, unshaded, 5), std::invalid_argument);
    int shaded = -1;
    for (const auto& f : d.faces)
        if (s.sigma[f.id] == 1) shaded = f.id;
    CHECK_THROWS_AS(boundary_rho(d, s, shaded, 0), std::invalid_argument);
}
