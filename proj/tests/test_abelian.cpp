#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goeritz/abelian.hpp"

#include <random>
#include <vector>

using namespace goeritz;

namespace {

// Independent oracle: count kernel vectors over Z/m by full enumeration.
Int brute_kernel_count(const IntMatrix& m, long long mod) {
    std::vector<long long> v(m.cols, 0);
    Int count = 0;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < m.rows && ok; ++i) {
            Int s = 0;
            for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
            ok = mod_reduce(s, mod) == 0;
        }
        if (ok) ++count;
        int k = 0;
        while (k < m.cols && ++v[k] == mod) v[k++] = 0;
        if (k == m.cols) break;
    }
    return count;
}

// Independent oracle: invariant factors as quotients of minor gcds.
Int minor_gcd(const IntMatrix& m, int k) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = ci[i] = i;
    Int g = 0;

    auto det = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        // Laplace expansion; k stays tiny in these tests.
        std::vector<int> rs = rows, cs = cols;
        struct Rec {
            static Int go(const IntMatrix& m, std::vector<int> rs, std::vector<int> cs) {
                if (rs.empty()) return 1;
                Int d = 0;
                int sign = 1;
                for (size_t j = 0; j < cs.size(); ++j) {
                    const Int& a = m.at(rs[0], cs[j]);
                    if (a != 0) {
                        std::vector<int> rs2(rs.begin() + 1, rs.end());
                        std::vector<int> cs2 = cs;
                        cs2.erase(cs2.begin() + j);
                        d += sign * a * go(m, rs2, cs2);
                    }
                    sign = -sign;
                }
                return d;
            }
        };
        return Rec::go(m, rs, cs);
    };

    std::vector<int> rows(k), cols(k);
    // iterate over all k-subsets of rows and cols
    std::vector<int> rsel(k);
    for (int i = 0; i < k; ++i) rsel[i] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> csel(k);
        for (int i = 0; i < k; ++i) csel[i] = i;
        do {
            g = gcd(g, abs(det(rsel, csel)));
        } while (next_subset(csel, m.cols));
    } while (next_subset(rsel, m.rows));
    return g;
}

std::vector<Int> snf_diag_via_minors(const IntMatrix& m) {
    std::vector<Int> out;
    Int prev = 1;
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        Int g = minor_gcd(m, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Int det_exact(const IntMatrix& m) {
    REQUIRE(m.rows == m.cols);
    std::vector<int> rs(m.rows), cs(m.cols);
    IntMatrix a = m;
    // Bareiss fraction-free elimination.
    Int denom = 1;
    int sign = 1;
    int n = m.rows;
    for (int t = 0; t < n - 1; ++t) {
        if (a.at(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a.at(i, t) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / denom;
        denom = a.at(t, t);
    }
    return sign * a.at(n - 1, n - 1);
}

void check_snf_contract(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    // U*M*V equals the diagonal matrix exactly.
    IntMatrix d = matmul(matmul(s.u, m), s.v);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j) {
            Int expect = (i == j && i < s.rank) ? s.diag[i] : Int(0);
            CHECK(d.at(i, j) == expect);
        }
    // divisibility chain, positivity
    for (int i = 0; i + 1 < s.rank; ++i) {
        CHECK(s.diag[i] > 0);
        CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
    if (m.rows > 0) CHECK(boost::multiprecision::abs(det_exact(s.u)) == 1);
    if (m.cols > 0) CHECK(boost::multiprecision::abs(det_exact(s.v)) == 1);
}

const IntMatrix kGoeritzTorus = from_rows({{-8, 8}, {8, -8}});
const IntMatrix kGoeritzWhitehead = from_rows({{-3, 1, 2}, {1, -3, 2}, {2, 2, -4}});

}  // namespace

TEST_CASE("snf of the two-by-two torus Goeritz class") {
    SnfResult s = smith_normal_form(kGoeritzTorus);
    CHECK(s.diag == std::vector<Int>{8});
    CHECK(s.rank == 1);
    check_snf_contract(kGoeritzTorus);
    CHECK(snf_diag_via_minors(kGoeritzTorus) == std::vector<Int>{8});
}

TEST_CASE("snf of the whitehead Goeritz class") {
    SnfResult s = smith_normal_form(kGoeritzWhitehead);
    CHECK(s.diag == std::vector<Int>{1, 8});
    CHECK(s.rank == 2);
    check_snf_contract(kGoeritzWhitehead);
    CHECK(snf_diag_via_minors(kGoeritzWhitehead) == std::vector<Int>{1, 8});
}

TEST_CASE("snf of identity and degenerate shapes") {
    SnfResult s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diag == std::vector<Int>{1, 1, 1});

    IntMatrix zero(1, 1);
    CHECK(smith_normal_form(zero).rank == 0);

    IntMatrix empty_rows(0, 3);
    SnfResult e = smith_normal_form(empty_rows);
    CHECK(e.rank == 0);
    CHECK(e.v.rows == 3);

    IntMatrix empty_cols(3, 0);
    CHECK(smith_normal_form(empty_cols).rank == 0);
}

TEST_CASE("snf transforms on random matrices, against the minor oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 4), entry(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.data) x = entry(rng);
        check_snf_contract(m);
        SnfResult s = smith_normal_form(m);
        CHECK(s.diag == snf_diag_via_minors(m));
    }
}

TEST_CASE("solution counts match brute force") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m(3, 3);
        for (auto& x : m.data) x = entry(rng);
        for (long long mod : {2, 3, 4, 5, 6}) {
            CHECK(solution_count_mod_m(m, mod) == brute_kernel_count(m, mod));
        }
    }
    CHECK(solution_count_mod_m(kGoeritzTorus, 8) == 64);
    CHECK(solution_count_mod_m(kGoeritzWhitehead, 8) == 64);
    CHECK(solution_count_mod_m(IntMatrix::identity(2), 7) == 1);
}

TEST_CASE("kernel basis generates the right group and lies in the kernel") {
    auto span_size = [](const IntMatrix& m, const std::vector<ModVector>& gens, long long mod) {
        // Close the generating set under addition; sizes stay tiny here.
        std::vector<std::vector<long long>> seen;
        std::vector<long long> zero(m.cols, 0);
        seen.push_back(zero);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& g : gens)
                for (size_t i = 0; i < seen.size(); ++i) {
                    std::vector<long long> s = seen[i];
                    for (int j = 0; j < m.cols; ++j) s[j] = (s[j] + g.entries[j]) % mod;
                    if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
                        seen.push_back(s);
                        grew = true;
                    }
                }
        }
        return seen.size();
    };

    IntMatrix zero11(1, 1);
    auto b = kernel_basis_mod_m(zero11, 5);
    REQUIRE(b.size() == 1);
    CHECK(b[0].entries == std::vector<long long>{1});

    for (long long mod : {2, 3, 8}) {
        for (const IntMatrix* m : {&kGoeritzTorus, &kGoeritzWhitehead}) {
            auto gens = kernel_basis_mod_m(*m, mod);
            for (const auto& g : gens) CHECK(mat_vec_zero_mod_m(*m, g));
            CHECK(Int(span_size(*m, gens, mod)) == solution_count_mod_m(*m, mod));
        }
    }
    CHECK(span_size(kGoeritzTorus, kernel_basis_mod_m(kGoeritzTorus, 2), 2) == 4);
    CHECK(span_size(kGoeritzWhitehead, kernel_basis_mod_m(kGoeritzWhitehead, 8), 8) == 64);
}

TEST_CASE("group normal form") {
    CHECK(group_normal_form({4, 12}, 0).to_string() == "Z/4+Z/12");
    CHECK(group_normal_form({2, 3}, 0).to_string() == "Z/6");
    CHECK(group_normal_form({8, 1}, 1).to_string() == "Z+Z/8");
    CHECK(group_normal_form({6, 4}, 0).to_string() == "Z/2+Z/12");
    CHECK(group_normal_form({}, 0).is_trivial());
    CHECK(group_normal_form({0}, 0) == FgAbelianGroup::integers());
    CHECK(group_normal_form({2, 2, 3, 9}, 0).to_string() == "Z/6+Z/18");
}

TEST_CASE("group parsing round-trips") {
    for (const char* s : {"Z", "Z^2", "Z/8", "Z/2+Z/4", "Z+Z/8", "0"}) {
        FgAbelianGroup g = FgAbelianGroup::parse(s);
        CHECK(FgAbelianGroup::parse(g.to_string()) == g);
    }
    CHECK(FgAbelianGroup::parse(" Z^1 + Z/2 + Z/4 ").to_string() == "Z+Z/2+Z/4");
    CHECK_THROWS(FgAbelianGroup::parse("Q"));
    CHECK_THROWS(FgAbelianGroup::parse(""));
}

TEST_CASE("groups_isomorphic distinguishes normal forms") {
    CHECK(groups_isomorphic(FgAbelianGroup::parse("Z/2+Z/4"), group_normal_form({4, 2}, 0)));
    CHECK_FALSE(groups_isomorphic(FgAbelianGroup::parse("Z/2+Z/2"), FgAbelianGroup::parse("Z/4")));
    FgAbelianGroup g = FgAbelianGroup::parse("Z+Z/6");
    CHECK(groups_isomorphic(g, g));
}

TEST_CASE("kernel structure examples") {
    CHECK(kernel_structure(kGoeritzTorus, FgAbelianGroup::parse("Z/12")).to_string() == "Z/4+Z/12");
    CHECK(kernel_structure(kGoeritzWhitehead, FgAbelianGroup::integers()).to_string() == "Z");
    CHECK(kernel_structure(kGoeritzTorus, FgAbelianGroup::trivial()).is_trivial());

    // kernel order equals the solution count over Z/m
    for (long long mod : {2, 3, 4, 5, 6, 7, 8, 9}) {
        for (const IntMatrix* m : {&kGoeritzTorus, &kGoeritzWhitehead}) {
            auto k = kernel_structure(*m, FgAbelianGroup::cyclic(Int(mod)));
            CHECK(k.order().value() == solution_count_mod_m(*m, mod));
        }
    }
}

TEST_CASE("kernel structure distributes over direct sums") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    FgAbelianGroup z6 = FgAbelianGroup::parse("Z/6");
    FgAbelianGroup z2z3 = FgAbelianGroup::parse("Z/2+Z/3");
    REQUIRE(groups_isomorphic(z6, z2z3));
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(3, 3);
        for (auto& x : m.data) x = entry(rng);
        auto ka = kernel_structure(m, z6);
        auto k2 = kernel_structure(m, FgAbelianGroup::parse("Z/2"));
        auto k3 = kernel_structure(m, FgAbelianGroup::parse("Z/3"));
        std::vector<Int> combined = k2.invariant_factors;
        combined.insert(combined.end(), k3.invariant_factors.begin(), k3.invariant_factors.end());
        CHECK(groups_isomorphic(ka, group_normal_form(combined, k2.free_rank + k3.free_rank)));
    }
}
