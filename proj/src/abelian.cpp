#include "goeritz/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace goeritz {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::pow;

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

namespace {

// Elementary operations applied to the work matrix and mirrored on the
// transform that records them.
void swap_rows(IntMatrix& a, IntMatrix& u, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (int k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
}

// row i -= q * row t
void row_sub(IntMatrix& a, IntMatrix& u, int i, int t, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < a.cols; ++k) a.at(i, k) -= q * a.at(t, k);
    for (int k = 0; k < u.cols; ++k) u.at(i, k) -= q * u.at(t, k);
}

// col j -= q * col t
void col_sub(IntMatrix& a, IntMatrix& v, int j, int t, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < a.rows; ++k) a.at(k, j) -= q * a.at(k, t);
    for (int k = 0; k < v.rows; ++k) v.at(k, j) -= q * v.at(k, t);
}

void negate_row(IntMatrix& a, IntMatrix& u, int i) {
    for (int k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
    for (int k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
}

// Smallest nonzero |entry| in the trailing submatrix, lowest (i, j) on ties.
bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows; ++i)
        for (int j = t; j < a.cols; ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res;
    IntMatrix a = m;
    res.u = IntMatrix::identity(m.rows);
    res.v = IntMatrix::identity(m.cols);

    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        swap_rows(a, res.u, t, pi);
        swap_cols(a, res.v, t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                row_sub(a, res.u, i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                col_sub(a, res.v, j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A nonzero remainder is strictly smaller than the pivot;
                // re-pick and keep reducing.
                find_pivot(a, t, pi, pj);
                swap_rows(a, res.u, t, pi);
                swap_cols(a, res.v, t, pj);
                continue;
            }
            // Pivot row/col are clear. Pull in any entry the pivot does not
            // divide, so the divisibility chain holds.
            bool divides_all = true;
            for (int i = t + 1; i < a.rows && divides_all; ++i)
                for (int j = t + 1; j < a.cols; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_sub(a, res.u, t, i, Int(-1));  // row t += row i
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
    }

    for (int t = 0; t < steps; ++t)
        if (a.at(t, t) < 0) negate_row(a, res.u, t);

    for (int t = 0; t < steps; ++t) {
        if (a.at(t, t) == 0) break;
        res.diag.push_back(a.at(t, t));
    }
    res.rank = static_cast<int>(res.diag.size());
    return res;
}

std::optional<Int> FgAbelianGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& f : invariant_factors) n *= f;
    return n;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const Int& f : invariant_factors) {
        if (!first) out << "+";
        out << "Z/" << f;
        first = false;
    }
    return out.str();
}

FgAbelianGroup FgAbelianGroup::integers(int rank) {
    FgAbelianGroup g;
    g.free_rank = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& m) {
    if (m < 0) throw std::invalid_argument("cyclic: negative order");
    return group_normal_form({m}, 0);
}

FgAbelianGroup FgAbelianGroup::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty group spec");
    if (s == "0" || s == "1") return trivial();

    std::vector<Int> orders;
    int free_rank = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty() || term[0] != 'Z') throw std::invalid_argument("bad group term: " + term);
        if (term == "Z") {
            free_rank += 1;
        } else if (term[1] == '^') {
            int k = std::stoi(term.substr(2));
            if (k < 0) throw std::invalid_argument("bad free rank: " + term);
            free_rank += k;
        } else if (term[1] == '/') {
            Int m(term.substr(2));
            if (m < 1) throw std::invalid_argument("bad cyclic order: " + term);
            orders.push_back(m);
        } else {
            throw std::invalid_argument("bad group term: " + term);
        }
    }
    return group_normal_form(std::move(orders), free_rank);
}

FgAbelianGroup group_normal_form(std::vector<Int> cyclic_orders, int free_rank) {
    FgAbelianGroup g;
    g.free_rank = free_rank;

    std::vector<Int> f;
    for (Int& x : cyclic_orders) {
        if (x < 0) x = -x;
        if (x == 0)
            g.free_rank += 1;  // Z/0 is Z
        else if (x > 1)
            f.push_back(std::move(x));
    }

    // Pairwise gcd/lcm replacement sorts the prime-power content into a
    // divisibility chain without factoring anything.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                if (f[i] % f[j] == 0 || f[j] % f[i] == 0) continue;
                Int g1 = gcd(f[i], f[j]);
                Int l1 = lcm(f[i], f[j]);
                f[i] = g1;
                f[j] = l1;
                changed = true;
            }
    }
    std::erase_if(f, [](const Int& x) { return x == 1; });
    std::sort(f.begin(), f.end());
    g.invariant_factors = std::move(f);
    return g;
}

bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a == b;
}

FgAbelianGroup kernel_structure(const IntMatrix& m, const FgAbelianGroup& coeff) {
    SnfResult snf = smith_normal_form(m);
    const int free_cols = m.cols - snf.rank;

    std::vector<Int> orders;
    int free_rank = coeff.free_rank * free_cols;
    for (const Int& d : snf.diag) {
        // d-torsion of the coefficient group: Z contributes nothing,
        // Z/q contributes Z/gcd(d, q).
        for (const Int& q : coeff.invariant_factors) orders.push_back(gcd(d, q));
    }
    for (int k = 0; k < free_cols; ++k)
        for (const Int& q : coeff.invariant_factors) orders.push_back(q);
    return group_normal_form(std::move(orders), free_rank);
}

Int solution_count_mod_m(const IntMatrix& m, long long modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    SnfResult snf = smith_normal_form(m);
    Int count = 1;
    for (const Int& d : snf.diag) count *= gcd(d, Int(modulus));
    count *= pow(Int(modulus), static_cast<unsigned>(m.cols - snf.rank));
    return count;
}

long long mod_reduce(const Int& x, long long modulus) {
    Int r = x % modulus;
    if (r < 0) r += modulus;
    return static_cast<long long>(r);
}

bool mat_vec_zero_mod_m(const IntMatrix& m, const ModVector& v) {
    if (m.cols != static_cast<int>(v.entries.size()))
        throw std::invalid_argument("mat_vec_zero_mod_m: dimension mismatch");
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v.entries[j];
        if (mod_reduce(s, v.modulus) != 0) return false;
    }
    return true;
}

std::vector<ModVector> kernel_basis_mod_m(const IntMatrix& m, long long modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    SnfResult snf = smith_normal_form(m);

    std::vector<ModVector> basis;
    for (int j = 0; j < m.cols; ++j) {
        long long scale;
        if (j < snf.rank) {
            Int g = gcd(snf.diag[j], Int(modulus));
            if (g == 1) continue;  // only the zero solution in this coordinate
            scale = modulus / static_cast<long long>(g);
        } else {
            scale = 1;  // free column
        }
        ModVector vec;
        vec.modulus = modulus;
        vec.entries.resize(m.cols);
        for (int i = 0; i < m.cols; ++i)
            vec.entries[i] = mod_reduce(snf.v.at(i, j) * scale, modulus);
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace goeritz
