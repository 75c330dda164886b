#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goeritz {

/// Exact integers. SNF intermediates can outgrow any fixed width, so the
/// whole linear-algebra layer works over arbitrary precision.
using Int = boost::multiprecision::cpp_int;

/// Dense exact integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n);

    Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form U*M*V = diag(d_1..d_r, 0..) with d_i > 0 and d_i | d_{i+1}.
/// U and V are unimodular (determinant +-1).
struct SnfResult {
    std::vector<Int> diag;  // the nonzero invariant factors d_1..d_r
    int rank = 0;           // r
    IntMatrix u;            // rows x rows
    IntMatrix v;            // cols x cols
};

/// Exact SNF by row/column reduction. Pivot choice is deterministic:
/// smallest nonzero absolute value, ties broken by lowest (row, col).
SnfResult smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group in invariant-factor normal form:
/// Z/f_1 + Z/f_2 + ... + Z^free_rank with f_1 | f_2 | ... and every f_i >= 2.
struct FgAbelianGroup {
    std::vector<Int> invariant_factors;
    int free_rank = 0;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    /// Order of the group; nullopt when infinite (free_rank > 0).
    std::optional<Int> order() const;
    std::string to_string() const;

    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup integers(int rank = 1);
    static FgAbelianGroup cyclic(const Int& m);
    /// Parses specs like "Z", "Z^2", "Z/8", "Z^1+Z/2+Z/4", "0".
    static FgAbelianGroup parse(const std::string& spec);

    bool operator==(const FgAbelianGroup& o) const = default;
};

/// Canonicalizes a direct sum of cyclic groups and free summands into
/// invariant-factor form. Orders of 1 are dropped; an order of 0 counts
/// as one free summand.
FgAbelianGroup group_normal_form(std::vector<Int> cyclic_orders, int free_rank);

bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Structure of ker(M : A^cols -> A^rows) for a coefficient group A given in
/// invariant-factor form. Via SNF: the kernel is the direct sum of the
/// d_i-torsion subgroups A[d_i] plus one copy of A per zero column.
FgAbelianGroup kernel_structure(const IntMatrix& m, const FgAbelianGroup& coeff);

/// |{v in (Z/m)^cols : M v = 0}| = prod gcd(d_i, m) * m^(cols - rank).
Int solution_count_mod_m(const IntMatrix& m, long long modulus);

/// Vector over Z/m with entries normalized into [0, m).
struct ModVector {
    long long modulus = 2;
    std::vector<long long> entries;

    bool operator==(const ModVector& o) const = default;
};

/// Generating set of {v in (Z/m)^cols : M v = 0}, read off the columns of the
/// SNF transform V. Membership of each generator is verifiable by multiplication.
std::vector<ModVector> kernel_basis_mod_m(const IntMatrix& m, long long modulus);

/// x mod m normalized into [0, m).
long long mod_reduce(const Int& x, long long modulus);

bool mat_vec_zero_mod_m(const IntMatrix& m, const ModVector& v);

}  // namespace goeritz
