#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace adic {

// Row-major arbitrary-precision integer matrices.
using IntMat = std::vector<std::vector<mpz_class>>;
using IntVec = std::vector<mpz_class>;

IntMat int_identity(std::size_t n);
IntMat int_zero(std::size_t rows, std::size_t cols);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntVec int_apply(const IntMat& a, const IntVec& v);
bool int_equal(const IntMat& a, const IntMat& b);

struct SnfResult {
    IntMat u; // rows x rows, unimodular
    IntMat d; // rows x cols, diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat v; // cols x cols, unimodular
};

// U * A * V = D, exactly. Total: works for any shape including empty.
SnfResult smith_normal_form(const IntMat& a);

// Nonzero diagonal entries of the SNF (the invariant factors).
IntVec invariant_factors(const IntMat& a);

// Column-style Hermite form of the lattice spanned by the columns of A:
// returns a matrix whose columns are a canonical basis of the lattice
// (pivot entries positive, entries above pivots reduced, zero columns
// dropped). Deterministic.
IntMat column_hermite(const IntMat& a);

// Canonical representative of v modulo the lattice spanned by the columns
// of H (H as produced by column_hermite).
IntVec hermite_reduce(const IntMat& h, const IntVec& v);

// Basis of { x : A x = 0 } as columns.
IntMat int_kernel(const IntMat& a);

// One solution of A x = b, if any.
std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b);

// Exact determinant (fraction-free Bareiss); square matrices only.
mpz_class int_det(const IntMat& a);

// Rank over QQ.
std::size_t int_rank(const IntMat& a);

} // namespace adic
