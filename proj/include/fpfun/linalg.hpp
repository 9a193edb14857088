#pragma once

#include <optional>

#include "fpfun/matrix.hpp"

namespace fpfun {

/// Smith normal form certificate: U * A * V = S with U, V unimodular and S
/// diagonal, nonnegative, each entry dividing the next.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    /// Diagonal entries of S (length min(rows, cols)).
    std::vector<Int> diagonal() const;
    /// Number of nonzero diagonal entries.
    int rank() const;
};

SmithDecomposition snf(const IntMatrix& a);

/// Some integer solution X of A * X = B, or nullopt when none exists.
/// Throws std::invalid_argument when row counts differ.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Basis of the integer null space of A, as columns. The basis spans the full
/// (saturated) kernel lattice; an identity-free matrix of shape cols x 0 means
/// the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& a);

/// Rank of A over the field of fractions.
int rank_over_fractions(const IntMatrix& a);

/// Basis (as columns) of the lattice spanned by the columns of A, computed by
/// unimodular column operations; columns come out in echelon form.
IntMatrix lattice_column_basis(const IntMatrix& a);

/// Exact determinant of a square matrix (Bareiss elimination); det of the
/// empty 0x0 matrix is 1.
Int determinant(const IntMatrix& a);

}  // namespace fpfun
