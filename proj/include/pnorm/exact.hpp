#pragma once

#include <cstddef>
#include <cstdint>

#include "pnorm/core.hpp"

// Closed-form operator norms at p = 1, 2, inf and the unitary-permutation test.
namespace pnorm::exact {

/// A norm value together with the row or column that attains it.
struct IndexedNorm {
    double value = 0.0;
    std::size_t index = 0;
};

/// ||A||_{1,1} and ||A||_{2,2}, ||A||_{inf,inf} of one matrix.
struct AnchorNorms {
    double n1 = 0.0;
    double n2 = 0.0;
    double ninf = 0.0;
};

/// Maximum column absolute sum; smallest column index on ties.
IndexedNorm norm_one(const CMatrix& a);

/// Maximum row absolute sum; smallest row index on ties.
IndexedNorm norm_inf(const CMatrix& a);

/// Largest singular value, from cyclic Jacobi on the Hermitian matrix A*A.
double norm_two(const CMatrix& a);

/// All eigenvalues of a Hermitian matrix, ascending. Only the upper triangle
/// is trusted to be Hermitian-consistent; the lower is overwritten.
std::vector<double> hermitian_eigenvalues(CMatrix h);

AnchorNorms anchor_norms(const CMatrix& a);

/// True iff S has exactly one nonzero per row and per column and each
/// nonzero has modulus 1. For true results, ||S x||_p = ||x||_p is also
/// checked on `trials` seeded random vectors (logic_error on failure).
/// At p = 2 unitaries outside this class are rejected as well.
bool is_p_isometry(const CMatrix& s, Exponent p, int trials = 8, std::uint64_t seed = 0);

}  // namespace pnorm::exact
