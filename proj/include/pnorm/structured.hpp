#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pnorm/core.hpp"

// Structured matrix families with exact or structure-aware p-norms:
// unitary permutations, doubly balanced nonnegative matrices, circulants,
// Hankel-mod matrices, direct sums, block rows/columns/grids, column and
// row embeddings, and rank-one tensor blocks.
namespace pnorm::structured {

/// Closed interval [lower, upper] for a norm value.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool is_point() const noexcept { return lower == upper; }
};

/// Row i carries phases[i] in column sigma[i] (0-based).
class UnitaryPermutation {
public:
    UnitaryPermutation(std::vector<std::size_t> sigma, std::vector<complex> phases);
    static UnitaryPermutation identity(std::size_t n);

    std::size_t size() const noexcept { return sigma_.size(); }
    std::span<const std::size_t> sigma() const noexcept { return sigma_; }
    std::span<const complex> phases() const noexcept { return phases_; }

private:
    std::vector<std::size_t> sigma_;
    std::vector<complex> phases_;
};

/// C(a_0, ..., a_{n-1}) = sum a_i S^i with S the cyclic shift: entry (i, j)
/// is a_{(j - i) mod n}.
class Circulant {
public:
    explicit Circulant(std::vector<complex> coeffs);
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

private:
    std::vector<complex> coeffs_;
};

/// H(a_0, ..., a_{n-1}): entry (i, j) is a_{(i + j) mod n}.
class HankelMod {
public:
    explicit HankelMod(std::vector<complex> coeffs);
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

private:
    std::vector<complex> coeffs_;
};

/// Block matrix whose (i, j) block is alpha_i * conj(beta_j) * core. alpha and
/// beta share a length k; the core is n x n; the dense form is kn x kn.
struct TensorRankOne {
    CVector alpha;
    CVector beta;
    CMatrix core;

    TensorRankOne(CVector alpha, CVector beta, CMatrix core);
};

/// Witness for a logarithmic-affine circulant: a_i * omega^i = beta * |a_i|.
struct LAWitness {
    bool is_la = false;
    bool degenerate = false;
    std::optional<complex> beta;
    std::optional<complex> omega;
    /// sum |a_i|, the norm for every p; present iff is_la.
    std::optional<double> norm;
};

struct EmbedLA {
    bool is_la = false;
    bool degenerate = false;
};

struct BlockBound {
    double value = 0.0;
    /// True when the value is an equality rather than an upper bound.
    bool exact = false;
};

CMatrix densify(const UnitaryPermutation& s);
CMatrix densify(const Circulant& c);
CMatrix densify(const HankelMod& h);
CMatrix densify(const TensorRankOne& t);

/// Recognizers over dense input. Entries are compared to 1e-12 times the
/// largest modulus.
std::optional<Circulant> recognize_circulant(const CMatrix& a);
std::optional<HankelMod> recognize_hankel(const CMatrix& a);
std::optional<UnitaryPermutation> recognize_unitary_permutation(const CMatrix& a);
/// All rank-one tensor decompositions with k >= 2 blocks per side, ordered
/// by increasing core size.
std::vector<TensorRankOne> recognize_tensors(const CMatrix& a);

/// If A is entrywise nonnegative with every row and column summing to a
/// common value, that value is ||A||_{p,p} for every p.
std::optional<double> doubly_balanced_norm(const CMatrix& a);

/// max over n-th roots of unity w of |sum a_i w^i|.
double circulant_two_norm(const Circulant& c);

LAWitness classify_circulant_la(const Circulant& c);

/// H = P * C with P = H(1, 0, ..., 0): row i of P has its one in column
/// (n - i) mod n.
struct HankelFactors {
    UnitaryPermutation permutation;
    Circulant circulant;
};
HankelFactors hankel_factor(const HankelMod& h);

/// m x m matrix with A in the top-left block.
CMatrix pad_embed(const CMatrix& a, std::size_t m);

/// Block-diagonal matrix with the given square parts.
CMatrix direct_sum(std::span<const CMatrix> parts);

/// Finest contiguous block-diagonal split into square blocks. A matrix that
/// does not split comes back as a single part.
std::vector<CMatrix> split_block_diagonal(const CMatrix& a);

/// ||A_1 (+) ... (+) A_k|| = max_i ||A_i||.
double direct_sum_norm(std::span<const double> part_norms);
Interval direct_sum_norm(std::span<const Interval> part_norms);

/// (sum v_i^r)^(1/r), max for r = inf.
double lp_combine(std::span<const double> values, Exponent r);

/// Stacked blocks [A_1; ...; A_k] in the first block column. `exact` is the
/// caller's assertion that the blocks share a norm-attaining vector.
BlockBound block_column_bound(std::span<const double> block_norms, Exponent p, bool exact = false);
/// [A_1 ... A_k] in the first block row; combines with the dual exponent.
BlockBound block_row_bound(std::span<const double> block_norms, Exponent p, bool exact = false);

/// Upper bound for a k x l grid of blocks from their norms (row-major).
double block_grid_bound(std::span<const std::vector<double>> block_norms, Exponent p);

/// Sufficient condition for a shared maximizer: all blocks are scalar
/// multiples of one matrix.
bool blocks_are_scalar_multiples(std::span<const CMatrix> blocks);

/// C(x) has x as its first column; R(x) has conj(x) as its first row.
CMatrix column_embed(const CVector& x);
CMatrix row_embed(const CVector& x);
double column_embed_norm(const CVector& x, Exponent p);
double row_embed_norm(const CVector& x, Exponent p);

/// True iff all nonzero entries share one modulus (1e-9 relative).
EmbedLA embed_is_la(const CVector& x);

/// ||alpha||_p * ||beta||_q * core_norm; exact whenever core_norm is.
double tensor_norm(const TensorRankOne& t, Exponent p, double core_norm);
Interval tensor_norm(const TensorRankOne& t, Exponent p, Interval core_norm);

bool tensor_is_la(const TensorRankOne& t, bool core_is_la);

}  // namespace pnorm::structured
