#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pnorm/core.hpp"
#include "pnorm/interp.hpp"
#include "pnorm/structured.hpp"

// Lower bounds (eigen certificates, fixed-point ascent, brute-force oracle)
// and the combiner producing certified intervals.
namespace pnorm::estimator {

struct certificate_rejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_size : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A claimed relation A x = lambda S x.
struct EigenCertificate {
    CVector x;
    structured::UnitaryPermutation s;
    complex lambda;
};

/// |lambda|, valid for every p, after checking A x = lambda S x to 1e-9.
double eigen_lower_bound(const CMatrix& a, const CVector& x, const structured::UnitaryPermutation& s, complex lambda);

struct AscentResult {
    double value = 0.0;
    CVector maximizer{1};
    int iterations = 0;
    bool converged = false;
};

struct AscentOptions {
    int restarts = 8;
    std::uint64_t seed = 0;
    int max_iterations = 500;
    double gain_tolerance = 1e-12;
    /// Stop once a second start lands within agreement_tolerance of the
    /// best value. Off by default: two starts can agree on a local maximum.
    bool stop_on_agreement = false;
    double agreement_tolerance = 1e-10;
    /// Called with (start index, iteration, objective) after every step.
    std::function<void(int, int, double)> observer;
};

/// Fixed-point iteration x <- dual(A* dual(A x)) over several starts. For
/// p < 2 the ascent runs on A* at the dual exponent, then is polished on A.
AscentResult ascent_lower_bound(const CMatrix& a, Exponent p, int restarts = 8, std::uint64_t seed = 0);
AscentResult ascent_lower_bound(const CMatrix& a, Exponent p, const AscentOptions& options);

struct OracleResult {
    double value = 0.0;
    /// One angle for n = 2, (theta, phi) for n = 3.
    std::vector<double> angles;
    CVector maximizer{1};
};

/// Exhaustive angular search over the real unit sphere (n = 2 or 3) with
/// golden-section refinement. Real matrices only.
OracleResult oracle_norm(const CMatrix& a, Exponent p, int resolution = 720);

struct CertifyOptions {
    std::uint64_t seed = 0;
    int restarts = 8;
    std::vector<EigenCertificate> certificates;
    /// Structured recognizers (direct sums, doubly balanced, LA, Hankel,
    /// tensors) are tried before the generic interval.
    bool use_structure = true;
};

interp::NormBound certified_bound(const CMatrix& a, Exponent p, std::uint64_t seed = 0);
interp::NormBound certified_bound(const CMatrix& a, Exponent p, const CertifyOptions& options);

}  // namespace pnorm::estimator
