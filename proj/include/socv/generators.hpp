#ifndef SOCV_GENERATORS_HPP
#define SOCV_GENERATORS_HPP

#include <utility>

#include "socv/interval.hpp"
#include "socv/linalg.hpp"
#include "socv/rng.hpp"

namespace socv {

enum class PairStrategy { Commuting, Rejection, Independent };

// Haar-ish random unitary: Gram-Schmidt of a Gaussian matrix (orthogonal when
// complex_entries is false).
Matrix random_unitary(int dim, RngStream& rng, bool complex_entries = false);

// Hermitian matrix with eigenvalues uniform in the delta-shrunk interval,
// conjugated by a random unitary. Infinite endpoints are capped at +-cap.
HermitianMatrix gen_hermitian_in_interval(const Interval& j, int dim, RngStream& rng,
                                          bool complex_entries = false, double cap = 100.0);

// Pair with A - B >= m: B sampled from a shrunk interval, A = B + mI + P with
// random positive P of norm <= slack (default: m), respecting sp(A) in j.
std::pair<HermitianMatrix, HermitianMatrix>
gen_dominated_pair(const Interval& j, int dim, double m, RngStream& rng,
                   bool complex_entries = false, double cap = 100.0, double slack = -1.0);

// Acceptance predicate of the rejection strategy: AB + BA has no eigenvalue
// below zero.
bool psd_symmetrized_acceptable(const HermitianMatrix& a, const HermitianMatrix& b);

struct PsdPair {
    HermitianMatrix a;
    HermitianMatrix b;
    int draws;  // rejection strategy: draws consumed (1 for commuting)
};

// Positive pair with AB + BA >= 0, either by a shared eigenbasis (guaranteed)
// or by rejection sampling with a 1000-draw budget.
PsdPair gen_pair_psd_symmetrized(int dim, RngStream& rng, PairStrategy strategy,
                                 bool complex_entries = false, double cap = 100.0);

} // namespace socv

#endif
