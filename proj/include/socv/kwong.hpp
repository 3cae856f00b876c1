#ifndef SOCV_KWONG_HPP
#define SOCV_KWONG_HPP

#include <utility>
#include <vector>

#include "socv/functions.hpp"
#include "socv/linalg.hpp"

namespace socv {

/// Strictly positive, pairwise distinct evaluation points for Kwong matrices.
struct PointSet {
    std::vector<double> points;

    explicit PointSet(std::vector<double> pts);
    int size() const { return static_cast<int>(points.size()); }
};

// K_f = [ (f(t_i) + f(t_j)) / (t_i + t_j) ]; f belongs to the Kwong class
// exactly when this is PSD for every finite positive point set.
HermitianMatrix kwong_matrix(const ScalarFunction& f, const PointSet& pts);

// Random point-set battery: samples sets of sizes 2..n_max with log-uniform
// points and reports the worst min-eig margin of the Kwong matrix.
CheckOutcome kwong_empirical(const ScalarFunction& f, int n_max, int trials,
                             std::uint64_t seed, double eps_rel = 1e-8,
                             double point_lo = 1e-2, double point_hi = 1e2);

// Deterministic point-set sampler shared by kwong_empirical and the
// reciprocal-duality tests: set for (seed, trial) has size 2 + trial % (n_max-1).
PointSet sample_point_set(const Interval& domain, int n_max, std::uint64_t seed,
                          std::uint64_t trial, double point_lo = 1e-2,
                          double point_hi = 1e2);

// Composites linking the two classes on (0, inf):
//   g in SOC  and -1 <= p <= 1   ->  g(t^p) is Kwong,
//   g Kwong   and  0 <= p <= 1/2 ->  g(t^p)/t^p is SOC.
// Both functions are returned; flags are set only when the hypothesis holds.
std::pair<ScalarFunction, ScalarFunction> prop14_transforms(const ScalarFunction& g, double p);

} // namespace socv

#endif
