#ifndef SOCV_MEANS_HPP
#define SOCV_MEANS_HPP

#include "socv/linalg.hpp"

namespace socv {

// Weighted arithmetic mean (1-alpha)A + alpha*B, alpha in [0, 1].
HermitianMatrix nabla(const HermitianMatrix& a, const HermitianMatrix& b, double alpha);

// Weighted harmonic mean ((1-alpha)A^-1 + alpha*B^-1)^-1 for alpha in (0, 1);
// the endpoints return A resp. B. Inputs must be strictly positive under the
// tolerance model (min_eig > eps_rel * max(1, ||.||)).
HermitianMatrix harmonic(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                         double eps_rel = kEpsRel);

// AB + BA.
HermitianMatrix symmetrized_product(const HermitianMatrix& a, const HermitianMatrix& b);

// Operator-norm residual of the exact mean-gap identity
//   A nabla_a B - A !_a B = a(1-a) (A-B) (aA + (1-a)B)^-1 (A-B);
// stays at rounding level for any positive pair.
double mean_gap_residual(const HermitianMatrix& a, const HermitianMatrix& b, double alpha);

struct ParallelSumMin {
    Vector x_star;
    double value;
};

// Minimum characterization of the parallel sum (A^-1 + B^-1)^-1:
// value = <(A^-1+B^-1)^-1 z, z> is attained by the split z = x* + (z - x*).
ParallelSumMin parallel_sum_minimizer(const HermitianMatrix& a, const HermitianMatrix& b,
                                      const Vector& z);

} // namespace socv

#endif
