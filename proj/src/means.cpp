#include "socv/means.hpp"

#include <cmath>

namespace socv {

static void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b,
                             const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": dims " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

HermitianMatrix nabla(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    require_same_dim(a, b, "nabla");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw PreconditionViolation("nabla: alpha must be in [0, 1]");
    return (1.0 - alpha) * a + alpha * b;
}

// strict positivity under the tolerance model
static void require_strictly_positive(const HermitianMatrix& h, double eps_rel,
                                      const char* who) {
    const SpectrumStats st = spectrum_stats(h);
    if (!(st.min_eig > gap_tol(st.op_norm, eps_rel)))
        throw NonInvertible(std::string(who) + ": operand not strictly positive (min eig " +
                            std::to_string(st.min_eig) + ")");
}

HermitianMatrix harmonic(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                         double eps_rel) {
    require_same_dim(a, b, "harmonic");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw PreconditionViolation("harmonic: alpha must be in [0, 1]");
    if (alpha == 0.0) return a;
    if (alpha == 1.0) return b;
    require_strictly_positive(a, eps_rel, "harmonic");
    require_strictly_positive(b, eps_rel, "harmonic");
    const HermitianMatrix s = (1.0 - alpha) * inverse_pd(a) + alpha * inverse_pd(b);
    return inverse_pd(s);
}

HermitianMatrix symmetrized_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    require_same_dim(a, b, "symmetrized_product");
    return hermitian_part(a.matrix() * b.matrix() + b.matrix() * a.matrix());
}

double mean_gap_residual(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    require_same_dim(a, b, "mean_gap_residual");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("mean_gap_residual: alpha must be in (0, 1)");
    const HermitianMatrix lhs = nabla(a, b, alpha) - harmonic(a, b, alpha);
    const HermitianMatrix x = alpha * a + (1.0 - alpha) * b;  // note swapped weights
    const Matrix d = (a - b).matrix();
    const Matrix rhs = Complex(alpha * (1.0 - alpha), 0.0) *
                       (d * (inverse_pd(x).matrix() * d));
    return op_norm(lhs - hermitian_part(rhs));
}

ParallelSumMin parallel_sum_minimizer(const HermitianMatrix& a, const HermitianMatrix& b,
                                      const Vector& z) {
    require_same_dim(a, b, "parallel_sum_minimizer");
    const HermitianMatrix a_inv = inverse_pd(a);
    const HermitianMatrix p = inverse_pd(a_inv + inverse_pd(b));
    const Vector pz = p.matrix() * z;
    ParallelSumMin r;
    r.value = dot(pz, z).real();
    r.x_star = a_inv.matrix() * pz;
    return r;
}

} // namespace socv
