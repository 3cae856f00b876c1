#ifndef SOCV_LINALG_HPP
#define SOCV_LINALG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "socv/matrix.hpp"

namespace socv {

struct ScalarFunction; // functions.hpp

// Default relative tolerance of the positivity model: a gap matrix G counts
// as ">= 0" when min_eig(G) >= -eps_rel * max(1, ||G||), and as "> 0" when
// min_eig(G) > +eps_rel * max(1, ||G||).
inline constexpr double kEpsRel = 1e-8;

// Scale-aware absolute tolerance for a gap of operator norm `scale`.
inline double gap_tol(double scale, double eps_rel = kEpsRel) {
    return eps_rel * (scale > 1.0 ? scale : 1.0);
}

/// Finite complex Hermitian matrix. Construction checks Hermitian symmetry to
/// 1e-12 relative and then symmetrizes exactly as (M + M*)/2, so every value
/// of this type is Hermitian to the last bit.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix m);

    static HermitianMatrix identity(int n) { return HermitianMatrix(Matrix::identity(n)); }
    static HermitianMatrix diagonal(const std::vector<double>& d);
    static HermitianMatrix from_real(const std::vector<std::vector<double>>& rows);

    int dim() const { return m_.dim(); }
    const Matrix& matrix() const { return m_; }
    const Complex& operator()(int i, int j) const { return m_(i, j); }

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    friend HermitianMatrix operator*(double s, const HermitianMatrix& h);

    HermitianMatrix shift(double s) const; // this + s*I

private:
    struct Trusted {};
    HermitianMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
    Matrix m_;
    friend HermitianMatrix hermitian_part(const Matrix& m);
};

// (M + M*)/2 without the symmetry check; for products that are Hermitian up
// to rounding by construction.
HermitianMatrix hermitian_part(const Matrix& m);

struct SpectralDecomposition {
    std::vector<double> eigenvalues; // ascending
    Matrix eigenvectors;             // unitary, columns match eigenvalues
};

struct PsdVerdict {
    bool is_psd;
    double margin;        // minimum eigenvalue
    double tolerance_used;
};

struct SpectrumStats {
    double min_eig;
    double max_eig;
    double op_norm;       // max(|min_eig|, |max_eig|)
};

// Cyclic Jacobi with complex rotations. Deterministic for identical input
// bits; throws EighFailure (message carries the input fingerprint) if the
// sweep cap is hit.
SpectralDecomposition eigh(const HermitianMatrix& h);

SpectrumStats spectrum_stats(const HermitianMatrix& h);

double op_norm(const HermitianMatrix& h);

PsdVerdict psd_check(const HermitianMatrix& h, double tol);

// U diag(f(lambda_i)) U*. The spectrum must lie strictly inside f's open
// domain; offending eigenvalues are listed in the DomainViolation message.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h);

// Same, for a bare callable with no domain constraint.
HermitianMatrix apply_spectral(const HermitianMatrix& h, double (*f)(double));

// Inverse of a positive definite matrix via its eigendecomposition.
// eps_inv guards numerical invertibility, not the order relation.
HermitianMatrix inverse_pd(const HermitianMatrix& h, double eps_inv = 1e-13);

// t^p on a positive definite matrix.
HermitianMatrix matrix_power(const HermitianMatrix& h, double p);

// [[m11, m12],[m21, m22]] as one Hermitian matrix; requires m21 = m12*.
HermitianMatrix block2x2(const Matrix& m11, const Matrix& m12,
                         const Matrix& m21, const Matrix& m22);

// Matrix JSON: {"dim": n, "re": [[...]], "im": [[...]]}, "im" omitted when
// zero. Serialization round-trips IEEE-754 doubles exactly.
nlohmann::json to_json(const HermitianMatrix& h);
HermitianMatrix hermitian_from_json(const nlohmann::json& j);

std::string fingerprint(const nlohmann::json& j);

} // namespace socv

#endif
