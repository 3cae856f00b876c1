#include "socv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "socv/functions.hpp"
#include "socv/rng.hpp"

namespace socv {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string fingerprint(const nlohmann::json& j) {
    return hex64(fnv1a(j.dump()));
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
    const double defect = m_.max_hermitian_defect();
    const double scale = std::max(1.0, m_.max_abs());
    if (!(defect <= 1e-12 * scale))
        throw DimensionMismatch("HermitianMatrix: symmetry defect " + std::to_string(defect) +
                                " exceeds 1e-12 relative");
    const int n = m_.dim();
    for (int i = 0; i < n; ++i) {
        m_(i, i) = Complex(m_(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
            m_(i, j) = v;
            m_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix hermitian_part(const Matrix& m) {
    Matrix r = m;
    const int n = r.dim();
    for (int i = 0; i < n; ++i) {
        r(i, i) = Complex(r(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(r), HermitianMatrix::Trusted{});
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_real(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw DimensionMismatch("from_real: ragged rows");
        for (int j = 0; j < n; ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    return HermitianMatrix(m_ + o.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    return HermitianMatrix(m_ - o.m_, Trusted{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& h) {
    return HermitianMatrix(Complex(s, 0.0) * h.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix HermitianMatrix::shift(double s) const {
    Matrix m = m_;
    for (int i = 0; i < m.dim(); ++i) m(i, i) += s;
    return HermitianMatrix(std::move(m), Trusted{});
}

// ---------------------------------------------------------------------------
// eigendecomposition

SpectralDecomposition eigh(const HermitianMatrix& h) {
    const int n = h.dim();
    Matrix w = h.matrix();
    Matrix u = Matrix::identity(n);

    constexpr int kMaxSweeps = 64;
    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        double off2 = 0.0, diag2 = 0.0;
        for (int i = 0; i < n; ++i) {
            diag2 += std::norm(w(i, i));
            for (int j = i + 1; j < n; ++j) off2 += std::norm(w(i, j));
        }
        if (off2 <= 1e-28 * std::max(diag2, 1e-300)) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex wpq = w(p, q);
                const double apq = std::abs(wpq);
                if (apq <= 1e-300) {
                    w(p, q) = 0.0;
                    w(q, p) = 0.0;
                    continue;
                }
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const Complex phase = wpq / apq;
                const double theta = (aqq - app) / (2.0 * apq);
                // smaller-magnitude root of tau^2 - 2*theta*tau - 1 = 0
                const double tau = (theta >= 0.0)
                                       ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                       : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tau * tau + 1.0);
                const double s = tau * c;
                const Complex g_qp = s * std::conj(phase);  // G(q,p)
                const Complex g_pq = -s * phase;            // G(p,q)

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex wkp = w(k, p), wkq = w(k, q);
                    const Complex np = c * wkp + g_qp * wkq;
                    const Complex nq = g_pq * wkp + c * wkq;
                    w(k, p) = np;
                    w(p, k) = std::conj(np);
                    w(k, q) = nq;
                    w(q, k) = std::conj(nq);
                }
                w(p, p) = app + tau * apq;
                w(q, q) = aqq - tau * apq;
                w(p, q) = 0.0;
                w(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const Complex ukp = u(k, p), ukq = u(k, q);
                    u(k, p) = c * ukp + g_qp * ukq;
                    u(k, q) = g_pq * ukp + c * ukq;
                }
            }
        }
    }
    if (!converged) {
        // re-test after the last sweep before declaring failure
        double off2 = 0.0, diag2 = 0.0;
        for (int i = 0; i < n; ++i) {
            diag2 += std::norm(w(i, i));
            for (int j = i + 1; j < n; ++j) off2 += std::norm(w(i, j));
        }
        if (off2 > 1e-28 * std::max(diag2, 1e-300))
            throw EighFailure("eigh: no convergence after 64 sweeps, input " +
                              fingerprint(to_json(h)));
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return w(a, a).real() < w(b, b).real(); });

    SpectralDecomposition d;
    d.eigenvalues.resize(static_cast<std::size_t>(n));
    d.eigenvectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        d.eigenvalues[static_cast<std::size_t>(j)] = w(idx[static_cast<std::size_t>(j)],
                                                       idx[static_cast<std::size_t>(j)]).real();
        for (int i = 0; i < n; ++i) d.eigenvectors(i, j) = u(i, idx[static_cast<std::size_t>(j)]);
    }
    return d;
}

SpectrumStats spectrum_stats(const HermitianMatrix& h) {
    const SpectralDecomposition d = eigh(h);
    const double lo = d.eigenvalues.front();
    const double hi = d.eigenvalues.back();
    return {lo, hi, std::max(std::abs(lo), std::abs(hi))};
}

double op_norm(const HermitianMatrix& h) { return spectrum_stats(h).op_norm; }

PsdVerdict psd_check(const HermitianMatrix& h, double tol) {
    if (!(tol >= 0.0)) throw PreconditionViolation("psd_check: tol must be >= 0");
    const double margin = spectrum_stats(h).min_eig;
    return {margin >= -tol, margin, tol};
}

// ---------------------------------------------------------------------------
// functional calculus

static HermitianMatrix reconstruct(const SpectralDecomposition& d,
                                   const std::vector<double>& vals) {
    const int n = d.eigenvectors.dim();
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex s{};
            for (int k = 0; k < n; ++k)
                s += vals[static_cast<std::size_t>(k)] * d.eigenvectors(i, k) *
                     std::conj(d.eigenvectors(j, k));
            m(i, j) = s;
            m(j, i) = std::conj(s);
        }
    }
    return hermitian_part(m);
}

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h) {
    const SpectralDecomposition d = eigh(h);
    std::vector<double> offending;
    for (double lam : d.eigenvalues)
        if (!f.domain.contains(lam)) offending.push_back(lam);
    if (!offending.empty()) {
        std::ostringstream os;
        os << "apply_function(" << f.name << "): eigenvalues outside domain ("
           << f.domain.describe() << "):";
        for (double lam : offending) os << ' ' << lam;
        throw DomainViolation(os.str());
    }
    std::vector<double> vals(d.eigenvalues.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = f.eval(d.eigenvalues[k]);
    return reconstruct(d, vals);
}

HermitianMatrix apply_spectral(const HermitianMatrix& h, double (*f)(double)) {
    const SpectralDecomposition d = eigh(h);
    std::vector<double> vals(d.eigenvalues.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = f(d.eigenvalues[k]);
    return reconstruct(d, vals);
}

HermitianMatrix inverse_pd(const HermitianMatrix& h, double eps_inv) {
    const SpectralDecomposition d = eigh(h);
    const double hi = std::abs(d.eigenvalues.back());
    const double lo = d.eigenvalues.front();
    if (!(lo > eps_inv * std::max(1.0, hi)))
        throw NonInvertible("inverse_pd: min eigenvalue " + std::to_string(lo) +
                            " below invertibility threshold");
    std::vector<double> vals(d.eigenvalues.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = 1.0 / d.eigenvalues[k];
    return reconstruct(d, vals);
}

HermitianMatrix matrix_power(const HermitianMatrix& h, double p) {
    const SpectralDecomposition d = eigh(h);
    if (!(d.eigenvalues.front() > 0.0))
        throw PreconditionViolation("matrix_power: matrix must be positive definite");
    std::vector<double> vals(d.eigenvalues.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = std::pow(d.eigenvalues[k], p);
    return reconstruct(d, vals);
}

HermitianMatrix block2x2(const Matrix& m11, const Matrix& m12,
                         const Matrix& m21, const Matrix& m22) {
    const int n = m11.dim();
    if (m12.dim() != n || m21.dim() != n || m22.dim() != n)
        throw DimensionMismatch("block2x2: blocks must share one dimension");
    Matrix m(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = m11(i, j);
            m(i, n + j) = m12(i, j);
            m(n + i, j) = m21(i, j);
            m(n + i, n + j) = m22(i, j);
        }
    }
    return HermitianMatrix(std::move(m));  // checks m21 = m12* via symmetry
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const HermitianMatrix& h) {
    const int n = h.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    bool any_imag = false;
    for (int i = 0; i < n; ++i) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (int j = 0; j < n; ++j) {
            rrow.push_back(h(i, j).real());
            irow.push_back(h(i, j).imag());
            if (h(i, j).imag() != 0.0) any_imag = true;
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    nlohmann::json j{{"dim", n}, {"re", std::move(re)}};
    if (any_imag) j["im"] = std::move(im);
    return j;
}

HermitianMatrix hermitian_from_json(const nlohmann::json& j) {
    const int n = j.at("dim").get<int>();
    if (n < 1) throw DimensionMismatch("matrix json: dim must be >= 1");
    Matrix m(n);
    const auto& re = j.at("re");
    const bool has_im = j.contains("im");
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double r = re.at(static_cast<std::size_t>(i))
                                .at(static_cast<std::size_t>(k)).get<double>();
            const double s = has_im ? j.at("im").at(static_cast<std::size_t>(i))
                                          .at(static_cast<std::size_t>(k)).get<double>()
                                    : 0.0;
            m(i, k) = Complex(r, s);
        }
    }
    return HermitianMatrix(std::move(m));
}

} // namespace socv
