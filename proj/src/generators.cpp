#include "socv/generators.hpp"

#include <algorithm>
#include <cmath>

#include "socv/means.hpp"

namespace socv {

Matrix random_unitary(int dim, RngStream& rng, bool complex_entries) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        Matrix g(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                g(i, j) = complex_entries ? Complex(rng.normal(), rng.normal())
                                          : Complex(rng.normal(), 0.0);
        // modified Gram-Schmidt over columns
        bool ok = true;
        for (int j = 0; j < dim && ok; ++j) {
            for (int k = 0; k < j; ++k) {
                Complex proj{};
                for (int i = 0; i < dim; ++i) proj += g(i, j) * std::conj(g(i, k));
                for (int i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
            }
            double nrm2 = 0.0;
            for (int i = 0; i < dim; ++i) nrm2 += std::norm(g(i, j));
            const double nrm = std::sqrt(nrm2);
            if (nrm < 1e-8) {
                ok = false;
                break;
            }
            for (int i = 0; i < dim; ++i) g(i, j) /= nrm;
        }
        if (ok) return g;
    }
    throw GenerationFailure("random_unitary: degenerate Gaussian draw 16 times");
}

static std::pair<double, double> sampling_bounds(const Interval& j, double cap) {
    const double lo = std::max(j.lo, -cap);
    const double hi = std::min(j.hi, cap);
    const double d = interval_delta(j);
    if (!(lo + d < hi - d))
        throw GenerationFailure("generator: interval " + j.describe() +
                                " too narrow after cap/delta");
    return {lo + d, hi - d};
}

static HermitianMatrix conjugated_diagonal(const std::vector<double>& eigs,
                                           RngStream& rng, bool complex_entries) {
    const int dim = static_cast<int>(eigs.size());
    const Matrix q = random_unitary(dim, rng, complex_entries);
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            Complex s{};
            for (int k = 0; k < dim; ++k)
                s += eigs[static_cast<std::size_t>(k)] * q(i, k) * std::conj(q(j, k));
            m(i, j) = s;
            m(j, i) = std::conj(s);
        }
    }
    return hermitian_part(m);
}

HermitianMatrix gen_hermitian_in_interval(const Interval& j, int dim, RngStream& rng,
                                          bool complex_entries, double cap) {
    if (dim < 1) throw PreconditionViolation("gen_hermitian_in_interval: dim >= 1");
    const auto [lo, hi] = sampling_bounds(j, cap);
    std::vector<double> eigs(static_cast<std::size_t>(dim));
    for (double& e : eigs) e = rng.uniform(lo, hi);
    return conjugated_diagonal(eigs, rng, complex_entries);
}

std::pair<HermitianMatrix, HermitianMatrix>
gen_dominated_pair(const Interval& j, int dim, double m, RngStream& rng,
                   bool complex_entries, double cap, double slack) {
    if (!(m > 0.0)) throw PreconditionViolation("gen_dominated_pair: m must be > 0");
    if (slack < 0.0) slack = m;
    const auto [lo, hi] = sampling_bounds(j, cap);
    if (!(hi - lo > m + slack))
        throw GenerationFailure("gen_dominated_pair: interval " + j.describe() +
                                " too narrow for m=" + std::to_string(m));
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> eigs(static_cast<std::size_t>(dim));
        for (double& e : eigs) e = rng.uniform(lo, hi - m - slack);
        const HermitianMatrix b = conjugated_diagonal(eigs, rng, complex_entries);
        std::vector<double> peigs(static_cast<std::size_t>(dim));
        for (double& e : peigs) e = rng.uniform(0.0, slack);
        const HermitianMatrix p = conjugated_diagonal(peigs, rng, complex_entries);
        const HermitianMatrix a = b.shift(m) + p;
        const SpectrumStats st = spectrum_stats(a);
        if (st.min_eig > j.lo && st.max_eig < j.hi) return {a, b};
    }
    throw GenerationFailure("gen_dominated_pair: 100 redraws exhausted");
}

bool psd_symmetrized_acceptable(const HermitianMatrix& a, const HermitianMatrix& b) {
    return spectrum_stats(symmetrized_product(a, b)).min_eig >= 0.0;
}

PsdPair gen_pair_psd_symmetrized(int dim, RngStream& rng, PairStrategy strategy,
                                 bool complex_entries, double cap) {
    if (dim < 1) throw PreconditionViolation("gen_pair_psd_symmetrized: dim >= 1");
    const Interval pos(0.0, kInf);
    const auto [lo, hi] = sampling_bounds(pos, cap);

    if (strategy == PairStrategy::Commuting) {
        const Matrix q = random_unitary(dim, rng, complex_entries);
        std::vector<double> e1(static_cast<std::size_t>(dim)),
            e2(static_cast<std::size_t>(dim));
        for (double& e : e1) e = rng.uniform(lo, hi);
        for (double& e : e2) e = rng.uniform(lo, hi);
        Matrix m1(dim), m2(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i; j < dim; ++j) {
                Complex s1{}, s2{};
                for (int k = 0; k < dim; ++k) {
                    const Complex w = q(i, k) * std::conj(q(j, k));
                    s1 += e1[static_cast<std::size_t>(k)] * w;
                    s2 += e2[static_cast<std::size_t>(k)] * w;
                }
                m1(i, j) = s1;
                m1(j, i) = std::conj(s1);
                m2(i, j) = s2;
                m2(j, i) = std::conj(s2);
            }
        }
        return {hermitian_part(m1), hermitian_part(m2), 1};
    }

    // Independent draws; Rejection re-draws until AB + BA >= 0.
    int draws = 0;
    while (draws < 1000) {
        HermitianMatrix a = gen_hermitian_in_interval(pos, dim, rng, complex_entries, cap);
        HermitianMatrix b = gen_hermitian_in_interval(pos, dim, rng, complex_entries, cap);
        ++draws;
        if (strategy == PairStrategy::Independent || psd_symmetrized_acceptable(a, b))
            return {std::move(a), std::move(b), draws};
    }
    throw GenerationFailure(
        "gen_pair_psd_symmetrized: rejection budget of 1000 draws exhausted at dim " +
        std::to_string(dim) + " (acceptance rate < 0.1%)");
}

} // namespace socv
