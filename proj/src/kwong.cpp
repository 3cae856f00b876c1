#include "socv/kwong.hpp"

#include <algorithm>
#include <cmath>

namespace socv {

PointSet::PointSet(std::vector<double> pts) : points(std::move(pts)) {
    if (points.empty()) throw PreconditionViolation("PointSet: empty");
    for (double t : points)
        if (!(t > 0.0)) throw PreconditionViolation("PointSet: points must be > 0");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k) {
            const double scale = std::max({1.0, points[i], points[k]});
            if (!(std::abs(points[i] - points[k]) >= 1e-10 * scale))
                throw PreconditionViolation("PointSet: points must be pairwise distinct");
        }
}

HermitianMatrix kwong_matrix(const ScalarFunction& f, const PointSet& pts) {
    const int n = pts.size();
    std::vector<double> fv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = pts.points[static_cast<std::size_t>(i)];
        if (!f.domain.contains(t))
            throw DomainViolation("kwong_matrix: point " + std::to_string(t) +
                                  " outside domain " + f.domain.describe());
        fv[static_cast<std::size_t>(i)] = f.eval(t);
    }
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = (fv[static_cast<std::size_t>(i)] + fv[static_cast<std::size_t>(j)]) /
                      (pts.points[static_cast<std::size_t>(i)] +
                       pts.points[static_cast<std::size_t>(j)]);
    return HermitianMatrix(std::move(m));
}

PointSet sample_point_set(const Interval& domain, int n_max, std::uint64_t seed,
                          std::uint64_t trial, double point_lo, double point_hi) {
    if (n_max < 2) throw PreconditionViolation("sample_point_set: n_max >= 2");
    const double lo = std::max(point_lo, domain.lo > 0.0 ? domain.lo * (1.0 + 1e-6) : point_lo);
    const double hi = std::min(point_hi, domain.hi_finite() ? domain.hi * (1.0 - 1e-6) : point_hi);
    if (!(lo < hi)) throw PreconditionViolation("sample_point_set: empty point range");
    RngStream rng(seed, trial);
    const int n = 2 + static_cast<int>(trial % static_cast<std::uint64_t>(n_max - 1));
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        const double t = rng.log_uniform(lo, hi);
        bool distinct = true;
        for (double u : pts)
            if (std::abs(u - t) < 1e-10 * std::max({1.0, u, t})) distinct = false;
        if (distinct) pts.push_back(t);
    }
    return PointSet(std::move(pts));
}

CheckOutcome kwong_empirical(const ScalarFunction& f, int n_max, int trials,
                             std::uint64_t seed, double eps_rel,
                             double point_lo, double point_hi) {
    if (trials < 1) throw PreconditionViolation("kwong_empirical: trials >= 1");
    if (n_max < 2) throw PreconditionViolation("kwong_empirical: n_max >= 2");

    std::vector<double> margin(static_cast<std::size_t>(trials));
    std::vector<double> tol(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(static)
    for (int i = 0; i < trials; ++i) {
        const PointSet pts = sample_point_set(f.domain, n_max, seed,
                                              static_cast<std::uint64_t>(i),
                                              point_lo, point_hi);
        const SpectrumStats st = spectrum_stats(kwong_matrix(f, pts));
        margin[static_cast<std::size_t>(i)] = st.min_eig;
        tol[static_cast<std::size_t>(i)] = gap_tol(st.op_norm, eps_rel);
    }

    CheckOutcome out;
    out.checker_id = "kwong.empirical";
    out.verdict = Verdict::Pass;
    double worst = kInf, worst_tol = eps_rel;
    for (int i = 0; i < trials; ++i) {
        if (margin[static_cast<std::size_t>(i)] < worst) {
            worst = margin[static_cast<std::size_t>(i)];
            worst_tol = tol[static_cast<std::size_t>(i)];
        }
        if (margin[static_cast<std::size_t>(i)] < -tol[static_cast<std::size_t>(i)])
            out.verdict = Verdict::Fail;
    }
    out.margins["worst_kwong"] = worst;
    out.tolerance_used = worst_tol;
    out.instance_fingerprint = fingerprint(nlohmann::json{{"function", f.descriptor()},
                                                          {"n_max", n_max},
                                                          {"trials", trials},
                                                          {"seed", seed}});
    return out;
}

std::pair<ScalarFunction, ScalarFunction> prop14_transforms(const ScalarFunction& g, double p) {
    if (!(g.domain.lo == 0.0 && !g.domain.hi_finite()))
        throw PreconditionViolation("prop14_transforms: domain of g must be (0, inf)");
    if (!(p >= -1.0 && p <= 1.0))
        throw PreconditionViolation("prop14_transforms: p must be in [-1, 1]");

    auto base = g.eval;
    const Interval pos(0.0, kInf);

    FunctionFlags kf;
    kf.kwong = g.flags.soc;
    ScalarFunction g_of_tp = make_scalar_function(
        g.name + "(t^" + std::to_string(p) + ")", pos,
        [base, p](double t) { return base(std::pow(t, p)); }, kf);

    FunctionFlags sf;
    sf.soc = g.flags.kwong && p >= 0.0 && p <= 0.5;
    sf.operator_convex = sf.soc;
    ScalarFunction ratio = make_scalar_function(
        g.name + "(t^" + std::to_string(p) + ")/t^" + std::to_string(p), pos,
        [base, p](double t) {
            const double tp = std::pow(t, p);
            return base(tp) / tp;
        },
        sf);

    return {std::move(g_of_tp), std::move(ratio)};
}

} // namespace socv
