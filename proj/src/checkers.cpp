#include "socv/checkers.hpp"

#include <algorithm>
#include <cmath>

#include "socv/means.hpp"

namespace socv {

namespace {

// Accumulates named margins and the largest gap scale seen; the absolute
// tolerance of the outcome is eps_rel * max(1, scale).
class MarginSet {
public:
    explicit MarginSet(double eps_rel) : eps_(eps_rel) {}

    double add_gap(const std::string& name, const HermitianMatrix& gap) {
        const SpectrumStats st = spectrum_stats(gap);
        scale_ = std::max(scale_, st.op_norm);
        margins_[name] = st.min_eig;
        return st.min_eig;
    }

    double add_scalar(const std::string& name, double value, double scale) {
        scale_ = std::max(scale_, std::abs(scale));
        margins_[name] = value;
        return value;
    }

    double tol() const { return gap_tol(scale_, eps_); }

    CheckOutcome finish(std::string id, Verdict v, std::string fp,
                        std::string skip_reason = {}) const {
        CheckOutcome out;
        out.checker_id = std::move(id);
        out.margins = margins_;
        out.verdict = v;
        out.skip_reason = std::move(skip_reason);
        out.tolerance_used = tol();
        out.instance_fingerprint = std::move(fp);
        return out;
    }

private:
    double eps_;
    double scale_ = 1.0;
    std::map<std::string, double> margins_;
};

CheckOutcome skip_outcome(const std::string& id, double eps_rel, std::string fp,
                          std::string reason) {
    CheckOutcome out;
    out.checker_id = id;
    out.verdict = Verdict::Skip;
    out.skip_reason = std::move(reason);
    out.tolerance_used = eps_rel;
    out.instance_fingerprint = std::move(fp);
    return out;
}

std::string fp_of(const std::string& id, const ScalarFunction* f, const HermitianMatrix& a,
                  const HermitianMatrix& b, nlohmann::json extra = nlohmann::json::object()) {
    nlohmann::json j{{"checker", id}, {"A", to_json(a)}, {"B", to_json(b)}};
    if (f) j["function"] = f->descriptor();
    for (auto& [k, v] : extra.items()) j[k] = v;
    return fingerprint(j);
}

void require_strict_negative(const HermitianMatrix& h, double eps_rel, const char* who) {
    const SpectrumStats st = spectrum_stats(h);
    if (!(st.max_eig < -gap_tol(st.op_norm, eps_rel)))
        throw PreconditionViolation(std::string(who) + ": operand not strictly negative");
}

void require_strict_positive(const HermitianMatrix& h, double eps_rel, const char* who) {
    const SpectrumStats st = spectrum_stats(h);
    if (!(st.min_eig > gap_tol(st.op_norm, eps_rel)))
        throw PreconditionViolation(std::string(who) + ": operand not strictly positive");
}

// inverse of a strictly negative matrix
HermitianMatrix inverse_nd(const HermitianMatrix& h) {
    return -1.0 * inverse_pd(-1.0 * h);
}

double eval_at(const ScalarFunction& g, double t) {
    if (!g.domain.contains(t))
        throw DomainViolation("checker: scalar argument " + std::to_string(t) +
                              " outside domain " + g.domain.describe() + " of " + g.name);
    return g.eval(t);
}

} // namespace

// ---------------------------------------------------------------------------

CheckOutcome check_subadditivity(const ScalarFunction& f, const HermitianMatrix& a,
                                 const HermitianMatrix& b, double eps_rel) {
    const std::string id = "prop25.subadd";
    const std::string fp = fp_of(id, &f, a, b);
    try {
        const HermitianMatrix gap =
            apply_function(f, a) + apply_function(f, b) - apply_function(f, a + b);
        MarginSet ms(eps_rel);
        const double margin = ms.add_gap("gap", gap);
        return ms.finish(id, margin >= -ms.tol() ? Verdict::Pass : Verdict::Fail, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

CheckOutcome check_thm5new(const ScalarFunction& g, const HermitianMatrix& a,
                           const HermitianMatrix& b, const std::vector<double>& lambda_grid,
                           double eps_rel) {
    const std::string id = "thm5new";
    if (lambda_grid.empty()) throw PreconditionViolation("thm5new: empty lambda grid");
    for (double lam : lambda_grid)
        if (!(lam >= 0.0)) throw PreconditionViolation("thm5new: lambda must be >= 0");
    require_strict_negative(a, eps_rel, "thm5new");
    require_strict_negative(b, eps_rel, "thm5new");
    const std::string fp = fp_of(id, &g, a, b, {{"lambda_grid", lambda_grid}});

    MarginSet ms(eps_rel);
    double condition = kInf, eq2 = kInf;
    double cond_scale = 1.0, eq2_scale = 1.0;
    for (double lam : lambda_grid) {
        const HermitianMatrix ra = inverse_pd((-1.0 * a).shift(lam));  // (lam - A)^-1
        const HermitianMatrix rb = inverse_pd((-1.0 * b).shift(lam));
        const HermitianMatrix cond_term =
            hermitian_part(a.matrix() * (rb.matrix() * a.matrix()) +
                           b.matrix() * (ra.matrix() * b.matrix()));
        const HermitianMatrix eq2_term = (cond_term - 2.0 * (a + b)).shift(lam);
        const SpectrumStats c = spectrum_stats(cond_term);
        const SpectrumStats e = spectrum_stats(eq2_term);
        condition = std::min(condition, c.min_eig);
        eq2 = std::min(eq2, e.min_eig);
        cond_scale = std::max(cond_scale, c.op_norm);
        eq2_scale = std::max(eq2_scale, e.op_norm);
    }
    ms.add_scalar("condition", condition, cond_scale);
    ms.add_scalar("eq2", eq2, eq2_scale);

    const double subadd = ms.add_gap(
        "subadd", apply_function(g, a) + apply_function(g, b) - apply_function(g, a + b));

    bool have_neg_limit = false;
    double neg_limit = 0.0;
    if (subadd >= -ms.tol()) {
        const HermitianMatrix t = hermitian_part(
            a.matrix() * (inverse_nd(b).matrix() * a.matrix()) +
            b.matrix() * (inverse_nd(a).matrix() * b.matrix()));
        neg_limit = ms.add_gap("neg_limit", -1.0 * t);
        have_neg_limit = true;
    }

    const double tol = ms.tol();
    Verdict v = Verdict::Pass;
    if (condition >= -tol) {
        if (subadd < -tol || eq2 < -tol) v = Verdict::Fail;
        if (have_neg_limit && neg_limit < -tol) v = Verdict::Fail;
    }
    return ms.finish(id, v, fp);
}

CheckOutcome check_thm16(const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, double eps_rel) {
    const std::string id = "thm16.quarter";
    const std::string fp = fp_of(id, &g, a, b);
    require_strict_positive(a, eps_rel, "thm16");
    require_strict_positive(b, eps_rel, "thm16");

    // g must be positive on every spectrum involved for f = 1/g to make sense
    const HermitianMatrix sum = a + b;
    for (const HermitianMatrix* h : {&a, &b, &sum}) {
        for (double lam : eigh(*h).eigenvalues) {
            if (!g.domain.contains(lam)) continue;  // surfaces as SKIP below
            if (!(g.eval(lam) > 0.0))
                throw PreconditionViolation("thm16: g(" + std::to_string(lam) + ") <= 0");
        }
    }
    auto base = g.eval;
    const ScalarFunction f{"recip(" + g.name + ")", g.domain,
                           [base](double t) { return 1.0 / base(t); }, {}, std::nullopt};
    try {
        const HermitianMatrix ga = apply_function(g, a);
        const HermitianMatrix gb = apply_function(g, b);
        MarginSet ms(eps_rel);
        const double symprod = ms.add_gap("symprod", symmetrized_product(a, b));
        const double quarter = ms.add_gap(
            "quarter_gap",
            0.25 * (apply_function(f, a) + apply_function(f, b)) - apply_function(f, a + b));
        const double chain_mid = ms.add_gap(
            "chain_mid", 0.25 * (inverse_pd(ga) + inverse_pd(gb)) - inverse_pd(ga + gb));
        const double tol = ms.tol();
        Verdict v = Verdict::Pass;
        if (chain_mid < -tol) v = Verdict::Fail;
        if (symprod >= -tol && quarter < -tol) v = Verdict::Fail;
        return ms.finish(id, v, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

CheckOutcome check_bu_gap(const ScalarFunction& g, const HermitianMatrix& a,
                          const HermitianMatrix& b, double alpha, double eps_rel) {
    const std::string id = "bu.gap";
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("bu.gap: alpha must be in (0, 1)");
    const std::string fp = fp_of(id, &g, a, b, {{"alpha", alpha}});
    try {
        const HermitianMatrix ga = apply_function(g, a);
        const HermitianMatrix gb = apply_function(g, b);
        const HermitianMatrix lhs =
            nabla(ga, gb, alpha) - apply_function(g, nabla(a, b, alpha));
        const Matrix d = (ga - gb).matrix();
        const HermitianMatrix mid = alpha * ga + (1.0 - alpha) * gb;
        const HermitianMatrix rhs = hermitian_part(
            Complex(alpha * (1.0 - alpha), 0.0) * (d * (inverse_pd(mid).matrix() * d)));
        MarginSet ms(eps_rel);
        const double gap = ms.add_gap("gap", lhs - rhs);
        return ms.finish(id, gap >= -ms.tol() ? Verdict::Pass : Verdict::Fail, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    } catch (const NonInvertible& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

CheckOutcome check_thm9ii(const ScalarFunction& g, const HermitianMatrix& a,
                          const HermitianMatrix& b, double alpha, double eps_rel) {
    const std::string id = "thm9.harmonic";
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("thm9.harmonic: alpha must be in (0, 1)");
    const std::string fp = fp_of(id, &g, a, b, {{"alpha", alpha}});
    try {
        const HermitianMatrix gap =
            harmonic(apply_function(g, a), apply_function(g, b), alpha, eps_rel) -
            apply_function(g, nabla(a, b, alpha));
        MarginSet ms(eps_rel);
        const double margin = ms.add_gap("gap", gap);
        return ms.finish(id, margin >= -ms.tol() ? Verdict::Pass : Verdict::Fail, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    } catch (const NonInvertible& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

namespace {

// [[aA - a(1-a)C, a(1-a)C], [a(1-a)C, (1-a)B - a(1-a)C]]
HermitianMatrix lemma12_block(const HermitianMatrix& a, const HermitianMatrix& b,
                              const HermitianMatrix& c, double alpha) {
    const double w = alpha * (1.0 - alpha);
    const HermitianMatrix m11 = alpha * a - w * c;
    const HermitianMatrix m22 = (1.0 - alpha) * b - w * c;
    const Matrix m12 = (w * c).matrix();
    return block2x2(m11.matrix(), m12, m12, m22.matrix());
}

} // namespace

CheckOutcome check_lemma12(const HermitianMatrix& a, const HermitianMatrix& b,
                           const HermitianMatrix& c, double alpha, double eps_rel) {
    const std::string id = "lemma12.block";
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("lemma12.block: alpha must be in (0, 1)");
    require_strict_positive(a, eps_rel, "lemma12");
    require_strict_positive(b, eps_rel, "lemma12");
    require_strict_positive(c, eps_rel, "lemma12");
    nlohmann::json extra{{"alpha", alpha}, {"C", to_json(c)}};
    const std::string fp = fp_of(id, nullptr, a, b, extra);

    MarginSet ms(eps_rel);
    const double block = ms.add_gap("block", lemma12_block(a, b, c, alpha));
    const double mean = ms.add_gap("mean", harmonic(a, b, alpha, eps_rel) - c);
    const double band = 10.0 * ms.tol();
    if (std::abs(block) <= band || std::abs(mean) <= band)
        return ms.finish(id, Verdict::Skip, fp, "margin inside iff exclusion band");
    const bool agree = (block > 0.0) == (mean > 0.0);
    return ms.finish(id, agree ? Verdict::Pass : Verdict::Fail, fp);
}

CheckOutcome check_cor13(const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, double alpha, double eps_rel) {
    const std::string id = "cor13.block";
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("cor13.block: alpha must be in (0, 1)");
    const std::string fp = fp_of(id, &g, a, b, {{"alpha", alpha}});
    try {
        const HermitianMatrix ga = apply_function(g, a);
        const HermitianMatrix gb = apply_function(g, b);
        const HermitianMatrix n = apply_function(g, nabla(a, b, alpha));
        MarginSet ms(eps_rel);
        const double gap = ms.add_gap("gap", lemma12_block(ga, gb, n, alpha));
        const double thm9_gap = ms.add_gap("thm9_gap", harmonic(ga, gb, alpha, eps_rel) - n);
        const double tol = ms.tol();
        Verdict v = gap >= -tol ? Verdict::Pass : Verdict::Fail;
        // lemma12 bridges the two forms: outside the band their signs agree
        if (std::abs(gap) > 10.0 * tol && std::abs(thm9_gap) > 10.0 * tol &&
            ((gap > 0.0) != (thm9_gap > 0.0)))
            v = Verdict::Fail;
        return ms.finish(id, v, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    } catch (const NonInvertible& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

namespace {

CheckOutcome lower_bound_chain(const std::string& id, const ScalarFunction& g,
                               const HermitianMatrix& a, const HermitianMatrix& b,
                               double m, bool right_side, double eps_rel) {
    if (!(m > 0.0)) throw PreconditionViolation(id + ": m must be > 0");
    const std::string fp = fp_of(id, &g, a, b, {{"m", m}});

    const SpectrumStats diff = spectrum_stats(a - b);
    if (!(diff.min_eig >= m - gap_tol(diff.op_norm, eps_rel)))
        throw PreconditionViolation(id + ": m=" + std::to_string(m) +
                                    " exceeds min_eig(A-B)=" + std::to_string(diff.min_eig));

    const HermitianMatrix ga = apply_function(g, a);
    const HermitianMatrix gb = apply_function(g, b);

    double v1, v2;
    HermitianMatrix first_gap = ga;  // placeholder, overwritten below
    if (right_side) {
        const double sa = spectrum_stats(a).max_eig;
        const double sb = spectrum_stats(b).max_eig;
        v1 = eval_at(g, sb) - eval_at(g, sb + m);
        v2 = eval_at(g, sa - m) - eval_at(g, sa);
        first_gap = (gb - ga).shift(-v1);
    } else {
        const double ta = spectrum_stats(a).min_eig;
        const double tb = spectrum_stats(b).min_eig;
        v1 = eval_at(g, ta) - eval_at(g, ta - m);
        v2 = eval_at(g, tb + m) - eval_at(g, tb);
        first_gap = (ga - gb).shift(-v1);
    }

    MarginSet ms(eps_rel);
    const double first = ms.add_gap("first", first_gap);
    const double second = ms.add_scalar("second", v1 - v2, std::max(std::abs(v1), std::abs(v2)));
    const double third = ms.add_scalar("third", v2, std::abs(v2));
    const double tol = ms.tol();

    Verdict v = Verdict::Pass;
    if (first < -tol || second < -tol || third < -tol) v = Verdict::Fail;
    if (!is_constant_on_grid(g) && !(third > tol)) v = Verdict::Fail;  // strictness
    return ms.finish(id, v, fp);
}

} // namespace

CheckOutcome check_lower_bound_right(const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, double m, double eps_rel) {
    return lower_bound_chain("thm20.right", g, a, b, m, true, eps_rel);
}

CheckOutcome check_lower_bound_left(const ScalarFunction& g, const HermitianMatrix& a,
                                    const HermitianMatrix& b, double m, double eps_rel) {
    return lower_bound_chain("thm21.left", g, a, b, m, false, eps_rel);
}

CheckOutcome check_lemma15(const HermitianMatrix& a, const HermitianMatrix& b, double m,
                           double eps_rel) {
    const std::string id = "lemma15.resolvent";
    if (!(m > 0.0)) throw PreconditionViolation("lemma15: m must be > 0");
    require_strict_positive(a, eps_rel, "lemma15");
    require_strict_positive(b, eps_rel, "lemma15");
    const std::string fp = fp_of(id, nullptr, a, b, {{"m", m}});

    const SpectrumStats diff = spectrum_stats(a - b);
    if (!(diff.min_eig >= m - gap_tol(diff.op_norm, eps_rel)))
        throw PreconditionViolation("lemma15: m exceeds min_eig(A-B)");
    const double na = op_norm(a);
    const double nb = op_norm(b);
    if (!(na > m)) throw PreconditionViolation("lemma15: need ||A|| > m");

    const HermitianMatrix d = inverse_pd(b) - inverse_pd(a);
    const double b_val = m / (nb * (nb + m));
    const double a_val = m / ((na - m) * na);

    MarginSet ms(eps_rel);
    const double b_bound = ms.add_gap("b_bound", d.shift(-b_val));
    const double a_bound = ms.add_gap("a_bound", d.shift(-a_val));
    const double chain = ms.add_scalar("chain", b_val - a_val,
                                       std::max(std::abs(a_val), std::abs(b_val)));
    const double tol = ms.tol();
    const bool ok = b_bound >= -tol && a_bound >= -tol && chain >= -tol;
    return ms.finish(id, ok ? Verdict::Pass : Verdict::Fail, fp);
}

CheckOutcome check_cor7_powers(const ScalarFunction& g, double p, double q,
                               const HermitianMatrix& a, const HermitianMatrix& b,
                               double eps_rel) {
    const std::string id = "cor7.kwongpower";
    if (!(p >= -1.0 && p <= 1.0 && q >= -1.0 && q <= 1.0))
        throw PreconditionViolation("cor7: p, q must lie in [-1, 1]");
    require_strict_positive(a, eps_rel, "cor7");
    require_strict_positive(b, eps_rel, "cor7");
    const std::string fp = fp_of(id, &g, a, b, {{"p", p}, {"q", q}});

    const SpectrumStats sym = spectrum_stats(symmetrized_product(a, b));
    if (sym.min_eig < -gap_tol(sym.op_norm, eps_rel))
        return skip_outcome(id, eps_rel, fp, "hypothesis AB + BA >= 0 fails on this instance");

    try {
        const HermitianMatrix gap_cor7 =
            symmetrized_product(apply_function(g, matrix_power(a, p)), b);
        const HermitianMatrix gap_powers =
            symmetrized_product(matrix_power(a, -p), matrix_power(b, -q));
        MarginSet ms(eps_rel);
        const double cor7 = ms.add_gap("cor7", gap_cor7);
        const double powers = ms.add_gap("powers", gap_powers);
        const double tol = ms.tol();
        const bool ok = cor7 >= -tol && powers >= -tol;
        return ms.finish(id, ok ? Verdict::Pass : Verdict::Fail, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

CheckOutcome check_superadditivity(const ScalarFunction& g, const HermitianMatrix& a,
                                   const HermitianMatrix& b, double eps_rel) {
    const std::string id = "uchi.superadd";
    if (!g.flags.operator_convex)
        throw PreconditionViolation("uchi: g must be operator convex");
    {
        // g(0+) <= 0 up to rounding
        const double t0 = g.domain.lo + 1e-8 * std::max(1.0, std::abs(g.domain.lo));
        if (g.domain.contains(t0) && !(g.eval(t0) <= 1e-6))
            throw PreconditionViolation("uchi: g(0+) must be <= 0, got " +
                                        std::to_string(g.eval(t0)));
    }
    const std::string fp = fp_of(id, &g, a, b);
    try {
        MarginSet ms(eps_rel);
        const double symprod = ms.add_gap("symprod", symmetrized_product(a, b));
        const double super = ms.add_gap(
            "super_gap",
            apply_function(g, a + b) - apply_function(g, a) - apply_function(g, b));
        const double tol = ms.tol();
        Verdict v = Verdict::Pass;
        if (symprod >= -tol && super < -tol) v = Verdict::Fail;
        return ms.finish(id, v, fp);
    } catch (const DomainViolation& e) {
        return skip_outcome(id, eps_rel, fp, e.what());
    }
}

// ---------------------------------------------------------------------------

const std::vector<CheckerSpec>& checker_registry() {
    static const std::vector<CheckerSpec> reg{
        {"prop25.subadd", "subadditivity f(A+B) <= f(A) + f(B)", "inv", true, false, false,
         false},
        {"thm5new", "negative-axis subadditivity under the resolvent grid condition",
         "resolvent", true, false, false, true},
        {"thm16.quarter", "quarter-constant subadditivity of f = 1/g under AB+BA >= 0", "sq",
         true, false, false, false},
        {"bu.gap", "arithmetic-mean gap dominates the congruence remainder", "inv", true, true,
         false, false},
        {"thm9.harmonic", "g(A nabla_a B) <= g(A) !_a g(B)", "inv", true, true, false, false},
        {"lemma12.block", "C <= A !_a B equivalent to 2x2 block positivity", "", false, true,
         false, false},
        {"cor13.block", "block form of the harmonic-mean bound at C = g(A nabla_a B)", "inv",
         true, true, false, false},
        {"thm20.right", "decreasing lower-bound chain on a right half-line", "inv", true,
         false, true, false},
        {"thm21.left", "increasing lower-bound chain on a left half-line", "resolvent", true,
         false, true, false},
        {"lemma15.resolvent", "inverse-gap lower bounds for dominated pairs", "", false, false,
         true, false},
        {"cor7.kwongpower", "symmetrized-product positivity through Kwong composites", "inv",
         true, false, false, false},
        {"uchi.superadd", "superadditivity of operator convex g under AB+BA >= 0", "sq", true,
         false, false, false},
    };
    return reg;
}

const CheckerSpec& find_checker(const std::string& id) {
    for (const CheckerSpec& c : checker_registry())
        if (c.id == id) return c;
    throw Error("unknown checker id: " + id);
}

} // namespace socv
