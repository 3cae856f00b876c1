#include "socv/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socv/generators.hpp"
#include "socv/linalg.hpp"
#include "socv/means.hpp"

namespace socv {

// ---------------------------------------------------------------------------
// Interval

std::string Interval::describe() const {
    std::ostringstream os;
    os << '(';
    if (lo_finite()) os << lo; else os << "-inf";
    os << ", ";
    if (hi_finite()) os << hi; else os << "inf";
    os << ')';
    return os.str();
}

nlohmann::json Interval::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    if (lo_finite()) j.push_back(lo); else j.push_back("-inf");
    if (hi_finite()) j.push_back(hi); else j.push_back("inf");
    return j;
}

static double endpoint_from_json(const nlohmann::json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
        throw Error("interval endpoint: expected number, \"inf\" or \"-inf\", got \"" + s + "\"");
    }
    return v.get<double>();
}

Interval Interval::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("interval json: expected [lo, hi]");
    return Interval(endpoint_from_json(j.at(0)), endpoint_from_json(j.at(1)));
}

double interval_delta(const Interval& j) {
    const double width = (j.lo_finite() && j.hi_finite()) ? (j.hi - j.lo) : 1.0;
    return 1e-3 * std::min(1.0, width);
}

std::vector<double> interior_grid(const Interval& j, int n, double cap) {
    const double lo = std::max(j.lo, -cap);
    const double hi = std::min(j.hi, cap);
    const double d = interval_delta(j);
    const double a = lo + d, b = hi - d;
    if (!(a < b)) throw PreconditionViolation("interior_grid: interval too narrow");
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = 0.5 * (a + b);
        return g;
    }
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (n - 1);
    return g;
}

// ---------------------------------------------------------------------------
// DiscreteMeasure / SocRep

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> a) : atoms(std::move(a)) {
    for (const Atom& at : atoms)
        if (!(at.weight > 0.0))
            throw RepresentationViolation("measure: weights must be positive");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t k = i + 1; k < atoms.size(); ++k) {
            const double gap = std::abs(atoms[i].location - atoms[k].location);
            const double scale = std::max({1.0, std::abs(atoms[i].location),
                                           std::abs(atoms[k].location)});
            if (!(gap > 1e-10 * scale))
                throw RepresentationViolation("measure: atom locations must be distinct");
        }
    }
}

nlohmann::json DiscreteMeasure::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const Atom& a : atoms) j.push_back(nlohmann::json::array({a.location, a.weight}));
    return j;
}

DiscreteMeasure DiscreteMeasure::from_json(const nlohmann::json& j) {
    std::vector<Atom> atoms;
    for (const auto& e : j) atoms.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    return DiscreteMeasure(std::move(atoms));
}

double SocRep::evaluate(double t) const {
    double s = constant;
    if (side == Side::Right)
        for (const Atom& a : measure.atoms) s += a.weight / (t - a.location);
    else
        for (const Atom& a : measure.atoms) s += a.weight / (a.location - t);
    return s;
}

nlohmann::json SocRep::to_json() const {
    nlohmann::json j{{"side", side == Side::Right ? "right" : "left"},
                     {"constant", constant},
                     {"atoms", measure.to_json()}};
    j[side == Side::Right ? "a" : "b"] = endpoint;
    return j;
}

SocRep SocRep::from_json(const nlohmann::json& j) {
    const std::string side_s = j.at("side").get<std::string>();
    Side side;
    if (side_s == "right") side = Side::Right;
    else if (side_s == "left") side = Side::Left;
    else throw Error("soc_rep: side must be \"right\" or \"left\"");
    double endpoint;
    if (j.contains("a")) endpoint = j.at("a").get<double>();
    else if (j.contains("b")) endpoint = j.at("b").get<double>();
    else throw Error("soc_rep: missing endpoint key \"a\"/\"b\"");
    const double constant = j.value("constant", 0.0);
    DiscreteMeasure mu = j.contains("atoms") ? DiscreteMeasure::from_json(j.at("atoms"))
                                             : DiscreteMeasure{};
    return SocRep{side, endpoint, constant, std::move(mu)};
}

// ---------------------------------------------------------------------------
// ScalarFunction

nlohmann::json ScalarFunction::descriptor() const {
    nlohmann::json j{{"name", name},
                     {"domain", domain.to_json()},
                     {"flags", {{"operator_monotone", flags.operator_monotone},
                                {"operator_convex", flags.operator_convex},
                                {"soc", flags.soc},
                                {"kwong", flags.kwong}}}};
    if (soc_rep) j["soc_rep"] = soc_rep->to_json();
    return j;
}

ScalarFunction make_scalar_function(std::string name, Interval domain,
                                    std::function<double(double)> eval,
                                    FunctionFlags flags, std::optional<SocRep> rep) {
    const std::vector<double> grid = interior_grid(domain, 1000);
    for (double t : grid) {
        const double v = eval(t);
        if (!std::isfinite(v))
            throw Error("function " + name + ": evaluator not finite at t=" + std::to_string(t));
        if (flags.soc && rep) {
            const double r = rep->evaluate(t);
            if (!(std::abs(v - r) <= 1e-12 * std::max(1.0, std::abs(r))))
                throw RepresentationViolation("function " + name +
                                              ": evaluator disagrees with representation at t=" +
                                              std::to_string(t));
        }
    }
    return ScalarFunction{std::move(name), domain, std::move(eval), flags, std::move(rep)};
}

ScalarFunction make_soc_right(double a, double g_inf, const DiscreteMeasure& mu) {
    if (!(g_inf >= 0.0))
        throw RepresentationViolation("make_soc_right: constant must be >= 0");
    for (const Atom& at : mu.atoms)
        if (!(at.location <= a))
            throw RepresentationViolation("make_soc_right: atom at " +
                                          std::to_string(at.location) + " exceeds endpoint " +
                                          std::to_string(a));
    if (mu.empty() && !(g_inf > 0.0))
        throw RepresentationViolation("make_soc_right: empty measure needs a positive constant");
    SocRep rep{SocRep::Side::Right, a, g_inf, mu};
    const std::string name = "soc-right-" + fingerprint(rep.to_json()).substr(0, 8);
    FunctionFlags flags;
    flags.soc = true;
    flags.operator_convex = true;
    flags.kwong = (a <= 0.0);  // positive operator decreasing on (0, inf)
    auto eval = [rep](double t) { return rep.evaluate(t); };
    return make_scalar_function(name, Interval(a, kInf), std::move(eval), flags, rep);
}

ScalarFunction make_soc_left(double b, double g_neg_inf, const DiscreteMeasure& mu) {
    if (!(g_neg_inf >= 0.0))
        throw RepresentationViolation("make_soc_left: constant must be >= 0");
    for (const Atom& at : mu.atoms)
        if (!(at.location >= b))
            throw RepresentationViolation("make_soc_left: atom at " +
                                          std::to_string(at.location) + " is below endpoint " +
                                          std::to_string(b));
    if (mu.empty() && !(g_neg_inf > 0.0))
        throw RepresentationViolation("make_soc_left: empty measure needs a positive constant");
    SocRep rep{SocRep::Side::Left, b, g_neg_inf, mu};
    const std::string name = "soc-left-" + fingerprint(rep.to_json()).substr(0, 8);
    FunctionFlags flags;
    flags.soc = true;
    flags.operator_monotone = true;
    flags.operator_convex = true;
    auto eval = [rep](double t) { return rep.evaluate(t); };
    return make_scalar_function(name, Interval(-kInf, b), std::move(eval), flags, rep);
}

static DiscreteMeasure sample_measure(double endpoint, int sign, RngStream& rng) {
    const int n = rng.uniform_int(1, 5);
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            const double loc = endpoint + sign * rng.log_uniform(1e-2, 1e2);
            const double w = rng.log_uniform(1e-2, 1e1);
            bool distinct = true;
            for (const Atom& a : atoms)
                if (std::abs(a.location - loc) <=
                    1e-10 * std::max({1.0, std::abs(a.location), std::abs(loc)}))
                    distinct = false;
            if (distinct) {
                atoms.push_back({loc, w});
                break;
            }
        }
    }
    return DiscreteMeasure(std::move(atoms));
}

ScalarFunction sample_soc_right(double a, RngStream& rng) {
    DiscreteMeasure mu = sample_measure(a, -1, rng);
    const double c = rng.uniform(0.0, 1.0);
    return make_soc_right(a, c, mu);
}

ScalarFunction sample_soc_left(double b, RngStream& rng) {
    DiscreteMeasure mu = sample_measure(b, +1, rng);
    const double c = rng.uniform(0.0, 1.0);
    return make_soc_left(b, c, mu);
}

// ---------------------------------------------------------------------------
// catalog

static std::vector<ScalarFunction> build_catalog() {
    std::vector<ScalarFunction> cat;
    const Interval pos(0.0, kInf);

    {
        // 1/t carries its exact atomic representation
        SocRep rep{SocRep::Side::Right, 0.0, 0.0, DiscreteMeasure({{0.0, 1.0}})};
        FunctionFlags f;
        f.soc = f.operator_convex = f.kwong = true;
        cat.push_back(make_scalar_function("inv", pos, [](double t) { return 1.0 / t; }, f, rep));
    }
    {
        FunctionFlags f;
        f.soc = f.operator_convex = f.kwong = true;
        cat.push_back(make_scalar_function("invsqrt", pos,
                                           [](double t) { return std::pow(t, -0.5); }, f));
        cat.push_back(make_scalar_function("invquart", pos,
                                           [](double t) { return std::pow(t, -0.25); }, f));
    }
    {
        FunctionFlags f;
        f.operator_monotone = f.kwong = true;
        cat.push_back(make_scalar_function("sqrt", pos, [](double t) { return std::sqrt(t); }, f));
        cat.push_back(make_scalar_function("quart", pos,
                                           [](double t) { return std::pow(t, 0.25); }, f));
        cat.push_back(make_scalar_function("log1p", pos,
                                           [](double t) { return std::log1p(t); }, f));
    }
    {
        FunctionFlags f;
        f.operator_monotone = f.operator_convex = f.kwong = true;
        cat.push_back(make_scalar_function("id", pos, [](double t) { return t; }, f));
    }
    {
        FunctionFlags f;
        f.operator_convex = true;  // vanishes at 0+, not monotone, not Kwong
        cat.push_back(make_scalar_function("sq", pos, [](double t) { return t * t; }, f));
    }
    {
        // 1/(0 - t) on the negative axis
        SocRep rep{SocRep::Side::Left, 0.0, 0.0, DiscreteMeasure({{0.0, 1.0}})};
        FunctionFlags f;
        f.soc = f.operator_monotone = f.operator_convex = true;
        cat.push_back(make_scalar_function("resolvent", Interval(-kInf, 0.0),
                                           [](double t) { return 1.0 / (0.0 - t); }, f, rep));
    }
    {
        FunctionFlags f;
        f.kwong = true;
        cat.push_back(make_scalar_function("asinh", pos, [](double t) { return std::asinh(t); }, f));
    }
    return cat;
}

const std::vector<ScalarFunction>& catalog() {
    static const std::vector<ScalarFunction> cat = build_catalog();
    return cat;
}

const ScalarFunction& find_function(const std::string& name) {
    for (const ScalarFunction& f : catalog())
        if (f.name == name) return f;
    throw Error("unknown catalog function: " + name);
}

ScalarFunction reciprocal(const ScalarFunction& f) {
    FunctionFlags flags;
    flags.kwong = f.flags.kwong;  // f Kwong iff 1/f Kwong
    auto base = f.eval;
    return make_scalar_function("recip(" + f.name + ")", f.domain,
                                [base](double t) { return 1.0 / base(t); }, flags);
}

bool is_constant_on_grid(const ScalarFunction& f) {
    const std::vector<double> grid = interior_grid(f.domain, 1000);
    double lo = kInf, hi = -kInf;
    for (double t : grid) {
        const double v = f.eval(t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo <= 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
}

// ---------------------------------------------------------------------------
// empirical witness

CheckOutcome soc_witness_test(const ScalarFunction& f, const std::vector<int>& dims,
                              int trials, std::uint64_t seed, double eps_rel) {
    if (trials < 1) throw PreconditionViolation("soc_witness_test: trials must be >= 1");
    if (dims.empty()) throw PreconditionViolation("soc_witness_test: dims empty");
    for (double t : interior_grid(f.domain, 1000))
        if (!(f.eval(t) > 0.0))
            throw PreconditionViolation("soc_witness_test: function must be positive, " +
                                        f.name + "(" + std::to_string(t) + ") <= 0");

    std::vector<double> margin(static_cast<std::size_t>(trials));
    std::vector<double> tol(static_cast<std::size_t>(trials));
    std::vector<bool> drawn(static_cast<std::size_t>(trials), false);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < trials; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const int dim = dims[static_cast<std::size_t>(i) % dims.size()];
        for (int attempt = 0; attempt < 32; ++attempt) {
            try {
                const HermitianMatrix a = gen_hermitian_in_interval(f.domain, dim, rng);
                const HermitianMatrix b = gen_hermitian_in_interval(f.domain, dim, rng);
                const HermitianMatrix gap =
                    harmonic(apply_function(f, a), apply_function(f, b), 0.5) -
                    apply_function(f, nabla(a, b, 0.5));
                const SpectrumStats st = spectrum_stats(gap);
                margin[static_cast<std::size_t>(i)] = st.min_eig;
                tol[static_cast<std::size_t>(i)] = gap_tol(st.op_norm, eps_rel);
                drawn[static_cast<std::size_t>(i)] = true;
                break;
            } catch (const DomainViolation&) {
            } catch (const NonInvertible&) {
            }
        }
    }

    CheckOutcome out;
    out.checker_id = "soc.witness";
    out.verdict = Verdict::Pass;
    double worst = kInf, worst_tol = eps_rel;
    for (int i = 0; i < trials; ++i) {
        if (!drawn[static_cast<std::size_t>(i)])
            throw GenerationFailure("soc_witness_test: redraw budget exhausted at trial " +
                                    std::to_string(i));
        if (margin[static_cast<std::size_t>(i)] < worst) {
            worst = margin[static_cast<std::size_t>(i)];
            worst_tol = tol[static_cast<std::size_t>(i)];
        }
        if (margin[static_cast<std::size_t>(i)] < -tol[static_cast<std::size_t>(i)])
            out.verdict = Verdict::Fail;
    }
    out.margins["worst_gap"] = worst;
    out.tolerance_used = worst_tol;
    out.instance_fingerprint = fingerprint(nlohmann::json{{"function", f.descriptor()},
                                                          {"dims", dims},
                                                          {"trials", trials},
                                                          {"seed", seed}});
    return out;
}

// ---------------------------------------------------------------------------
// CLI function specs

ScalarFunction function_from_spec(const nlohmann::json& spec) {
    if (spec.is_string()) return find_function(spec.get<std::string>());
    if (!spec.is_object()) throw Error("function spec: expected name or object");

    if (spec.contains("soc_rep")) {
        const SocRep rep = SocRep::from_json(spec.at("soc_rep"));
        ScalarFunction f = (rep.side == SocRep::Side::Right)
                               ? make_soc_right(rep.endpoint, rep.constant, rep.measure)
                               : make_soc_left(rep.endpoint, rep.constant, rep.measure);
        if (spec.contains("domain")) {
            const Interval want = Interval::from_json(spec.at("domain"));
            if (!(want == f.domain))
                throw Error("function spec: domain " + want.describe() +
                            " does not match representation domain " + f.domain.describe());
        }
        if (spec.contains("name")) f.name = spec.at("name").get<std::string>();
        return f;
    }
    if (!spec.contains("name")) throw Error("function spec: need \"name\" or \"soc_rep\"");
    ScalarFunction f = find_function(spec.at("name").get<std::string>());
    if (spec.contains("domain")) {
        const Interval want = Interval::from_json(spec.at("domain"));
        if (!(want == f.domain))
            throw Error("function spec: domain mismatch for catalog function " + f.name);
    }
    return f;
}

} // namespace socv
