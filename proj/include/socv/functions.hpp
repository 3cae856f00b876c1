#ifndef SOCV_FUNCTIONS_HPP
#define SOCV_FUNCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "socv/interval.hpp"
#include "socv/outcome.hpp"
#include "socv/rng.hpp"

namespace socv {

/// Finite atomic measure: atoms (location, weight) with positive weights and
/// pairwise distinct locations.
struct Atom {
    double location;
    double weight;
};

struct DiscreteMeasure {
    std::vector<Atom> atoms;

    DiscreteMeasure() = default;
    explicit DiscreteMeasure(std::vector<Atom> a);

    bool empty() const { return atoms.empty(); }
    nlohmann::json to_json() const;
    static DiscreteMeasure from_json(const nlohmann::json& j);
};

/// Atomic realization of the half-line integral representations:
///   Right: g(t) = constant + sum_i w_i / (t - lambda_i), domain (endpoint, inf)
///   Left:  g(t) = constant + sum_i w_i / (lambda_i - t), domain (-inf, endpoint)
struct SocRep {
    enum class Side { Right, Left };
    Side side;
    double endpoint;
    double constant;
    DiscreteMeasure measure;

    double evaluate(double t) const;
    nlohmann::json to_json() const;
    static SocRep from_json(const nlohmann::json& j);
};

struct FunctionFlags {
    bool operator_monotone = false;
    bool operator_convex = false;
    bool soc = false;
    bool kwong = false;
};

/// Named real function on an open interval with operator-theoretic
/// classification flags. `soc` implies positive and operator convex.
struct ScalarFunction {
    std::string name;
    Interval domain;
    std::function<double(double)> eval;
    FunctionFlags flags;
    std::optional<SocRep> soc_rep;

    // Serializable identity (name, domain, flags, rep); used for fingerprints
    // and for the CLI function-spec format.
    nlohmann::json descriptor() const;
};

// Validating constructor: evaluator finite on a 1000-point interior grid, and
// if soc-flagged with a representation, evaluator and representation agree on
// that grid to 1e-12 relative.
ScalarFunction make_scalar_function(std::string name, Interval domain,
                                    std::function<double(double)> eval,
                                    FunctionFlags flags,
                                    std::optional<SocRep> rep = std::nullopt);

// g(t) = g_inf + sum w_i/(t - lambda_i) on (a, inf); every atom must satisfy
// lambda_i <= a and the result is positive and operator decreasing there.
ScalarFunction make_soc_right(double a, double g_inf, const DiscreteMeasure& mu);

// g(t) = g_neg_inf + sum w_i/(lambda_i - t) on (-inf, b); atoms need
// lambda_i >= b; positive and operator monotone.
ScalarFunction make_soc_left(double b, double g_neg_inf, const DiscreteMeasure& mu);

// Harness sampler: 1..5 atoms at a - u, u log-uniform in [1e-2, 1e2], weights
// log-uniform in [1e-2, 1e1], constant uniform in [0, 1].
ScalarFunction sample_soc_right(double a, RngStream& rng);
ScalarFunction sample_soc_left(double b, RngStream& rng);

// Fixed classified catalog (powers, inverse powers, resolvent, asinh, log1p).
const std::vector<ScalarFunction>& catalog();
const ScalarFunction& find_function(const std::string& name);

// 1/f on the same domain (Kwong flag carries over).
ScalarFunction reciprocal(const ScalarFunction& f);

bool is_constant_on_grid(const ScalarFunction& f);

// Necessary-condition battery for membership in the strongly-operator-convex
// class: worst margin of min_eig(f(A) ! f(B) - f(A nabla B)) over random
// pairs with spectra in f's domain.
CheckOutcome soc_witness_test(const ScalarFunction& f, const std::vector<int>& dims,
                              int trials, std::uint64_t seed,
                              double eps_rel = 1e-8);

// CLI function spec: {"name":..., "domain":[lo,hi], "soc_rep":{...}} with
// "-inf"/"inf" endpoint strings; bare {"name": ...} resolves via the catalog.
ScalarFunction function_from_spec(const nlohmann::json& spec);

} // namespace socv

#endif
