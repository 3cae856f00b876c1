#ifndef SOCV_INTERVAL_HPP
#define SOCV_INTERVAL_HPP

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "socv/errors.hpp"

namespace socv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open interval (lo, hi); either endpoint may be infinite.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw PreconditionViolation("Interval: need lo < hi");
    }

    bool contains(double t) const { return lo < t && t < hi; }
    bool lo_finite() const { return lo > -kInf; }
    bool hi_finite() const { return hi < kInf; }

    std::string describe() const;

    nlohmann::json to_json() const;
    static Interval from_json(const nlohmann::json& j);
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Sampling margin keeping generated spectra and grids away from the open
// endpoints: 1e-3 * min(1, width) with width capped for infinite intervals.
double interval_delta(const Interval& j);

// n interior points of j, clipped to [-cap, cap] before the delta margin is
// applied. Used for the evaluator sanity grid and for spectra sampling bounds.
std::vector<double> interior_grid(const Interval& j, int n, double cap = 100.0);

} // namespace socv

#endif
