#ifndef SOCV_OUTCOME_HPP
#define SOCV_OUTCOME_HPP

#include <map>
#include <string>

#include <json.hpp>

namespace socv {

enum class Verdict { Pass, Fail, Skip };

const char* verdict_name(Verdict v);

/// Result of one theorem check on one instance. Margins are minimum
/// eigenvalues of gap matrices (or scalar gaps); the verdict compares them
/// against the scale-aware tolerance actually used.
struct CheckOutcome {
    std::string checker_id;
    std::map<std::string, double> margins;
    Verdict verdict = Verdict::Pass;
    std::string skip_reason;  // nonempty only for Skip
    double tolerance_used = 0.0;
    std::string instance_fingerprint;

    nlohmann::json to_json() const;
};

} // namespace socv

#endif
