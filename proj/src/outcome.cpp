#include "socv/outcome.hpp"

namespace socv {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skip: return "SKIP";
    }
    return "?";
}

nlohmann::json CheckOutcome::to_json() const {
    nlohmann::json j{{"checker_id", checker_id},
                     {"margins", margins},
                     {"verdict", verdict_name(verdict)},
                     {"tolerance_used", tolerance_used},
                     {"instance_fingerprint", instance_fingerprint}};
    if (verdict == Verdict::Skip) j["skip_reason"] = skip_reason;
    return j;
}

} // namespace socv
