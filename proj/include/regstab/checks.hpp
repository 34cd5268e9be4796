#pragma once

#include <string>
#include <vector>

namespace regstab {

/// One verified inequality or identity, rendered into every report.
/// `anchor` is a stable identifier of the underlying fact, so reports are
/// diffable across runs and versions.
struct CheckRecord {
    enum class Outcome { Pass, Fail, Inconclusive };

    std::string name;
    std::string anchor;
    std::string relation; // "<=", "=", "grid", "implies"
    std::string lhs;
    std::string rhs;
    Outcome outcome = Outcome::Pass;
    bool certified = true;
    std::string note;

    bool pass() const { return outcome == Outcome::Pass; }
    bool fail() const { return outcome == Outcome::Fail; }

    static const char* outcome_str(Outcome o) {
        switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        default: return "inconclusive";
        }
    }
};

inline bool any_hard_failure(const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks)
        if (c.fail()) return true;
    return false;
}
inline bool any_inconclusive(const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks)
        if (c.outcome == CheckRecord::Outcome::Inconclusive) return true;
    return false;
}

} // namespace regstab
