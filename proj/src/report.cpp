#include "semifree/report.hpp"

namespace semifree {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIP";
    }
    return "?";
}

bool ConstraintReport::passed() const { return first_failure() == nullptr; }

const Check* ConstraintReport::first_failure() const {
    for (const auto& c : checks_)
        if (c.verdict == Verdict::Fail) return &c;
    return nullptr;
}

const Check* ConstraintReport::find(const std::string& id) const {
    for (const auto& c : checks_)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace semifree
