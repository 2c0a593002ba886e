// Named PASS/FAIL checks, each tied to the rule it enforces.
#pragma once

#include <string>
#include <vector>

namespace semifree {

enum class Verdict { Pass, Fail, Skipped };

std::string verdict_name(Verdict v);

struct Check {
    std::string id;
    std::string anchor;  // rule name, cited on every failure
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

class ConstraintReport {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void add(const std::string& id, const std::string& anchor, bool ok, const std::string& detail) {
        checks_.push_back({id, anchor, ok ? Verdict::Pass : Verdict::Fail, detail});
    }
    void skip(const std::string& id, const std::string& anchor, const std::string& detail) {
        checks_.push_back({id, anchor, Verdict::Skipped, detail});
    }
    void append(const ConstraintReport& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    const Check* find(const std::string& id) const;
    bool empty() const { return checks_.empty(); }

private:
    std::vector<Check> checks_;
};

}  // namespace semifree
