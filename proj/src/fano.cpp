#include "semifree/fano.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace semifree {

std::vector<FanoFamilyRecord> default_fano_table() {
    return {
        {"P4", 5, 1, 625, std::nullopt, false},
        {"Q4", 4, 2, 512, std::nullopt, false},
        {"Q1capQ2", 3, 8, 324, std::nullopt, true},
        {"W5", 3, 2, 405, std::nullopt, false},
        {"X7m", 2, 12, 192, 7, false},
        {"X8m", 2, 8, 224, 8, false},
        {"X9m", 2, 4, 256, 9, false},
        {"V18", 2, 2, 288, 10, false},
    };
}

std::vector<std::string> required_fano_names() {
    std::vector<std::string> names;
    for (const auto& r : default_fano_table()) names.push_back(r.name);
    return names;
}

const std::vector<RealizedInvariant>& realized_invariants() {
    static const std::vector<RealizedInvariant> all = [] {
        std::vector<RealizedInvariant> out;
        for (const auto& v : admissible_dim_pairs()) {
            if (!v.admissible) continue;
            const EnumerationResult res = enumerate_case(v.shape);
            for (const auto& f : res.families) {
                if (!f.iota) continue;
                for (const auto& m : f.members)
                    out.push_back({*f.iota, m.b4, profile_volume(dh_profile(m.data)), v.shape, f.key});
            }
        }
        return out;
    }();
    return all;
}

namespace {

std::string shape_str(const DimPair& s) {
    return "(" + std::to_string(s.d1) + "," + std::to_string(s.d2) + ")";
}

FanoVerdict judge(const FanoFamilyRecord& r) {
    FanoVerdict v;
    v.record = r;
    auto reject = [&v](const char* a, std::string why) {
        v.anchor = a;
        v.trace.push_back(std::move(why));
    };
    if (r.iota <= 1) {
        reject(anchor::kIndexAboveOne, "iota = " + std::to_string(r.iota) + " <= 1");
        return v;
    }
    if (r.finite_automorphisms) {
        reject(anchor::kFiniteAutomorphisms, "finite automorphism group");
        return v;
    }
    if (r.genus && r.c1_fourth != 32 * (static_cast<std::int64_t>(*r.genus) - 1)) {
        reject(anchor::kDegreeGenus, "record inconsistent: c1^4 = " + std::to_string(r.c1_fourth) +
                                         " but 32(g - 1) = " + std::to_string(32 * (*r.genus - 1)));
        return v;
    }

    std::ostringstream arith;
    if (r.iota == 2) {
        const std::int64_t zero_four = 416 - 16 * static_cast<std::int64_t>(r.b4);
        const std::int64_t four_four = 352 - 16 * static_cast<std::int64_t>(r.b4);
        auto rel = [&r](std::int64_t t) { return t == r.c1_fourth ? " = " : " != "; };
        arith << "(0,4) without surface: 416 - 16*" << r.b4 << " = " << zero_four << rel(zero_four) << r.c1_fourth
              << "; (4,4): 352 - 16*" << r.b4 << " = " << four_four << rel(four_four) << r.c1_fourth;
        v.trace.push_back(arith.str());
        v.trace.push_back("(0,4) with surface forces odd iota, excluded for iota = 2");
        if (r.genus) {
            std::ostringstream g;
            g << "implied genus: ";
            bool first = true;
            for (std::int64_t t : {zero_four, four_four}) {
                g << (first ? "" : ", ");
                first = false;
                if (t % 32 == 0)
                    g << t / 32 + 1;
                else
                    g << "none (" << t << " not divisible by 32)";
            }
            g << " vs recorded " << *r.genus;
            v.trace.push_back(g.str());
        }
    }

    for (const auto& inv : realized_invariants()) {
        if (inv.iota == r.iota && inv.b4 == r.b4 && inv.volume == Rational(r.c1_fourth)) {
            v.survives = true;
            v.trace.push_back("matched shape " + shape_str(inv.shape) + ": " + inv.family);
            return v;
        }
    }
    std::ostringstream why;
    why << "no admissible data with iota = " << r.iota << ", b4 = " << r.b4 << " and volume " << r.c1_fourth;
    if (r.iota == 2 && r.genus) why << "; inconsistent with " << anchor::kDegreeGenus;
    reject(anchor::kFanoVolume, why.str());
    return v;
}

}  // namespace

FanoClassification classify_fano(const std::vector<FanoFamilyRecord>& records) {
    std::map<std::string, int> seen;
    for (const auto& r : records) ++seen[r.name];
    std::vector<std::string> missing;
    std::vector<std::string> repeated;
    for (const auto& n : required_fano_names())
        if (seen[n] == 0) missing.push_back(n);
    for (const auto& [n, c] : seen)
        if (c > 1) repeated.push_back(n);
    if (!missing.empty() || !repeated.empty()) {
        std::string msg = "Fano table must list each of";
        for (const auto& n : required_fano_names()) msg += " " + n;
        msg += " exactly once;";
        if (!missing.empty()) {
            msg += " missing:";
            for (const auto& n : missing) msg += " " + n;
        }
        if (!repeated.empty()) {
            msg += " repeated:";
            for (const auto& n : repeated) msg += " " + n;
        }
        throw FanoTableError(msg);
    }

    FanoClassification out;
    for (const auto& r : records) out.verdicts.push_back(judge(r));
    std::sort(out.verdicts.begin(), out.verdicts.end(), [](const FanoVerdict& a, const FanoVerdict& b) {
        return std::make_tuple(-a.record.iota, a.record.b4, a.record.name) <
               std::make_tuple(-b.record.iota, b.record.b4, b.record.name);
    });
    for (const auto& v : out.verdicts)
        if (v.survives) out.survivors.push_back(v.record.name);
    return out;
}

}  // namespace semifree
