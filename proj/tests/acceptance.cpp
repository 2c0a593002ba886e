// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "semifree/catalog.hpp"
#include "semifree/classifier.hpp"
#include "semifree/cli.hpp"
#include "semifree/fano.hpp"
#include "semifree/localization.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace semifree;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const FixedPointData& entry(const char* n) { return find_catalog(n)->data; }

std::map<std::pair<int, int>, EnumerationResult>& enumerations() {
    static std::map<std::pair<int, int>, EnumerationResult> all = [] {
        std::map<std::pair<int, int>, EnumerationResult> m;
        for (const auto& v : admissible_dim_pairs())
            if (v.admissible) m.emplace(std::make_pair(v.shape.d1, v.shape.d2), enumerate_case(v.shape));
        return m;
    }();
    return all;
}

Outcome abbv_vanishing() {
    Outcome o;
    for (const auto& e : catalog()) o.require(abbv_sum(e.data) == 0, e.name + ": abbv = " + to_string(abbv_sum(e.data)));
    if (o.ok) o.detail = "abbv_sum = 0 on all six entries";
    return o;
}

Outcome betti_reproduction() {
    Outcome o;
    const std::vector<std::pair<const char*, int>> want = {{"projectiveone", 1}, {"exampletwofour", 1}, {"quadricone", 2},
                                                           {"quadricexample", 2}, {"wexample", 2},     {"kuznetsov", 8}};
    std::ostringstream os;
    for (const auto& [n, b] : want) {
        const int got = kirwan_betti(entry(n), 4);
        os << n << "=" << got << " ";
        o.require(got == b, std::string(n) + ": b4 = " + std::to_string(got) + ", expected " + std::to_string(b));
    }
    if (o.ok) o.detail = os.str();
    return o;
}

Outcome dh_oracle() {
    Outcome o;
    for (std::int64_t k2 = -20; k2 <= 20; ++k2) {
        o.require(dh_from_ring(k2) == dh_near_cp2(k2), "ring and closed form differ at k2 = " + std::to_string(k2));
        o.require(Rational(4) * dh_near_cp2(k2).integrate(0, 2) == 176 - 16 * k2,
                  "half volume wrong at k2 = " + std::to_string(k2));
    }
    o.require(half_volume_isolated_pair() == 240, "isolated pair half volume " + to_string(half_volume_isolated_pair()));
    if (o.ok) o.detail = "k2 in [-20,20] agree, 4*int = 176 - 16 k2, isolated pair 240";
    return o;
}

Outcome series_oracle() {
    Outcome o;
    int n = 0;
    auto same = [&](const FixedComponent& c) {
        ++n;
        o.require(contribution_series_oracle(c) == contribution(c), "mismatch at " + describe(c));
    };
    for (int l = 0; l <= 4; ++l) same(make_point(l));
    for (int l = 0; l <= 3; ++l)
        for (std::int64_t a = -5; a <= 5; ++a)
            for (std::int64_t b = -5; b <= 5; ++b)
                for (std::int64_t c = -5; c <= 5; ++c) {
                    std::array<Summand, 3> s{Summand{a, l > 0 ? -1 : 1}, Summand{b, l > 1 ? -1 : 1}, Summand{c, l > 2 ? -1 : 1}};
                    same(make_surface(s));
                }
    for (int s : {1, -1})
        for (std::int64_t k = -5; k <= 5; ++k)
            for (std::int64_t c2 = -5; c2 <= 5; ++c2) same(make_plane_extremal(s, k, c2));
    for (int s : {1, -1})
        for (std::int64_t m = -3; m <= 3; ++m) same(make_sixdim(s, m));
    if (o.ok) o.detail = std::to_string(n) + " components agree";
    return o;
}

Outcome case_classification() {
    Outcome o;
    auto& en = enumerations();
    auto single = [&](int d1, int d2, const char* cat) {
        const auto& r = en.at({d1, d2});
        const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
        o.require(r.families.size() == 1 && r.families[0].members.size() == 1, tag + ": expected exactly one family");
        if (r.families.size() == 1)
            o.require(fp_equivalent(r.families[0].representative_data(), entry(cat)), tag + ": data differs from " + cat);
    };
    single(0, 0, "quadricone");
    single(0, 6, "projectiveone");
    single(2, 4, "exampletwofour");

    // (0,4): no sphere with c1(N)^2 = 1, c2 = 1 + N2; with a sphere (c1(N)^2, a1) = (0,3)
    const auto& zf = en.at({0, 4});
    o.require(zf.families.size() == 2, "(0,4): expected two families");
    for (const auto& f : zf.families) {
        for (const auto& m : f.members) {
            for (const auto& c : m.data.components) {
                if (const auto* p = std::get_if<FourDimExtremal>(&c.normal)) {
                    const bool sphere = f.key.find("cp1") != std::string::npos;
                    if (sphere) {
                        o.require(p->c1 * p->c1 == 0 && m.n2 == 0, "(0,4) sphere branch: c1(N)^2 != 0");
                    } else {
                        o.require(p->c1 == -1 && p->c2 == 1 + m.n2, "(0,4) no sphere: c2 != 1 + N2");
                    }
                }
                if (const auto* s = std::get_if<SurfaceNormal>(&c.normal))
                    o.require(s->summands[0].degree == 3, "(0,4) sphere branch: a1 != 3");
            }
        }
    }
    // (4,4): both planes c1(N)^2 = 1, c2 split summing to b4 = 2 + N2, each <= 7
    const auto& ff = en.at({4, 4});
    o.require(!ff.families.empty(), "(4,4): no family");
    for (const auto& f : ff.families)
        for (const auto& m : f.members) {
            o.require(m.c2.size() == 2 && m.c2[0] + m.c2[1] == 2 + m.n2 && m.b4 == 2 + m.n2, "(4,4): c2 sum != b4");
            o.require(m.c2[0] <= 7 && m.c2[1] <= 7, "(4,4): c2 above 7");
            for (const auto& c : m.data.components)
                if (const auto* p = std::get_if<FourDimExtremal>(&c.normal))
                    o.require(p->c1 * p->c1 == 1, "(4,4): c1(N)^2 != 1");
        }

    const std::map<std::pair<int, int>, std::string> rejected = {{{0, 2}, anchor::kForcedFourfold},
                                                                 {{2, 2}, anchor::kForcedFourfold},
                                                                 {{2, 6}, anchor::kExtremalBetti},
                                                                 {{4, 6}, anchor::kExtremalBetti},
                                                                 {{6, 6}, anchor::kExtremalBetti}};
    int n_rejected = 0;
    for (const auto& v : admissible_dim_pairs()) {
        const auto it = rejected.find({v.shape.d1, v.shape.d2});
        if (it == rejected.end()) {
            o.require(v.admissible, "shape unexpectedly rejected");
        } else {
            ++n_rejected;
            o.require(!v.admissible && v.anchor == it->second, "shape rejected with the wrong rule");
        }
    }
    o.require(n_rejected == 5, "expected five rejected shapes");
    if (o.ok) o.detail = "(0,0),(0,6),(2,4) unique; (0,4),(4,4) N2 families; five shapes rejected";
    return o;
}

Outcome b4_bound() {
    Outcome o;
    int max_b4 = 0;
    for (const auto& [shape, r] : enumerations())
        for (const auto& f : r.families)
            for (const auto& m : f.members) max_b4 = std::max(max_b4, m.b4);
    o.require(max_b4 <= 14, "family with b4 = " + std::to_string(max_b4));
    o.require(b4_bound_check(14, {4, 4, false}, std::make_pair(std::int64_t{7}, std::int64_t{7})).verdict == Verdict::Pass,
              "(7,7) at b4 = 14 rejected");
    o.require(b4_bound_check(15, {4, 4, false}).verdict == Verdict::Fail, "b4 = 15 allowed");
    if (o.ok) o.detail = "max b4 over the b4 <= 30 sweep is " + std::to_string(max_b4) + "; (7,7) at 14 admissible";
    return o;
}

Outcome fano_filter() {
    Outcome o;
    const auto c = classify_fano(default_fano_table());
    o.require(c.survivors == std::vector<std::string>{"P4", "Q4", "W5", "X8m"}, "wrong survivors");
    auto trace = [&c](const std::string& name) {
        std::string all;
        for (const auto& v : c.verdicts)
            if (v.record.name == name)
                for (const auto& t : v.trace) all += t + "\n";
        return all;
    };
    const std::vector<std::pair<std::string, std::vector<std::string>>> arith = {
        {"X9m", {"= 352 != 256", "= 288 != 256"}},
        {"X7m", {"= 224 != 192", "= 160 != 192"}},
        {"V18", {"= 384 != 288", "= 320 != 288"}},
        {"X8m", {"= 224 = 224"}}};
    for (const auto& [name, needles] : arith)
        for (const auto& n : needles) o.require(trace(name).find(n) != std::string::npos, name + ": missing '" + n + "'");
    if (o.ok) o.detail = "survivors P4 Q4 W5 X8m; rejection arithmetic as expected";
    return o;
}

Outcome fp_classes() {
    Outcome o;
    for (const auto& e : catalog()) {
        const auto m = match_fp_class(e.data);
        o.require(m.fp_case == e.fp_case, e.name + ": got " + fp_case_name(m));
    }
    const auto& cat = catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            o.require(!fp_equivalent(cat[i].data, cat[j].data), cat[i].name + " ~ " + cat[j].name);
    if (o.ok) o.detail = "a a b b c d; pairwise inequivalent";
    return o;
}

Outcome properties() {
    Outcome o;
    for (const auto& e : catalog()) {
        const auto rev = reverse_action(e.data);
        std::vector<std::int64_t> a, b;
        for (const auto& c : e.data.components) a.push_back(contribution(c));
        for (const auto& c : rev.components) b.push_back(contribution(c));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        o.require(a == b, e.name + ": contributions change under reversal");
        o.require(profile_volume(dh_profile(rev)) == profile_volume(dh_profile(e.data)), e.name + ": volume changes");
        const auto bv = kirwan_betti_vector(e.data);
        for (std::size_t i = 0; i <= 8; ++i) o.require(bv[i] == bv[8 - i], e.name + ": Betti vector not symmetric");
    }

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const auto& r : {ring_cpn(1), ring_cpn(2), ring_cpn(3), ring_cpn(4), ring_p1xp1(), ring_projectivized(3)}) {
        auto rnd = [&] {
            RingClass c = RingClass::zero(r);
            for (const auto& m : r->basis()) c += RingClass::monomial(r, m, Polynomial{d(rng), d(rng)});
            return c;
        };
        for (int t = 0; t < 20; ++t) {
            const auto a = rnd(), b = rnd(), c = rnd();
            o.require((a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c,
                      "ring axioms fail in " + r->name());
        }
    }

    const std::vector<std::vector<const char*>> cmds = {{"semifree", "--json", "enumerate", "--shape", "all"},
                                                        {"semifree", "classify-fano"},
                                                        {"semifree", "catalog", "--name", "kuznetsov", "--emit", "report"}};
    for (const auto& c : cmds) {
        std::ostringstream a, ae, b, be;
        const int ca = run_cli(static_cast<int>(c.size()), c.data(), a, ae);
        const int cb = run_cli(static_cast<int>(c.size()), c.data(), b, be);
        o.require(ca == cb && a.str() == b.str() && ae.str() == be.str(), std::string("unstable output: ") + c[1]);
    }
    if (o.ok) o.detail = "reversal, Poincare symmetry, ring axioms, byte-stable CLI";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"ABBV vanishing", abbv_vanishing},
        {"Betti reproduction", betti_reproduction},
        {"DH oracle equivalence", dh_oracle},
        {"series-oracle equivalence", series_oracle},
        {"case classification", case_classification},
        {"b4 bound", b4_bound},
        {"Fano filter", fano_filter},
        {"FP classes", fp_classes},
        {"property suite", properties},
    };
    int failed = 0;
    int i = 0;
    for (const auto& [name, fn] : criteria) {
        ++i;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << i << " " << name << ": " << o.detail << "\n";
    }
    return failed == 0 ? 0 : 1;
}
