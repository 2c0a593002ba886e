#include "semifree/catalog.hpp"
#include "semifree/classifier.hpp"
#include "semifree/localization.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace semifree;

namespace {

const FixedPointData& entry(const char* name) { return find_catalog(name)->data; }

Verdict verdict_of(const ConstraintReport& r, const char* id) {
    const Check* c = r.find(id);
    REQUIRE(c != nullptr);
    return c->verdict;
}

const EnumerationResult& enumerated(int d1, int d2) {
    static std::map<std::pair<int, int>, EnumerationResult> cache;
    auto it = cache.find({d1, d2});
    if (it == cache.end()) it = cache.emplace(std::make_pair(d1, d2), enumerate_case({d1, d2, false})).first;
    return it->second;
}

const Family* family_with(const EnumerationResult& r, const std::string& needle) {
    for (const auto& f : r.families)
        if (f.key.find(needle) != std::string::npos) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("index from an extremal component") {
    CHECK(index_from_extremal(entry("wexample")).value == 3);
    CHECK(index_from_extremal(entry("projectiveone")).value == 5);
    CHECK(index_from_extremal(entry("exampletwofour")).value == 5);
    CHECK(index_from_extremal(entry("quadricexample")).value == 4);
    CHECK(index_from_extremal(entry("kuznetsov")).value == 2);
    const auto q = index_from_extremal(entry("quadricone"));
    CHECK(q.value == 4);
    CHECK(q.lower_bound_only);
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        CHECK(index_from_extremal(reverse_action(e.data)).value == index_from_extremal(e.data).value);
        CHECK_FALSE(index_from_extremal(e.data).trace.empty());
    }
    // both extrema isolated, nothing in between
    CHECK_FALSE(index_from_extremal(FixedPointData{"", {make_point(0), make_point(4)}}).value.has_value());
}

TEST_CASE("sphere rule d on the W5 sphere") {
    const auto r = sphere_constraints(entry("wexample"));
    CHECK(verdict_of(r, "sphere-d") == Verdict::Pass);
    FixedPointData off = entry("wexample");
    off.components[1].normal = normalized(SurfaceNormal{{Summand{2, -1}, Summand{2, 1}, Summand{3, 1}}});
    CHECK(verdict_of(sphere_constraints(off), "sphere-d") == Verdict::Fail);
}

TEST_CASE("sphere rule a rules out (2,4) with b4 > 1 and c1(N_max) = -h") {
    FixedPointData d{"", {make_surface({Summand{0, 1}, Summand{0, 1}, Summand{0, 1}}), make_plane_extremal(-1, -1, 2),
                          make_point(2)}};
    CHECK(abbv_sum(d) == 0);
    CHECK(signature_check(d).verdict == Verdict::Pass);
    const auto r = sphere_constraints(d);
    CHECK_FALSE(r.passed());
    CHECK(verdict_of(r, "sphere-a-min") == Verdict::Fail);
    CHECK(r.find("sphere-a-min")->anchor == std::string(anchor::kSphereA));
}

TEST_CASE("sphere rule c between two planes") {
    CHECK(verdict_of(sphere_constraints(entry("quadricexample")), "sphere-c") == Verdict::Pass);
    FixedPointData three{"", {make_plane_extremal(1, 0, 1), make_plane_extremal(-1, 0, 1)}};
    CHECK(index_from_extremal(three).value == 3);
    CHECK(verdict_of(sphere_constraints(three), "sphere-c") == Verdict::Fail);
    FixedPointData two{"", {make_plane_extremal(1, -1, 1), make_plane_extremal(-1, -1, 1)}};
    CHECK(verdict_of(sphere_constraints(two), "sphere-c") == Verdict::Pass);
}

TEST_CASE("sphere index rules") {
    CHECK(verdict_of(sphere_index_rules(entry("wexample")), "index-odd") == Verdict::Pass);
    FixedPointData even = entry("wexample");
    even.components[2].normal = FourDimExtremal{-1, 2};
    CHECK(index_from_extremal(even).value == 2);
    CHECK(verdict_of(sphere_index_rules(even), "index-odd") == Verdict::Fail);

    CHECK(verdict_of(sphere_index_rules(entry("quadricone")), "index-quadric") == Verdict::Pass);

    FixedPointData low{"", {make_point(0), make_point(1), make_plane_extremal(-1, -1, 1)}};
    CHECK(verdict_of(sphere_index_rules(low), "index-low") == Verdict::Pass);
    low.components[2].normal = FourDimExtremal{1, 1};
    CHECK(verdict_of(sphere_index_rules(low), "index-low") == Verdict::Fail);
}

TEST_CASE("structural rules") {
    for (const auto& e : catalog()) CHECK(structural_rules(e.data).passed());
    FixedPointData neg{"", {make_point(0), make_sixdim(-1, -5)}};
    CHECK(verdict_of(structural_rules(neg), "area-positive") == Verdict::Fail);
    FixedPointData q = entry("quadricone");
    q.components[1].normal = FourDimSplit{{1, 1}, {2, 2}};
    CHECK(verdict_of(structural_rules(q), "interior-fourfold") == Verdict::Fail);
    FixedPointData mism{"", {make_plane_extremal(1, 1, 1), make_plane_extremal(-1, -1, 1)}};
    CHECK(verdict_of(structural_rules(mism), "index-consistency") == Verdict::Fail);
}

TEST_CASE("full report passes on the catalog") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto r = full_report(e.data, {true});
        CHECK(r.passed());
        CHECK(r.find("dh-continuity") != nullptr);
        for (const auto& c : r.checks()) CHECK_FALSE(c.anchor.empty());
    }
    FixedPointData bad = entry("wexample");
    bad.components[0].weights = {1, 1, 1, 2};
    const auto r = full_report(bad);
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->id == "semi-free");
}

TEST_CASE("admissible shapes") {
    const auto all = admissible_dim_pairs();
    CHECK(all.size() == 10);
    std::set<std::pair<int, int>> adm;
    for (const auto& v : all) {
        if (v.admissible)
            adm.insert({v.shape.d1, v.shape.d2});
        else
            CHECK_FALSE(v.anchor.empty());
    }
    CHECK(adm == std::set<std::pair<int, int>>{{0, 0}, {0, 4}, {0, 6}, {2, 4}, {4, 4}});
    const auto v26 = *shape_verdict({2, 6, false});
    CHECK_FALSE(v26.admissible);
    CHECK(v26.anchor == std::string(anchor::kExtremalBetti));
    CHECK(v26.reason.find("b2=2") != std::string::npos);
    const auto v02 = *shape_verdict({0, 2, false});
    CHECK_FALSE(v02.admissible);
    CHECK(v02.anchor == std::string(anchor::kForcedFourfold));
    CHECK(shape_verdict({4, 4, false})->admissible);
    CHECK_FALSE(shape_verdict({6, 0, false}).has_value());
    CHECK_THROWS_AS(enumerate_case({2, 6, false}), std::invalid_argument);
}

TEST_CASE("(0,6): isolated minimum and CP3 with c1(N) = h") {
    const auto& r = enumerated(0, 6);
    REQUIRE(r.families.size() == 1);
    const auto& f = r.families[0];
    REQUIRE(f.members.size() == 1);
    CHECK(f.members[0].n2 == 0);
    CHECK(f.members[0].b4 == 1);
    CHECK(f.iota == 5);
    CHECK(fp_equivalent(f.representative_data(), entry("projectiveone")));
}

TEST_CASE("(2,4): sphere with degree sum 3 and a plane with c1(N)^2 = 4") {
    const auto& r = enumerated(2, 4);
    REQUIRE(r.families.size() == 1);
    const auto& f = r.families[0];
    REQUIRE(f.members.size() == 1);
    CHECK(f.members[0].b4 == 1);
    CHECK(f.members[0].c2 == std::vector<std::int64_t>{1});
    const auto& d = f.representative_data();
    CHECK(d.components.size() == 2);
    for (const auto& c : d.components) {
        if (const auto* s = std::get_if<SurfaceNormal>(&c.normal))
            CHECK(s->summands[0].degree + s->summands[1].degree + s->summands[2].degree == 3);
        if (const auto* p = std::get_if<FourDimExtremal>(&c.normal)) CHECK(p->c1 * p->c1 == 4);
    }
    CHECK(fp_equivalent(d, entry("exampletwofour")));
}

TEST_CASE("(0,0): two points and a quadric with N = O(1,1) + O(1,1)") {
    const auto& r = enumerated(0, 0);
    REQUIRE(r.families.size() == 1);
    const auto& f = r.families[0];
    REQUIRE(f.members.size() == 1);
    CHECK(f.members[0].b4 == 2);
    CHECK(f.iota == 4);
    CHECK(fp_equivalent(f.representative_data(), entry("quadricone")));
}

TEST_CASE("(0,4): the two branches") {
    const auto& r = enumerated(0, 4);
    REQUIRE(r.families.size() == 2);
    const Family* ns = family_with(r, "point[-1,1,1,1]");
    const Family* sp = family_with(r, "cp1");
    REQUIRE(ns != nullptr);
    REQUIRE(sp != nullptr);
    // no sphere: c1(N)^2 = 1, c2 = b4 = 1 + N2, and DH positivity stops at N2 = 6
    CHECK(ns->iota == 2);
    REQUIRE(ns->members.size() == 7);
    for (const auto& m : ns->members) {
        CHECK(m.b4 == 1 + m.n2);
        CHECK(m.c2 == std::vector<std::int64_t>{1 + m.n2});
    }
    CHECK(ns->members.back().n2 == 6);
    // with a sphere: c1(N)^2 + a1 = 3 with odd index, so (0,3); N2 = 0
    CHECK(sp->iota == 3);
    REQUIRE(sp->members.size() == 1);
    CHECK(sp->members[0].n2 == 0);
    const auto& d = sp->representative_data();
    for (const auto& c : d.components) {
        if (const auto* s = std::get_if<SurfaceNormal>(&c.normal)) {
            CHECK(s->summands[0].degree == 3);
            CHECK(s->summands[1].degree + s->summands[2].degree == 4);
        }
        if (const auto* p = std::get_if<FourDimExtremal>(&c.normal)) CHECK(p->c1 == 0);
    }
    CHECK(fp_equivalent(d, entry("wexample")));
}

TEST_CASE("(4,4): c2 splits summing to b4 with both at most 7") {
    const auto& r = enumerated(4, 4);
    REQUIRE(r.families.size() == 2);
    const Family* two = nullptr;
    const Family* four = nullptr;
    for (const auto& f : r.families) (f.iota == 2 ? two : four) = &f;
    REQUIRE(two != nullptr);
    REQUIRE(four != nullptr);
    CHECK(four->iota == 4);
    for (const auto& m : four->members) {
        CHECK(m.n2 == 0);
        CHECK(m.c2[0] + m.c2[1] == 2);
    }
    int max_b4 = 0;
    std::set<std::pair<int, std::int64_t>> seen;
    for (const auto& m : two->members) {
        CHECK(m.b4 == 2 + m.n2);
        CHECK(m.c2[0] + m.c2[1] == m.b4);
        CHECK(m.c2[0] <= 7);
        CHECK(m.c2[1] <= 7);
        max_b4 = std::max(max_b4, m.b4);
        seen.insert({m.b4, m.c2[0]});
    }
    CHECK(max_b4 == 14);
    CHECK(seen.count({14, 7}) == 1);
    CHECK(seen.count({8, 4}) == 1);
    // every split a + b = b4 with both <= 7 occurs
    for (int b4 = 2; b4 <= 14; ++b4)
        for (std::int64_t a = b4 - 7; a <= 7; ++a) CHECK(seen.count({b4, a}) == 1);
}

TEST_CASE("every emitted family member passes every check") {
    for (const auto& v : admissible_dim_pairs()) {
        if (!v.admissible) continue;
        const auto& r = enumerated(v.shape.d1, v.shape.d2);
        for (const auto& f : r.families) {
            CHECK(f.report.passed());
            for (const auto& m : f.members) {
                CHECK(validate(m.data).passed());
                CHECK(abbv_sum(m.data) == 0);
                CHECK(signature_check(m.data).verdict == Verdict::Pass);
                CHECK(dh_positivity(m.data).verdict == Verdict::Pass);
                CHECK(sphere_constraints(m.data).passed());
                CHECK(sphere_index_rules(m.data).passed());
                CHECK(m.b4 <= 14);
            }
        }
    }
}

TEST_CASE("every catalog entry is found by the search") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto shape = dim_pair(e.data);
        const auto norm = normalized_orientation(e.data);
        bool found = false;
        for (const auto& f : enumerated(shape.d1, shape.d2).families)
            for (const auto& m : f.members) found = found || fp_equivalent(m.data, norm);
        CHECK(found);
    }
}

TEST_CASE("enumeration is deterministic") {
    const auto a = enumerate_case({0, 4, false});
    const auto b = enumerate_case({0, 4, false});
    REQUIRE(a.families.size() == b.families.size());
    CHECK(a.candidates == b.candidates);
    for (std::size_t i = 0; i < a.families.size(); ++i) {
        CHECK(a.families[i].key == b.families[i].key);
        CHECK(a.families[i].members.size() == b.families[i].members.size());
    }
}

TEST_CASE("strict DH pins the free parameters") {
    EnumerateOptions o;
    o.strict_dh = true;
    const auto zf = enumerate_case({0, 4, false}, o);
    REQUIRE(zf.families.size() == 1);
    CHECK(zf.families[0].iota == 3);
    const auto ff = enumerate_case({4, 4, false}, o);
    REQUIRE(ff.families.size() == 2);
    for (const auto& f : ff.families) {
        REQUIRE(f.members.size() == 1);
        const auto& m = f.members[0];
        if (f.iota == 2) {
            CHECK(m.b4 == 8);
            CHECK(m.c2 == std::vector<std::int64_t>{4, 4});
        } else {
            CHECK(m.c2 == std::vector<std::int64_t>{1, 1});
        }
    }
}
