#include "semifree/catalog.hpp"
#include "semifree/fixed_point.hpp"
#include "semifree/localization.hpp"

#include <doctest.h>

#include <algorithm>

using namespace semifree;

namespace {

RingClass h2(std::int64_t c) {
    const auto r = ring_cpn(2);
    return RingClass::monomial(r, {2, 0}, Polynomial(c));
}

RingClass h1(std::int64_t c) {
    const auto r = ring_cpn(2);
    return RingClass::monomial(r, {1, 0}, Polynomial(c));
}

FixedComponent surface(int lambda, std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    std::array<Summand, 3> s{};
    const std::array<std::int64_t, 3> a{a1, a2, a3};
    for (std::size_t i = 0; i < 3; ++i) s[i] = {a[i], static_cast<int>(i) < lambda ? -1 : 1};
    return make_surface(s);
}

}  // namespace

TEST_CASE("equivariant Euler class of an extremal plane") {
    const auto w = equivariant_euler_fourdim({0, 2}, -1);
    CHECK(w.coefficient(2) == RingClass::one(ring_cpn(2)));
    CHECK(w.coefficient(1).is_zero());
    CHECK(w.coefficient(0) == h2(2));

    for (std::int64_t k2 : {-3, 0, 4}) {
        const auto e = equivariant_euler_fourdim({-1, k2}, 1);
        CHECK(e.coefficient(1) == h1(-1));
        CHECK(e.coefficient(0) == h2(k2));
    }
    const auto trivial = equivariant_euler_fourdim({0, 0}, 1);
    CHECK(trivial.coefficient(1).is_zero());
    CHECK(trivial.coefficient(0).is_zero());
}

TEST_CASE("isolated points") {
    CHECK(contribution_isolated(0) == 1);
    CHECK(contribution_isolated(2) == 1);
    CHECK(contribution_isolated(3) == -1);
    for (int l = 0; l <= 4; ++l) CHECK(contribution_series_oracle(make_point(l)) == contribution_isolated(l));
}

TEST_CASE("surfaces") {
    CHECK(contribution(surface(0, 1, 1, 1)) == -3);
    CHECK(contribution(surface(1, 3, 2, 2)) == 1);
    CHECK(contribution(surface(1, 3, 4, 0)) == 1);
    CHECK(contribution(surface(0, 0, 0, 0)) == 0);
    CHECK(contribution_surface(1, normalized(SurfaceNormal{{Summand{2, 1}, Summand{3, -1}, Summand{2, 1}}})) == 1);
}

TEST_CASE("extremal planes and CP3") {
    CHECK(contribution_fourdim_extremal({1, 1}) == 0);
    CHECK(contribution_fourdim_extremal({-1, 1}) == 0);
    CHECK(contribution_fourdim_extremal({0, 2}) == -2);
    CHECK(contribution_fourdim_extremal({2, 1}) == 3);
    CHECK(contribution_sixdim({1}) == -1);
    CHECK(contribution_sixdim({0}) == 0);
    CHECK(contribution_sixdim({2}) == -8);
    for (std::int64_t k2 = -5; k2 <= 5; ++k2)
        CHECK(contribution_series_oracle(make_plane_extremal(1, -1, k2)) == 1 - k2);
}

TEST_CASE("split fourfolds") {
    const auto q = make_split(ComponentType::P1xP1, {1, 1}, {1, 1});
    CHECK(contribution(q) == -2);
    CHECK(contribution_series_oracle(q) == -2);
    for (std::int64_t u = -4; u <= 4; ++u)
        for (std::int64_t v = -4; v <= 4; ++v) {
            const auto c = make_split(ComponentType::CP2, {u, 0}, {v, 0});
            CHECK(contribution(c) == -(u * u - u * v + v * v));
            CHECK(contribution_series_oracle(c) == contribution(c));
        }
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            const auto c = make_split(ComponentType::P1xP1, {a, 1}, {b, -2});
            CHECK(contribution_series_oracle(c) == contribution(c));
        }
}

TEST_CASE("series oracle agrees with every closed form") {
    for (int l = 0; l <= 3; ++l)
        for (std::int64_t a1 = -5; a1 <= 5; ++a1)
            for (std::int64_t a2 = -5; a2 <= 5; ++a2)
                for (std::int64_t a3 = -5; a3 <= 5; ++a3) {
                    const auto c = surface(l, a1, a2, a3);
                    REQUIRE(contribution_series_oracle(c) == contribution(c));
                }
    for (int s : {1, -1})
        for (std::int64_t k = -5; k <= 5; ++k)
            for (std::int64_t c2 = -5; c2 <= 5; ++c2) {
                const auto c = make_plane_extremal(s, k, c2);
                REQUIRE(contribution_series_oracle(c) == k * k - c2);
            }
    for (int s : {1, -1})
        for (std::int64_t m = -3; m <= 3; ++m) REQUIRE(contribution_series_oracle(make_sixdim(s, m)) == -m * m * m);
}

TEST_CASE("ABBV sums of the catalog") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        CHECK(abbv_sum(e.data) == 0);
        Rational oracle = 0;
        for (const auto& c : e.data.components) oracle += contribution_series_oracle(c);
        CHECK(oracle == 0);
    }
    const auto& q = find_catalog("quadricone")->data;
    CHECK(contribution(q.components[0]) == 1);
    CHECK(contribution(q.components[1]) == -2);
    CHECK(contribution(q.components[2]) == 1);
}

TEST_CASE("contributions are unchanged by reversing the action") {
    auto contributions = [](const FixedPointData& d) {
        std::vector<std::int64_t> v;
        for (const auto& c : d.components) v.push_back(contribution(c));
        std::sort(v.begin(), v.end());
        return v;
    };
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto rev = reverse_action(e.data);
        CHECK(contributions(rev) == contributions(e.data));
        CHECK(abbv_sum(rev) == 0);
        for (const auto& c : rev.components) CHECK(contribution_series_oracle(c) == contribution(c));
    }
}

TEST_CASE("restricted symplectic class") {
    CHECK(omega_coordinates(surface(1, 3, 2, 2))[0] == 9);
    CHECK(omega_coordinates(make_plane_extremal(-1, 0, 2))[0] == 3);
    CHECK(omega_coordinates(make_sixdim(-1, 1))[0] == 5);
    const auto q = omega_coordinates(make_split(ComponentType::P1xP1, {1, 1}, {1, 1}));
    CHECK(q[0] == 4);
    CHECK(q[1] == 4);
    CHECK(pairing(ComponentType::P1xP1, {1, 1}, {1, 1}) == 2);
    CHECK(pairing(ComponentType::CP2, {3, 0}, {2, 0}) == 6);
}
