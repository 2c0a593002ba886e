#include "semifree/cohomology.hpp"

#include <doctest.h>

#include <random>

using namespace semifree;

namespace {

RingClass gen(const RingHandle& r, const char* name) { return RingClass::generator(r, name); }

RingClass random_class(const RingHandle& r, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    RingClass c = RingClass::zero(r);
    for (const auto& m : r->basis()) c += RingClass::monomial(r, m, Polynomial{d(rng), d(rng)});
    return c;
}

std::vector<RingHandle> all_rings() {
    return {ring_point(), ring_cpn(1), ring_cpn(2), ring_cpn(3), ring_cpn(4), ring_p1xp1(), ring_projectivized(-3),
            ring_projectivized(0), ring_projectivized(8)};
}

}  // namespace

TEST_CASE("projective spaces") {
    const auto cp1 = ring_cpn(1);
    CHECK(cp1->top_degree() == 2);
    const auto h1 = gen(cp1, "h");
    CHECK(integrate_scalar(h1) == 1);
    CHECK((h1 * h1).is_zero());

    const auto cp3 = ring_cpn(3);
    const auto h3 = gen(cp3, "h");
    CHECK(integrate_scalar(pow(h3, 3)) == 1);
    CHECK(pow(h3, 4).is_zero());

    const auto cp2 = ring_cpn(2);
    const auto h = gen(cp2, "h");
    const auto one = RingClass::one(cp2);
    CHECK(integrate_scalar((one + h) * (one + h * Polynomial(2)) * h) == 3);
    CHECK(h * h == RingClass::monomial(cp2, {2, 0}));
    CHECK((h * (h * h)).is_zero());
    CHECK(one * h == h);

    CHECK_THROWS(ring_cpn(0));
    CHECK_THROWS(ring_cpn(5));
}

TEST_CASE("P1 x P1") {
    const auto r = ring_p1xp1();
    const auto x = gen(r, "x");
    const auto y = gen(r, "y");
    CHECK(integrate_scalar(x * y) == 1);
    CHECK((x * x).is_zero());
    CHECK((y * y).is_zero());
    const auto u = x + y;
    CHECK(integrate_scalar(u * u) == 2);
    const auto c1 = RingClass::linear(r, {2, 2});
    CHECK(integrate_scalar(c1 * c1) == 8);
    CHECK(integrate_scalar((x + y) * (x - y)) == 0);
}

TEST_CASE("projectivized bundle ring") {
    for (std::int64_t k2 : {-5, 0, 1, 8}) {
        CAPTURE(k2);
        const auto r = ring_projectivized(k2);
        const auto eta = gen(r, "eta");
        const auto xi = gen(r, "xi");
        CHECK(integrate_scalar(eta * eta * xi) == 1);
        CHECK(integrate_scalar(eta * xi * xi) == 1);
        CHECK(integrate_scalar(xi * xi * xi) == 1 - k2);
        CHECK(pow(eta, 3).is_zero());
        CHECK(xi * xi == eta * xi - eta * eta * Polynomial(k2));
    }
    CHECK(integrate_scalar(pow(gen(ring_projectivized(0), "xi"), 3)) == 1);
    CHECK(integrate_scalar(pow(gen(ring_projectivized(8), "xi"), 3)) == -7);
}

TEST_CASE("integrating (2 eta + x xi)^3 gives the DH cubic") {
    for (std::int64_t k2 = -20; k2 <= 20; ++k2) {
        const auto r = ring_projectivized(k2);
        const auto w = gen(r, "eta") * Polynomial(2) + gen(r, "xi") * Polynomial::x();
        CHECK(integrate(pow(w, 3)) == Polynomial{0, 12, 6, 1 - k2});
    }
}

TEST_CASE("integration extracts the top part") {
    const auto r = ring_cpn(2);
    const auto h = gen(r, "h");
    CHECK(integrate(RingClass::zero(r)).is_zero());
    CHECK(integrate_scalar(RingClass::one(r) + h) == 0);
    CHECK(integrate_scalar(RingClass::one(r) + h + h * h * Polynomial(5)) == 5);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(20261019);
    for (const auto& r : all_rings()) {
        CAPTURE(r->name());
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_class(r, rng);
            const auto b = random_class(r, rng);
            const auto c = random_class(r, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(RingClass::one(r) * a == a);
            CHECK(a + RingClass::zero(r) == a);
            CHECK((a - a).is_zero());
            // integration is linear
            CHECK(integrate(a * Polynomial(3) + b) == integrate(a) * Rational(3) + integrate(b));
        }
    }
}

TEST_CASE("mixing rings is rejected") {
    CHECK_THROWS(RingClass::one(ring_cpn(1)) * RingClass::one(ring_cpn(2)));
    CHECK_THROWS(RingClass::one(ring_cpn(1)) + RingClass::one(ring_p1xp1()));
}

TEST_CASE("Whitney sums") {
    const auto cp1 = ring_cpn(1);
    const auto h1 = gen(cp1, "h");
    const auto l1 = ChernTotal::line_bundle(h1);
    const auto three = whitney_sum(whitney_sum(l1, l1), l1);
    CHECK(three.total() == RingClass::one(cp1) + h1 * Polynomial(3));

    const auto cp2 = ring_cpn(2);
    const auto h = gen(cp2, "h");
    const auto l = ChernTotal::line_bundle(h);
    const auto two = whitney_sum(l, l);
    CHECK(two.total() == RingClass::one(cp2) + h * Polynomial(2) + h * h);

    const auto cube = whitney_sum(two, l);
    const auto q = whitney_quotient(cube, ChernTotal::line_bundle(h * Polynomial(2)));
    CHECK(q.total() == RingClass::one(cp2) + h + h * h);
    CHECK(whitney_sum(q, ChernTotal::line_bundle(h * Polynomial(2))) == cube);

    const auto other = ChernTotal::line_bundle(h * Polynomial(-3));
    CHECK(whitney_sum(two, other) == whitney_sum(other, two));
    CHECK(whitney_sum(two, ChernTotal::trivial(cp2)) == two);
    CHECK(two[0] == RingClass::one(cp2));
    CHECK(two[5].is_zero());
}
