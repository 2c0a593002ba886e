#include "semifree/classifier.hpp"

#include "semifree/localization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semifree {

namespace {

struct Extrema {
    std::size_t lo;
    std::size_t hi;
    const FixedComponent& min(const FixedPointData& d) const { return d.components[lo]; }
    const FixedComponent& max(const FixedPointData& d) const { return d.components[hi]; }
};

std::optional<Extrema> extrema(const FixedPointData& d) {
    const auto lo = min_index(d);
    const auto hi = max_index(d);
    if (!lo || !hi || *lo == *hi) return std::nullopt;
    return Extrema{*lo, *hi};
}

/// Non-extremal components with level strictly inside (a, b).
std::vector<const FixedComponent*> between(const FixedPointData& d, const Extrema& e, int a, int b) {
    std::vector<const FixedComponent*> out;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (i == e.lo || i == e.hi) continue;
        const int h = d.components[i].level();
        if (h > a && h < b) out.push_back(&d.components[i]);
    }
    return out;
}

std::vector<const FixedComponent*> interior(const FixedPointData& d, const Extrema& e) {
    std::vector<const FixedComponent*> out;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (i != e.lo && i != e.hi) out.push_back(&d.components[i]);
    return out;
}

/// Multiple of the positive generator that [omega] restricts to.
std::int64_t generator_multiple(const FixedComponent& c) { return omega_coordinates(c)[0]; }

bool divides(std::int64_t g, std::int64_t n) { return g > 0 && n % g == 0; }

std::string str(std::int64_t v) { return std::to_string(v); }

bool structurally_sound(const ConstraintReport& r) {
    for (const char* id : {"semi-free", "tangent-dimension", "normal-variant", "unique-minimum", "unique-maximum"}) {
        const Check* c = r.find(id);
        if (c && c->verdict == Verdict::Fail) return false;
    }
    return true;
}

}  // namespace

IndexResult index_from_extremal(const FixedPointData& raw) {
    const FixedPointData data = normalized_orientation(raw);
    const auto e = extrema(data);
    if (!e) return {std::nullopt, false, "no unique extrema"};
    for (const auto* c : {&e->min(data), &e->max(data)}) {
        if (c->dim() == 0) continue;
        const std::int64_t g = generator_multiple(*c);
        const char* end = c == &e->min(data) ? "minimum" : "maximum";
        std::ostringstream os;
        os << "c1(M) on the " << end << " " << type_name(c->type) << " = ";
        switch (c->type) {
            case ComponentType::CP1: os << "(2 + " << (g - 2) << ")"; break;
            case ComponentType::CP2: os << "(3 + " << (g - 3) << ")h"; break;
            case ComponentType::CP3: os << "(4 + " << (g - 4) << ")h"; break;
            default: os << g; break;
        }
        os << ", iota = " << std::llabs(g);
        return {static_cast<int>(std::llabs(g)), false, os.str()};
    }
    const auto inner = interior(data, *e);
    const auto fourfolds = std::count_if(inner.begin(), inner.end(), [](const auto* c) { return c->dim() == 4; });
    if (fourfolds == 1) {
        const int hmin = std::abs(e->min(data).level());
        return {hmin, true,
                "isolated extrema with one interior fourfold: iota >= 4; the sphere through it has area |H_min| = " +
                    std::to_string(hmin)};
    }
    return {std::nullopt, false, "no index rule for isolated extrema without an interior fourfold"};
}

ConstraintReport structural_rules(const FixedPointData& raw) {
    ConstraintReport r;
    const FixedPointData data = normalized_orientation(raw);
    {
        std::string bad;
        for (const auto& c : data.components) {
            if (c.dim() == 0) continue;
            const auto w = omega_coordinates(c);
            const bool ok = w[0] > 0 && (c.type != ComponentType::P1xP1 || w[1] > 0);
            if (!ok && bad.empty()) bad = describe(c) + " has [omega] = (" + str(w[0]) + "," + str(w[1]) + ")";
        }
        r.add("area-positive", anchor::kArea, bad.empty(), bad.empty() ? "every component has positive area" : bad);
    }
    const auto e = extrema(data);
    if (!e) return r;
    const auto& lo = e->min(data);
    const auto& hi = e->max(data);
    if (lo.dim() > 0 && hi.dim() > 0) {
        const auto a = std::llabs(generator_multiple(lo));
        const auto b = std::llabs(generator_multiple(hi));
        r.add("index-consistency", anchor::kIndexConsistency, a == b,
              "iota from minimum " + str(a) + ", from maximum " + str(b));
    } else {
        r.skip("index-consistency", anchor::kIndexConsistency, "an extremum is isolated");
    }
    if (lo.dim() == 0 && hi.dim() == 0) {
        const std::int64_t dmin = -lo.level();
        const std::int64_t dmax = hi.level();
        bool any = false;
        for (const auto* c : interior(data, *e)) {
            const auto* sp = std::get_if<FourDimSplit>(&c->normal);
            if (!sp) continue;
            any = true;
            const auto w = omega_coordinates(*c);
            const int n = c->type == ComponentType::P1xP1 ? 2 : 1;
            bool ok = true;
            for (int k = 0; k < n; ++k)
                ok = ok && dmin * sp->negative[static_cast<std::size_t>(k)] == w[static_cast<std::size_t>(k)] &&
                     dmax * sp->positive[static_cast<std::size_t>(k)] == w[static_cast<std::size_t>(k)];
            r.add("interior-fourfold", anchor::kInteriorFourfold, ok,
                  describe(*c) + ": need |H_min| L- = |H_max| L+ = [omega]|F = (" + str(w[0]) +
                      (n == 2 ? "," + str(w[1]) : std::string()) + ")");
        }
        if (!any) r.skip("interior-fourfold", anchor::kInteriorFourfold, "no interior fourfold");
    } else {
        r.skip("interior-fourfold", anchor::kInteriorFourfold, "an extremum has positive dimension");
    }
    return r;
}

ConstraintReport sphere_constraints(const FixedPointData& raw) {
    ConstraintReport r;
    const FixedPointData data = normalized_orientation(raw);
    const auto e = extrema(data);
    if (!e) return r;
    const auto& lo = e->min(data);
    const auto& hi = e->max(data);
    const int hmin = lo.level();
    const int hmax = hi.level();
    const bool index_two_points = count_points(data, 2) > 0;
    const auto inner = interior(data, *e);

    // a) spheres from index-two points to a positive-dimensional extremum
    if (hi.dim() == 4 && index_two_points && between(data, *e, 0, hmax).empty()) {
        const auto g = generator_multiple(hi);
        r.add("sphere-a-max", anchor::kSphereA, divides(g, hmax),
              "[omega] on the maximum is " + str(g) + "h, needs to divide " + str(hmax));
    } else {
        r.skip("sphere-a-max", anchor::kSphereA, "needs a fourfold maximum, no levels in (0,H_max), index-two points");
    }
    if (lo.dim() > 0 && index_two_points && between(data, *e, hmin, 0).empty()) {
        const auto g = generator_multiple(lo);
        r.add("sphere-a-min", anchor::kSphereA, divides(g, -hmin),
              "[omega] on the minimum is " + str(g) + "h, needs to divide " + str(-hmin));
    } else {
        r.skip("sphere-a-min", anchor::kSphereA, "needs a positive-dimensional minimum, no levels in (H_min,0), index-two points");
    }
    // b) every interior component is an index-two point
    const bool only_index_two = std::all_of(inner.begin(), inner.end(), [](const auto* c) {
        return c->type == ComponentType::Point && c->lambda() == 2;
    });
    if (hi.dim() == 4 && lo.dim() > 0 && only_index_two) {
        const auto g = generator_multiple(lo);
        r.add("sphere-b", anchor::kSphereB, divides(g, hmax - hmin),
              "[omega] on the minimum is " + str(g) + ", needs to divide H_max - H_min = " + str(hmax - hmin));
    } else {
        r.skip("sphere-b", anchor::kSphereB, "needs a fourfold maximum, a positive-dimensional minimum and only index-two interior points");
    }
    // c) no interior fixed points at all
    if (hi.dim() <= 4 && inner.empty() && (lo.dim() > 0 || hi.dim() > 0)) {
        bool ok = true;
        std::string detail = "H_max - H_min = " + str(hmax - hmin);
        for (const auto* c : {&lo, &hi}) {
            if (c->dim() == 0) continue;
            const auto g = generator_multiple(*c);
            ok = ok && divides(g, hmax - hmin);
            detail += "; " + type_name(c->type) + " at " + str(c->level()) + " has [omega] = " + str(g);
        }
        r.add("sphere-c", anchor::kSphereC, ok, detail);
    } else {
        r.skip("sphere-c", anchor::kSphereC, "needs max dim <= 4, no interior components, a positive-dimensional extremum");
    }
    // d) isolated minimum flowing straight into an index-one sphere
    bool applied = false;
    if (lo.dim() == 0) {
        for (const auto* c : inner) {
            if (c->type != ComponentType::CP1 || c->lambda() != 1) continue;
            if (!between(data, *e, hmin, c->level()).empty()) continue;
            const auto& s = std::get<SurfaceNormal>(c->normal);
            std::int64_t a1 = 0, total = 0;
            for (const auto& sm : s.summands) {
                total += sm.degree;
                if (sm.weight < 0) a1 = sm.degree;
            }
            const std::int64_t gap = c->level() - hmin;
            applied = true;
            r.add("sphere-d", anchor::kSphereD, gap * a1 == 2 + total,
                  str(gap) + " * a1 = " + str(gap * a1) + " vs 2 + a1 + a2 + a3 = " + str(2 + total));
        }
    }
    if (!applied)
        r.skip("sphere-d", anchor::kSphereD, "needs an isolated minimum and an index-one sphere with no levels between");
    return r;
}

ConstraintReport sphere_index_rules(const FixedPointData& raw) {
    ConstraintReport r;
    const FixedPointData data = normalized_orientation(raw);
    const auto e = extrema(data);
    if (!e) return r;
    const auto& lo = e->min(data);
    const auto& hi = e->max(data);
    const IndexResult iota = index_from_extremal(data);
    const auto inner = interior(data, *e);

    const auto fourfolds = std::count_if(inner.begin(), inner.end(), [](const auto* c) { return c->dim() == 4; });
    if (lo.dim() == 0 && hi.dim() == 0 && fourfolds == 1) {
        r.add("index-quadric", anchor::kIndexQuadric, iota.value && *iota.value >= 4, iota.trace);
    } else {
        r.skip("index-quadric", anchor::kIndexQuadric, "needs isolated extrema and one interior fourfold");
    }
    const auto below_zero = between(data, *e, lo.level(), 0);
    const bool single_sphere = lo.dim() == 0 && below_zero.size() == 1 && below_zero[0]->type == ComponentType::CP1 &&
                               below_zero[0]->lambda() == 1;
    const bool single_point = lo.dim() == 0 && below_zero.size() == 1 && below_zero[0]->type == ComponentType::Point &&
                              below_zero[0]->lambda() == 1;
    if (single_sphere && iota.value) {
        r.add("index-odd", anchor::kIndexOdd, *iota.value % 2 == 1, "iota = " + std::to_string(*iota.value));
    } else {
        r.skip("index-odd", anchor::kIndexOdd, "needs an isolated minimum whose only component below 0 is an index-one sphere");
    }
    if (single_point && iota.value) {
        r.add("index-low", anchor::kIndexLow, *iota.value <= 2, "iota = " + std::to_string(*iota.value));
    } else {
        r.skip("index-low", anchor::kIndexLow, "needs an isolated minimum whose only component below 0 is an index-one point");
    }
    return r;
}

ConstraintReport full_report(const FixedPointData& data, const CheckOptions& options) {
    ConstraintReport r = validate(data);
    if (!structurally_sound(r)) return r;
    const Rational abbv = abbv_sum(data);
    r.add("abbv", anchor::kAbbv, abbv == 0, "sum of contributions = " + to_string(abbv));
    r.add(signature_check(data));
    r.append(structural_rules(data));
    r.append(sphere_constraints(data));
    r.append(sphere_index_rules(data));
    const IndexResult iota = index_from_extremal(data);
    if (iota.value)
        r.add({"index", anchor::kIndex, Verdict::Pass, iota.trace});
    else
        r.skip("index", anchor::kIndex, iota.trace);
    const ConstraintReport basics = validate(data);
    if (basics.passed()) {
        r.add(dh_positivity(data));
        if (options.strict_dh) {
            r.add(dh_continuity(data));
            r.add(dh_vanishing(data));
        }
    } else {
        r.skip("dh-positivity", anchor::kDhPositivity, "needs valid data");
    }
    return r;
}

namespace {

ComponentType extremal_type(int dim) {
    switch (dim) {
        case 0: return ComponentType::Point;
        case 2: return ComponentType::CP1;
        case 4: return ComponentType::CP2;
        default: return ComponentType::CP3;
    }
}

BettiVector add_betti(BettiVector b, ComponentType t, int lambda) {
    for (int i = 0; i <= 8; ++i) b[static_cast<std::size_t>(i)] += betti_at(t, i - 2 * lambda);
    return b;
}

std::string betti_text(const BettiVector& b) {
    std::ostringstream os;
    for (int i = 0; i <= 8; i += 2) os << (i ? "," : "") << "b" << i << "=" << b[static_cast<std::size_t>(i)];
    return os.str();
}

}  // namespace

std::vector<ShapeVerdict> admissible_dim_pairs() {
    std::vector<ShapeVerdict> out;
    for (int d1 = 0; d1 <= 6; d1 += 2)
        for (int d2 = d1; d2 <= 6; d2 += 2) {
            ShapeVerdict v{{d1, d2, false}, true, "", ""};
            BettiVector b{};
            b = add_betti(b, extremal_type(d1), 0);
            b = add_betti(b, extremal_type(d2), (8 - d2) / 2);
            if (b[2] > 1 || b[6] > 1) {
                v.admissible = false;
                v.anchor = anchor::kExtremalBetti;
                v.reason = "extrema alone give " + betti_text(b) + " but b2 = b6 = 1";
            } else if (d2 <= 2) {
                // a component of dimension >= 4 must exist; only index one fits between the extrema
                const BettiVector c = add_betti(b, ComponentType::CP2, 1);
                if (c[2] > 1 || c[6] > 1) {
                    v.admissible = false;
                    v.anchor = anchor::kForcedFourfold;
                    v.reason = "the forced interior fourfold has index 1, giving " + betti_text(c);
                } else {
                    v.reason = "extrema " + betti_text(b) + "; an index-one interior fourfold fits";
                }
            } else {
                v.reason = "extrema give " + betti_text(b);
            }
            out.push_back(v);
        }
    return out;
}

std::optional<ShapeVerdict> shape_verdict(const DimPair& shape) {
    for (const auto& v : admissible_dim_pairs())
        if (v.shape.d1 == shape.d1 && v.shape.d2 == shape.d2) return v;
    return std::nullopt;
}

}  // namespace semifree
