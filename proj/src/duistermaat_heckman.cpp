#include "semifree/duistermaat_heckman.hpp"

#include "semifree/cohomology.hpp"
#include "semifree/localization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semifree {

Polynomial dh_near_cp2(std::int64_t k2) { return Polynomial({0, 12, 6, 1 - k2}); }

Polynomial dh_from_ring(std::int64_t k2) {
    const RingHandle ring = ring_projectivized(k2);
    const RingClass omega =
        RingClass::generator(ring, "eta") * Polynomial(2) + RingClass::generator(ring, "xi") * Polynomial::x();
    return integrate(pow(omega, 3));
}

Polynomial dh_near_plane(std::int64_t c1, std::int64_t c2) {
    const std::int64_t a = 3 + c1;
    return Polynomial({0, 3 * a * a, -3 * c1 * a, c1 * c1 - c2});
}

Rational half_volume_cp2(std::int64_t k2) { return 4 * dh_near_cp2(k2).integrate(0, 2); }

Rational half_volume_isolated_pair() {
    const Polynomial x3 = pow(Polynomial::x(), 3);
    const Polynomial shifted = pow(Polynomial::x() - Polynomial(2), 3);
    return 4 * (x3.integrate(0, 2) + (x3 - shifted).integrate(2, 4));
}

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

RingClass exp_class(const RingClass& omega, int dim) {
    RingClass out = RingClass::one(omega.ring());
    RingClass power = RingClass::one(omega.ring());
    for (int k = 1; k <= dim / 2; ++k) {
        power = power * omega;
        out += power * Polynomial(Rational(1) / factorial(k));
    }
    return out;
}

Polynomial shifted_term(const FixedComponent& c) { return component_dh_term(c).compose_affine(1, -c.level()); }

// Sum of shifted terms over components selected by `pick`.
template <class Pred>
Polynomial sum_terms(const FixedPointData& data, Pred pick) {
    Polynomial total;
    for (const auto& c : data.components)
        if (pick(c)) total += shifted_term(c);
    return total;
}

std::string rat(const Rational& q) { return to_string(q); }

}  // namespace

Polynomial component_dh_term(const FixedComponent& comp) {
    const LaurentSeries euler = equivariant_euler(comp);
    const int r = euler.top_power();
    const LaurentSeries e = euler.inverse() * exp_class(restricted_omega(comp), comp.dim());
    Polynomial out;
    for (int i = 0; i <= comp.dim() / 2; ++i) {
        const int j = r + i - 1;
        if (j < 0) continue;
        const Rational coeff = integrate_scalar(e.coefficient(-r - i)) * 6 / factorial(j);
        out += pow(Polynomial::x(), static_cast<unsigned>(j)) * coeff;
    }
    return out;
}

DHProfile dh_profile(const FixedPointData& data) {
    std::set<int> level_set;
    for (const auto& c : data.components) level_set.insert(c.level());
    std::vector<Rational> cuts(level_set.begin(), level_set.end());
    if (cuts.size() >= 2 && cuts.front() < 0 && cuts.back() > 0 && !level_set.count(0)) {
        cuts.push_back(0);
        std::sort(cuts.begin(), cuts.end());
    }
    DHProfile profile;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Rational a = cuts[k];
        const Rational b = cuts[k + 1];
        DHPiece piece{a, b, {}, b <= 0 ? DHSide::Below : DHSide::Above};
        if (piece.side == DHSide::Below)
            piece.poly = sum_terms(data, [&a](const FixedComponent& c) { return Rational(c.level()) <= a; });
        else
            piece.poly = -sum_terms(data, [&b](const FixedComponent& c) { return Rational(c.level()) >= b; });
        profile.pieces.push_back(std::move(piece));
    }
    return profile;
}

Rational profile_volume(const DHProfile& profile) {
    Rational v = 0;
    for (const auto& p : profile.pieces) v += p.poly.integrate(p.lo, p.hi);
    return 4 * v;
}

Rational volume_zero_four_no_sphere(int b4) { return half_volume_isolated_pair() + half_volume_cp2(b4); }

Rational volume_four_four(int b4) {
    // the two halves are 176 - 16 k_min and 176 - 16 k_max with k_min + k_max = b4
    return 2 * half_volume_cp2(0) - 16 * b4;
}

VolumeResult total_volume(const FixedPointData& raw) {
    const FixedPointData data = normalized_orientation(raw);
    const DimPair shape = dim_pair(data);
    const int b4 = kirwan_betti(data, 4);
    // the halves formulas need c(N) = 1 - h + k2 h^2 on every plane
    auto plane_minus = [](const FixedComponent& c) {
        const auto* x = std::get_if<FourDimExtremal>(&c.normal);
        return x && x->c1 == -1;
    };
    auto only = [&data](auto pred) {
        return std::all_of(data.components.begin(), data.components.end(), pred);
    };
    if (shape.d1 == 0 && shape.d2 == 4 && count_points(data, 1) == 1 && only([&plane_minus](const FixedComponent& c) {
            return c.type == ComponentType::Point || (c.type == ComponentType::CP2 && c.is_local_max() && plane_minus(c));
        }))
        return {volume_zero_four_no_sphere(b4), "(0,4) without sphere: 240 + 176 - 16 b4"};
    if (shape.d1 == 4 && shape.d2 == 4 && only([&plane_minus](const FixedComponent& c) {
            return (c.type == ComponentType::CP2 && plane_minus(c)) || (c.type == ComponentType::Point && c.lambda() == 2);
        }))
        return {volume_four_four(b4), "(4,4): 176 - 16 k_min + 176 - 16 k_max"};
    return {std::nullopt, "not computable by halves"};
}

int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto changes = [&seq](const Rational& at) {
        int count = 0;
        int prev = 0;
        for (const auto& s : seq) {
            const Rational v = s(at);
            const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (sign == 0) continue;
            if (prev != 0 && sign != prev) ++count;
            prev = sign;
        }
        return count;
    };
    return changes(lo) - changes(hi);
}

PositivityResult positivity_on(const Polynomial& p, const Rational& lo, const Rational& hi) {
    PositivityResult res;
    const Rational mid = (lo + hi) / 2;
    if (p.is_zero()) return {false, std::nullopt, mid, "identically zero"};
    // Strip roots at the endpoints; dividing by (x - hi) flips the sign inside.
    Polynomial q = p;
    int sign = 1;
    const Polynomial x = Polynomial::x();
    while (q.degree() > 0 && q(lo) == 0) {
        Polynomial quo, rem;
        Polynomial::divmod(q, x - Polynomial(lo), quo, rem);
        q = quo;
    }
    while (q.degree() > 0 && q(hi) == 0) {
        Polynomial quo, rem;
        Polynomial::divmod(q, x - Polynomial(hi), quo, rem);
        q = quo;
        sign = -sign;
    }
    const int roots = sturm_root_count(q, lo, hi);
    if (roots == 0) {
        if (sign * q(mid) > 0) return res;
        return {false, std::nullopt, mid, "negative on the whole interval, e.g. at " + rat(mid)};
    }
    // Bisect towards the first root.
    Rational a = lo;
    Rational b = hi;
    for (int it = 0; it < 24; ++it) {
        const Rational m = (a + b) / 2;
        if (q(m) == 0) {
            a = b = m;
            break;
        }
        if (sturm_root_count(q, a, m) > 0)
            b = m;
        else
            a = m;
    }
    const Rational w = (a + b) / 2;
    std::ostringstream os;
    os << "vanishes inside (" << rat(lo) << "," << rat(hi) << ") near " << rat(w);
    return {false, std::nullopt, w, os.str()};
}

PositivityResult positivity_check(const DHProfile& profile) {
    for (std::size_t i = 0; i < profile.pieces.size(); ++i) {
        const auto& p = profile.pieces[i];
        PositivityResult r = positivity_on(p.poly, p.lo, p.hi);
        if (!r.ok) {
            r.piece = i;
            r.detail = "piece " + std::to_string(i) + " [" + p.poly.str("c") + "] " + r.detail;
            return r;
        }
    }
    return {};
}

Check dh_positivity(const FixedPointData& data) {
    const PositivityResult r = positivity_check(dh_profile(data));
    return {"dh-positivity", anchor::kDhPositivity, r.ok ? Verdict::Pass : Verdict::Fail,
            r.ok ? "every piece positive on its open interval" : r.detail};
}

Polynomial dh_global_residual(const FixedPointData& data) {
    return sum_terms(data, [](const FixedComponent&) { return true; });
}

Check dh_continuity(const FixedPointData& data) {
    const Rational below = sum_terms(data, [](const FixedComponent& c) { return c.level() < 0; })(0);
    const Rational above = -sum_terms(data, [](const FixedComponent& c) { return c.level() > 0; })(0);
    return {"dh-continuity", anchor::kDhContinuity, below == above ? Verdict::Pass : Verdict::Fail,
            "DH(0) from the minimum " + rat(below) + ", from the maximum " + rat(above)};
}

Check dh_vanishing(const FixedPointData& data) {
    const Polynomial r = dh_global_residual(data);
    return {"dh-vanishing", anchor::kDhVanishing, r.is_zero() ? Verdict::Pass : Verdict::Fail,
            "sum of all residue terms = " + (r.is_zero() ? std::string("0") : r.str("c"))};
}

namespace {

FixedPointData four_four_data(std::int64_t kmin, std::int64_t kmax, int n2) {
    FixedPointData d;
    d.components.push_back(make_plane_extremal(1, -1, kmin));
    for (int i = 0; i < n2; ++i) d.components.push_back(make_point(2));
    d.components.push_back(make_plane_extremal(-1, -1, kmax));
    return d;
}

FixedPointData zero_four_data(int b4) {
    FixedPointData d;
    d.components.push_back(make_point(0));
    d.components.push_back(make_point(1));
    for (int i = 0; i < b4 - 1; ++i) d.components.push_back(make_point(2));
    d.components.push_back(make_plane_extremal(-1, -1, b4));
    return d;
}

}  // namespace

Check b4_bound_check(int b4, const DimPair& shape, std::optional<std::pair<std::int64_t, std::int64_t>> split) {
    const std::string id = "b4-bound";
    if (shape.d1 == 4 && shape.d2 == 4) {
        if (b4 < 2) return {id, anchor::kDhPositivity, Verdict::Fail, "(4,4) has b4 >= 2"};
        std::vector<std::pair<std::int64_t, std::int64_t>> splits;
        if (split) {
            if (split->first + split->second != b4)
                return {id, anchor::kDhPositivity, Verdict::Fail, "split does not sum to b4"};
            splits.push_back(*split);
        } else {
            for (std::int64_t a = b4 - 8; a <= 8; ++a) splits.emplace_back(a, b4 - a);
        }
        for (const auto& [kmin, kmax] : splits) {
            const PositivityResult r = positivity_check(dh_profile(four_four_data(kmin, kmax, b4 - 2)));
            if (r.ok)
                return {id, anchor::kDhPositivity, Verdict::Pass,
                        "c(N) = 1 - h + k h^2 at both planes, split (" + std::to_string(kmin) + "," +
                            std::to_string(kmax) + ") keeps DH positive"};
            if (split) return {id, anchor::kDhPositivity, Verdict::Fail, r.detail};
        }
        return {id, anchor::kDhPositivity, Verdict::Fail,
                "no split of b4 = " + std::to_string(b4) + " keeps both halves positive (each k <= 7)"};
    }
    if (shape.d1 == 0 && shape.d2 == 4) {
        if (b4 < 1) return {id, anchor::kDhPositivity, Verdict::Fail, "b4 >= 1"};
        const PositivityResult r = positivity_check(dh_profile(zero_four_data(b4)));
        return {id, anchor::kDhPositivity, r.ok ? Verdict::Pass : Verdict::Fail,
                r.ok ? "k2 = b4 = " + std::to_string(b4) + " <= 7" : "k2 = b4 = " + std::to_string(b4) + ": " + r.detail};
    }
    return {id, anchor::kDhPositivity, Verdict::Skipped, "b4 is pinned by the other constraints in this shape"};
}

}  // namespace semifree
