#include "semifree/localization.hpp"

#include <sstream>
#include <stdexcept>

namespace semifree {

LaurentSeries::LaurentSeries(RingHandle ring, int top_power, std::vector<RingClass> terms)
    : ring_(std::move(ring)), top_power_(top_power), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (!t.ring()->same_as(*ring_)) throw std::invalid_argument("series term over a different ring");
}

LaurentSeries LaurentSeries::linear_factor(const RingHandle& ring, int weight, const RingClass& c, std::size_t order) {
    std::vector<RingClass> terms(std::max<std::size_t>(order, 2), RingClass::zero(ring));
    terms[0] = RingClass::one(ring) * Polynomial(weight);
    terms[1] = c;
    terms.resize(order, RingClass::zero(ring));
    return LaurentSeries(ring, 1, std::move(terms));
}

LaurentSeries LaurentSeries::quadratic(const RingHandle& ring, const RingClass& b, const RingClass& c,
                                       std::size_t order) {
    std::vector<RingClass> terms(std::max<std::size_t>(order, 3), RingClass::zero(ring));
    terms[0] = RingClass::one(ring);
    terms[1] = b;
    terms[2] = c;
    terms.resize(order, RingClass::zero(ring));
    return LaurentSeries(ring, 2, std::move(terms));
}

LaurentSeries LaurentSeries::scalar(const RingHandle& ring, const Rational& s, int power, std::size_t order) {
    std::vector<RingClass> terms(order, RingClass::zero(ring));
    if (order > 0) terms[0] = RingClass::one(ring) * Polynomial(s);
    return LaurentSeries(ring, power, std::move(terms));
}

RingClass LaurentSeries::coefficient(int power) const {
    const int j = top_power_ - power;
    if (j < 0 || j >= static_cast<int>(terms_.size())) return RingClass::zero(ring_);
    return terms_[static_cast<std::size_t>(j)];
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.ring_->same_as(*b.ring_)) throw std::invalid_argument("series ring mismatch");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<RingClass> terms(n, RingClass::zero(a.ring_));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) {
            if (a.terms_[i].is_zero() || b.terms_[j].is_zero()) continue;
            terms[i + j] += a.terms_[i] * b.terms_[j];
        }
    return LaurentSeries(a.ring_, a.top_power_ + b.top_power_, std::move(terms));
}

LaurentSeries LaurentSeries::operator*(const RingClass& c) const {
    std::vector<RingClass> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back(t * c);
    return LaurentSeries(ring_, top_power_, std::move(terms));
}

LaurentSeries LaurentSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("cannot invert an empty series");
    const RingClass& lead = terms_[0];
    const Polynomial& c = lead.constant_term();
    if (!(lead.homogeneous_part(0) == lead) || !c.is_constant() || c.is_zero())
        throw std::domain_error("leading coefficient is not a nonzero scalar");
    const Rational inv = Rational(1) / c.coeff(0);
    std::vector<RingClass> b(terms_.size(), RingClass::zero(ring_));
    b[0] = RingClass::one(ring_) * Polynomial(inv);
    for (std::size_t n = 1; n < terms_.size(); ++n) {
        RingClass acc = RingClass::zero(ring_);
        for (std::size_t k = 1; k <= n; ++k) {
            if (terms_[k].is_zero() || b[n - k].is_zero()) continue;
            acc += terms_[k] * b[n - k];
        }
        b[n] = acc * Polynomial(-inv);
    }
    return LaurentSeries(ring_, -top_power_, std::move(b));
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (terms_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << terms_[j].str() << ")t^" << (top_power_ - static_cast<int>(j));
    }
    if (first) os << "0";
    return os.str();
}

std::size_t series_order(int dim) { return static_cast<std::size_t>(dim / 2 + 3); }

namespace {

RingClass h_multiple(const RingHandle& ring, std::int64_t k, int power = 1) {
    return RingClass::monomial(ring, {power, 0}, Polynomial(k));
}

RingClass degree_two(ComponentType base, const std::array<std::int64_t, 2>& v) {
    const RingHandle ring = ring_of(base);
    if (base == ComponentType::P1xP1) return RingClass::linear(ring, {v[0], v[1]});
    return RingClass::linear(ring, {v[0]});
}

int nonzero_sign(const WeightSignature& w) {
    for (int x : w)
        if (x != 0) return x > 0 ? 1 : -1;
    return 0;
}

[[noreturn]] void mismatch(const FixedComponent& comp) {
    throw std::invalid_argument("normal data '" + normal_kind(comp.normal) + "' does not fit component " +
                                type_name(comp.type));
}

}  // namespace

LaurentSeries equivariant_euler_fourdim(const FourDimExtremal& nb, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const RingHandle ring = ring_cpn(2);
    return LaurentSeries::quadratic(ring, h_multiple(ring, sign * nb.c1), h_multiple(ring, nb.c2, 2), series_order(4));
}

LaurentSeries equivariant_euler(const FixedComponent& comp) {
    const RingHandle ring = ring_of(comp.type);
    const std::size_t order = series_order(comp.dim());
    switch (comp.type) {
        case ComponentType::Point: {
            if (!std::holds_alternative<PointNormal>(comp.normal)) mismatch(comp);
            std::int64_t prod = 1;
            for (int w : comp.weights) prod *= w;
            return LaurentSeries::scalar(ring, Rational(prod), 4, order);
        }
        case ComponentType::CP1: {
            const auto* s = std::get_if<SurfaceNormal>(&comp.normal);
            if (!s) mismatch(comp);
            LaurentSeries e = LaurentSeries::scalar(ring, 1, 0, order);
            for (const auto& sm : s->summands)
                e = e * LaurentSeries::linear_factor(ring, sm.weight, h_multiple(ring, sm.degree), order);
            return e;
        }
        case ComponentType::CP2:
        case ComponentType::P1xP1: {
            if (const auto* x = std::get_if<FourDimExtremal>(&comp.normal)) {
                if (comp.type != ComponentType::CP2) mismatch(comp);
                return equivariant_euler_fourdim(*x, nonzero_sign(comp.weights));
            }
            const auto* sp = std::get_if<FourDimSplit>(&comp.normal);
            if (!sp) mismatch(comp);
            return LaurentSeries::linear_factor(ring, -1, degree_two(comp.type, sp->negative), order) *
                   LaurentSeries::linear_factor(ring, 1, degree_two(comp.type, sp->positive), order);
        }
        case ComponentType::CP3: {
            const auto* s6 = std::get_if<SixDim>(&comp.normal);
            if (!s6) mismatch(comp);
            return LaurentSeries::linear_factor(ring, nonzero_sign(comp.weights), h_multiple(ring, s6->m), order);
        }
    }
    mismatch(comp);
}

std::array<std::int64_t, 2> omega_coordinates(const FixedComponent& comp) {
    const auto base = c1_of(comp.type);
    switch (comp.type) {
        case ComponentType::Point: return {0, 0};
        case ComponentType::CP1: {
            const auto* s = std::get_if<SurfaceNormal>(&comp.normal);
            if (!s) mismatch(comp);
            std::int64_t sum = 0;
            for (const auto& sm : s->summands) sum += sm.degree;
            return {base[0] + sum, 0};
        }
        case ComponentType::CP2:
        case ComponentType::P1xP1: {
            if (const auto* x = std::get_if<FourDimExtremal>(&comp.normal)) return {base[0] + x->c1, 0};
            const auto* sp = std::get_if<FourDimSplit>(&comp.normal);
            if (!sp) mismatch(comp);
            if (comp.type == ComponentType::CP2) return {base[0] + sp->negative[0] + sp->positive[0], 0};
            return {base[0] + sp->negative[0] + sp->positive[0], base[1] + sp->negative[1] + sp->positive[1]};
        }
        case ComponentType::CP3: {
            const auto* s6 = std::get_if<SixDim>(&comp.normal);
            if (!s6) mismatch(comp);
            return {base[0] + s6->m, 0};
        }
    }
    return {0, 0};
}

RingClass restricted_omega(const FixedComponent& comp) {
    if (comp.type == ComponentType::Point) return RingClass::zero(ring_point());
    return degree_two(comp.type, omega_coordinates(comp));
}

std::int64_t contribution_isolated(int lambda) {
    if (lambda < 0 || lambda > 4) throw std::invalid_argument("index out of range");
    return lambda % 2 == 0 ? 1 : -1;
}

std::int64_t contribution_surface(int lambda, const SurfaceNormal& nb) {
    int negatives = 0;
    std::int64_t signed_sum = 0;
    for (const auto& s : nb.summands) {
        if (s.weight != 1 && s.weight != -1) throw std::invalid_argument("surface summand weight must be +-1");
        if (s.weight < 0) ++negatives;
        signed_sum += s.weight * s.degree;
    }
    if (negatives != lambda) throw std::invalid_argument("surface labels disagree with the index");
    return (lambda % 2 == 0 ? -1 : 1) * signed_sum;
}

std::int64_t contribution_fourdim_extremal(const FourDimExtremal& nb) { return nb.c1 * nb.c1 - nb.c2; }

std::int64_t pairing(ComponentType base, const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b) {
    if (base == ComponentType::P1xP1) return a[0] * b[1] + a[1] * b[0];
    return a[0] * b[0];
}

std::int64_t contribution_split(ComponentType base, const FourDimSplit& nb) {
    const auto& u = nb.negative;
    const auto& v = nb.positive;
    return -(pairing(base, u, u) - pairing(base, u, v) + pairing(base, v, v));
}

std::int64_t contribution_sixdim(const SixDim& nb) { return -nb.m * nb.m * nb.m; }

std::int64_t contribution(const FixedComponent& comp) {
    return std::visit(
        [&comp](const auto& n) -> std::int64_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PointNormal>) {
                if (comp.type != ComponentType::Point) mismatch(comp);
                return contribution_isolated(comp.lambda());
            } else if constexpr (std::is_same_v<T, SurfaceNormal>) {
                if (comp.type != ComponentType::CP1) mismatch(comp);
                return contribution_surface(comp.lambda(), n);
            } else if constexpr (std::is_same_v<T, FourDimExtremal>) {
                if (comp.type != ComponentType::CP2) mismatch(comp);
                return contribution_fourdim_extremal(n);
            } else if constexpr (std::is_same_v<T, FourDimSplit>) {
                if (comp.dim() != 4) mismatch(comp);
                return contribution_split(comp.type, n);
            } else {
                if (comp.type != ComponentType::CP3) mismatch(comp);
                return contribution_sixdim(n);
            }
        },
        comp.normal);
}

Rational contribution_series_oracle(const FixedComponent& comp) {
    const LaurentSeries inv = equivariant_euler(comp).inverse();
    return integrate_scalar(inv.coefficient(-4));
}

Rational abbv_sum(const FixedPointData& data) {
    Rational total = 0;
    for (const auto& c : data.components) total += contribution(c);
    return total;
}

}  // namespace semifree
