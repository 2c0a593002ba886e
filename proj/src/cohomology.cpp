#include "semifree/cohomology.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace semifree {

namespace {

std::vector<Generator> generators_for(RingFamily family) {
    switch (family) {
        case RingFamily::Point: return {};
        case RingFamily::ProjectiveSpace: return {{"h", 2}};
        case RingFamily::P1xP1: return {{"x", 2}, {"y", 2}};
        case RingFamily::Projectivized: return {{"eta", 2}, {"xi", 2}};
    }
    return {};
}

// Basis monomials in increasing degree.
std::vector<Monomial> basis_for(RingFamily family, std::int64_t parameter) {
    switch (family) {
        case RingFamily::Point: return {{0, 0}};
        case RingFamily::ProjectiveSpace: {
            std::vector<Monomial> out;
            for (int e = 0; e <= parameter; ++e) out.push_back({e, 0});
            return out;
        }
        case RingFamily::P1xP1: return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        case RingFamily::Projectivized: return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
    }
    return {};
}

int top_degree_for(RingFamily family, std::int64_t parameter) {
    switch (family) {
        case RingFamily::Point: return 0;
        case RingFamily::ProjectiveSpace: return 2 * static_cast<int>(parameter);
        case RingFamily::P1xP1: return 4;
        case RingFamily::Projectivized: return 6;
    }
    return 0;
}

void accumulate(GradedRing::Combination& into, const GradedRing::Combination& from, std::int64_t scale) {
    for (const auto& [idx, c] : from) {
        bool found = false;
        for (auto& [j, d] : into) {
            if (j == idx) {
                d += scale * c;
                found = true;
                break;
            }
        }
        if (!found) into.emplace_back(idx, scale * c);
    }
    std::erase_if(into, [](const auto& p) { return p.second == 0; });
}

}  // namespace

GradedRing::GradedRing(RingFamily family, std::int64_t parameter)
    : family_(family),
      parameter_(parameter),
      generators_(generators_for(family)),
      top_degree_(top_degree_for(family, parameter)),
      basis_(basis_for(family, parameter)) {
    for (const auto& m : basis_) basis_degree_.push_back(2 * (m[0] + m[1]));
    integral_.assign(basis_.size(), 0);
    integral_.back() = 1;  // the last basis element is the chosen top-degree generator
    table_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        table_[i].resize(basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j)
            table_[i][j] = reduce({basis_[i][0] + basis_[j][0], basis_[i][1] + basis_[j][1]});
    }
}

GradedRing::Combination GradedRing::reduce(const Monomial& m) const {
    const int deg = 2 * (m[0] + m[1]);
    if (m[0] < 0 || m[1] < 0) throw std::invalid_argument("negative exponent");
    if (deg > top_degree_) return {};
    auto lookup = [this](const Monomial& mm) -> Combination {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == mm) return {{i, 1}};
        return {};
    };
    switch (family_) {
        case RingFamily::Point:
        case RingFamily::ProjectiveSpace:
        case RingFamily::P1xP1:
            // Every non-basis monomial vanishes by a monomial relation.
            return lookup(m);
        case RingFamily::Projectivized: {
            if (m[1] >= 2) {
                // xi^2 = eta*xi - k2*eta^2
                Combination out = reduce({m[0] + 1, m[1] - 1});
                accumulate(out, reduce({m[0] + 2, m[1] - 2}), -parameter_);
                return out;
            }
            if (m[0] >= 3) return {};
            return lookup(m);
        }
    }
    return {};
}

std::size_t GradedRing::generator_index(const std::string& name) const {
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (generators_[g].name == name) {
            Monomial m{0, 0};
            m[g] = 1;
            for (std::size_t i = 0; i < basis_.size(); ++i)
                if (basis_[i] == m) return i;
        }
    }
    throw std::invalid_argument("ring " + this->name() + " has no generator '" + name + "'");
}

std::string GradedRing::monomial_name(std::size_t basis_index) const {
    const Monomial& m = basis_[basis_index];
    std::string out;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (m[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += generators_[g].name;
        if (m[g] > 1) out += "^" + std::to_string(m[g]);
    }
    return out.empty() ? "1" : out;
}

std::string GradedRing::name() const {
    switch (family_) {
        case RingFamily::Point: return "pt";
        case RingFamily::ProjectiveSpace: return "CP" + std::to_string(parameter_);
        case RingFamily::P1xP1: return "CP1xCP1";
        case RingFamily::Projectivized: return "P(N)[k2=" + std::to_string(parameter_) + "]";
    }
    return "?";
}

RingHandle ring_point() {
    static const RingHandle ring = std::make_shared<const GradedRing>(RingFamily::Point, 0);
    return ring;
}

RingHandle ring_cpn(int n) {
    if (n < 1 || n > 4) throw std::out_of_range("ring_cpn: n must be in [1,4], got " + std::to_string(n));
    static const std::array<RingHandle, 4> rings = {
        std::make_shared<const GradedRing>(RingFamily::ProjectiveSpace, 1),
        std::make_shared<const GradedRing>(RingFamily::ProjectiveSpace, 2),
        std::make_shared<const GradedRing>(RingFamily::ProjectiveSpace, 3),
        std::make_shared<const GradedRing>(RingFamily::ProjectiveSpace, 4)};
    return rings[static_cast<std::size_t>(n - 1)];
}

RingHandle ring_p1xp1() {
    static const RingHandle ring = std::make_shared<const GradedRing>(RingFamily::P1xP1, 0);
    return ring;
}

RingHandle ring_projectivized(std::int64_t k2) {
    return std::make_shared<const GradedRing>(RingFamily::Projectivized, k2);
}

// ---------------------------------------------------------------------------

RingClass::RingClass(RingHandle ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
    coeffs_.resize(ring_->rank());
}

RingClass RingClass::one(RingHandle ring) {
    RingClass out(std::move(ring));
    out.coeffs_[0] = Polynomial(1);
    return out;
}

RingClass RingClass::generator(RingHandle ring, const std::string& name) {
    const std::size_t idx = ring->generator_index(name);
    RingClass out(std::move(ring));
    out.coeffs_[idx] = Polynomial(1);
    return out;
}

RingClass RingClass::monomial(RingHandle ring, const Monomial& m, const Polynomial& coeff) {
    RingClass out(ring);
    for (const auto& [idx, c] : ring->reduce(m)) out.coeffs_[idx] += coeff * Rational(c);
    return out;
}

RingClass RingClass::linear(RingHandle ring, const std::vector<std::int64_t>& coeffs) {
    if (coeffs.size() != ring->generators().size())
        throw std::invalid_argument("linear class over " + ring->name() + " needs " +
                                    std::to_string(ring->generators().size()) + " coefficients");
    RingClass out(ring);
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
        Monomial m{0, 0};
        m[g] = 1;
        out += monomial(ring, m, Polynomial(coeffs[g]));
    }
    return out;
}

bool RingClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

RingClass RingClass::homogeneous_part(int degree) const {
    RingClass out(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (ring_->basis_degree(i) == degree) out.coeffs_[i] = coeffs_[i];
    return out;
}

void RingClass::require_same_ring(const RingClass& o) const {
    if (!ring_->same_as(*o.ring_))
        throw std::invalid_argument("ring mismatch: " + ring_->name() + " vs " + o.ring_->name());
}

RingClass& RingClass::operator+=(const RingClass& o) {
    require_same_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

RingClass& RingClass::operator-=(const RingClass& o) {
    require_same_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

RingClass& RingClass::operator*=(const Polynomial& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RingClass RingClass::operator-() const {
    RingClass out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RingClass operator*(const RingClass& a, const RingClass& b) {
    a.require_same_ring(b);
    RingClass out(a.ring_);
    const GradedRing& r = *a.ring_;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.rank(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            const Polynomial prod = a.coeffs_[i] * b.coeffs_[j];
            for (const auto& [k, c] : r.product(i, j)) out.coeffs_[k] += prod * Rational(c);
        }
    }
    return out;
}

bool operator==(const RingClass& a, const RingClass& b) {
    return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_;
}

std::string RingClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string name = ring_->monomial_name(i);
        if (coeffs_[i] == Polynomial(1) && name != "1") {
            os << name;
        } else {
            const std::string c = coeffs_[i].str();
            const bool wrap = !coeffs_[i].is_constant() || c.find(' ') != std::string::npos;
            os << (wrap ? "(" + c + ")" : c);
            if (name != "1") os << "*" << name;
        }
    }
    return first ? "0" : os.str();
}

RingClass mul(const RingClass& a, const RingClass& b) { return a * b; }

RingClass pow(const RingClass& a, unsigned n) {
    RingClass out = RingClass::one(a.ring());
    for (unsigned i = 0; i < n; ++i) out = out * a;
    return out;
}

Polynomial integrate(const RingClass& a) {
    const GradedRing& r = *a.ring();
    Polynomial out;
    for (std::size_t i = 0; i < r.rank(); ++i)
        if (r.basis_degree(i) == r.top_degree() && r.basis_integral(i) != 0)
            out += a.coefficient(i) * Rational(r.basis_integral(i));
    return out;
}

Rational integrate_scalar(const RingClass& a) {
    const Polynomial p = integrate(a);
    if (!p.is_constant()) throw std::domain_error("integral depends on the formal variable: " + p.str());
    return p.coeff(0);
}

// ---------------------------------------------------------------------------

ChernTotal::ChernTotal(RingHandle ring, std::vector<RingClass> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    const std::size_t n = static_cast<std::size_t>(ring_->top_degree() / 2) + 1;
    if (terms_.empty()) terms_.push_back(RingClass::one(ring_));
    if (!(terms_[0] == RingClass::one(ring_))) throw std::invalid_argument("total Chern class must have c_0 = 1");
    while (terms_.size() < n) terms_.push_back(RingClass::zero(ring_));
    terms_.resize(n, RingClass::zero(ring_));
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].homogeneous_part(static_cast<int>(2 * i)) == terms_[i]))
            throw std::invalid_argument("c_" + std::to_string(i) + " is not of degree " + std::to_string(2 * i));
    }
}

ChernTotal ChernTotal::line_bundle(const RingClass& c1) {
    return ChernTotal(c1.ring(), {RingClass::one(c1.ring()), c1});
}

ChernTotal ChernTotal::trivial(RingHandle ring) { return ChernTotal(ring, {RingClass::one(ring)}); }

RingClass ChernTotal::operator[](std::size_t i) const {
    return i < terms_.size() ? terms_[i] : RingClass::zero(ring_);
}

RingClass ChernTotal::total() const {
    RingClass out = RingClass::zero(ring_);
    for (const auto& t : terms_) out += t;
    return out;
}

bool operator==(const ChernTotal& a, const ChernTotal& b) {
    return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

std::string ChernTotal::str() const { return total().str(); }

ChernTotal whitney_sum(const ChernTotal& a, const ChernTotal& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("whitney_sum: ring mismatch");
    const RingClass prod = a.total() * b.total();
    std::vector<RingClass> terms;
    for (std::size_t i = 0; i < a.size(); ++i) terms.push_back(prod.homogeneous_part(static_cast<int>(2 * i)));
    return ChernTotal(a.ring(), std::move(terms));
}

ChernTotal whitney_quotient(const ChernTotal& a, const ChernTotal& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("whitney_quotient: ring mismatch");
    // Solve degree by degree: c_i = a_i - sum_{j<i} c_j b_{i-j}.
    std::vector<RingClass> c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RingClass ci = a[i];
        for (std::size_t j = 0; j < i; ++j) ci -= c[j] * b[i - j];
        c.push_back(ci);
    }
    return ChernTotal(a.ring(), std::move(c));
}

}  // namespace semifree
