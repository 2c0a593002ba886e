// Truncated graded cohomology rings of the few spaces that occur as fixed
// components (and as reduced spaces near an extremal plane), with exact
// integration and total Chern class calculus.
//
// Coefficients are polynomials in one formal variable x over the rationals,
// so cohomology classes like 2*eta + x*xi can be manipulated symbolically.
// Plain integer classes are the constant-polynomial case.
#pragma once

#include "semifree/polynomial.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace semifree {

enum class RingFamily { Point, ProjectiveSpace, P1xP1, Projectivized };

/// Exponent vector over at most two generators.
using Monomial = std::array<int, 2>;

struct Generator {
    std::string name;
    int degree;  // real degree, even
};

class GradedRing {
public:
    /// Sparse linear combination of basis indices with integer coefficients.
    using Combination = std::vector<std::pair<std::size_t, std::int64_t>>;

    RingFamily family() const { return family_; }
    /// n for CP^n, k2 for the projectivized bundle, 0 otherwise.
    std::int64_t parameter() const { return parameter_; }
    const std::vector<Generator>& generators() const { return generators_; }
    int top_degree() const { return top_degree_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    int basis_degree(std::size_t i) const { return basis_degree_[i]; }
    std::int64_t basis_integral(std::size_t i) const { return integral_[i]; }
    const Combination& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

    /// Rewrites an arbitrary monomial in the reduced basis.
    Combination reduce(const Monomial& m) const;
    std::size_t generator_index(const std::string& name) const;
    std::string monomial_name(std::size_t basis_index) const;
    std::string name() const;

    bool same_as(const GradedRing& o) const { return family_ == o.family_ && parameter_ == o.parameter_; }

    // Use the ring_* factories.
    GradedRing(RingFamily family, std::int64_t parameter);

private:
    RingFamily family_;
    std::int64_t parameter_;
    std::vector<Generator> generators_;
    int top_degree_ = 0;
    std::vector<Monomial> basis_;
    std::vector<int> basis_degree_;
    std::vector<std::int64_t> integral_;
    std::vector<std::vector<Combination>> table_;
};

using RingHandle = std::shared_ptr<const GradedRing>;

RingHandle ring_point();
/// Z[h]/(h^{n+1}) with integral of h^n equal to 1, for 1 <= n <= 4.
RingHandle ring_cpn(int n);
/// Z[x,y]/(x^2, y^2) with integral of xy equal to 1.
RingHandle ring_p1xp1();
/// Z[eta,xi]/(eta^3, xi^2 - eta*xi + k2*eta^2), the projectivization of a rank
/// two bundle over CP^2 with total Chern class 1 - h + k2 h^2.
RingHandle ring_projectivized(std::int64_t k2);

/// A class stored reduced, dense over the ring basis.
class RingClass {
public:
    explicit RingClass(RingHandle ring);

    static RingClass zero(RingHandle ring) { return RingClass(std::move(ring)); }
    static RingClass one(RingHandle ring);
    static RingClass generator(RingHandle ring, const std::string& name);
    static RingClass monomial(RingHandle ring, const Monomial& m, const Polynomial& coeff = Polynomial(1));
    /// Degree-2 class sum_i coeffs[i] * generator_i.
    static RingClass linear(RingHandle ring, const std::vector<std::int64_t>& coeffs);

    const RingHandle& ring() const { return ring_; }
    const Polynomial& coefficient(std::size_t basis_index) const { return coeffs_[basis_index]; }
    bool is_zero() const;

    /// Degree-`degree` homogeneous component.
    RingClass homogeneous_part(int degree) const;
    RingClass top_part() const { return homogeneous_part(ring_->top_degree()); }
    /// Coefficient of the constant basis element.
    const Polynomial& constant_term() const { return coeffs_.front(); }

    RingClass& operator+=(const RingClass& o);
    RingClass& operator-=(const RingClass& o);
    RingClass& operator*=(const Polynomial& s);
    friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
    friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
    friend RingClass operator*(RingClass a, const Polynomial& s) { return a *= s; }
    friend RingClass operator*(const Polynomial& s, RingClass a) { return a *= s; }
    friend RingClass operator*(const RingClass& a, const RingClass& b);
    RingClass operator-() const;

    friend bool operator==(const RingClass& a, const RingClass& b);

    std::string str() const;

private:
    void require_same_ring(const RingClass& o) const;
    RingHandle ring_;
    std::vector<Polynomial> coeffs_;
};

RingClass mul(const RingClass& a, const RingClass& b);
RingClass pow(const RingClass& a, unsigned n);

/// Pairs the top-degree part with the fundamental class. Lower-degree parts
/// integrate to zero.
Polynomial integrate(const RingClass& a);
/// As integrate(), but the result must not depend on the formal variable.
Rational integrate_scalar(const RingClass& a);

/// Total Chern class c_0 + c_1 + ... truncated at the base's top degree.
class ChernTotal {
public:
    ChernTotal(RingHandle ring, std::vector<RingClass> terms);

    /// 1 + c for a line bundle with first Chern class c.
    static ChernTotal line_bundle(const RingClass& c1);
    static ChernTotal trivial(RingHandle ring);

    const RingHandle& ring() const { return ring_; }
    /// c_i; zero beyond the stored range.
    RingClass operator[](std::size_t i) const;
    std::size_t size() const { return terms_.size(); }
    RingClass total() const;

    friend bool operator==(const ChernTotal& a, const ChernTotal& b);
    std::string str() const;

private:
    RingHandle ring_;
    std::vector<RingClass> terms_;
};

ChernTotal whitney_sum(const ChernTotal& a, const ChernTotal& b);
/// The unique C with whitney_sum(C, b) == a (b is a unit since c_0 = 1).
ChernTotal whitney_quotient(const ChernTotal& a, const ChernTotal& b);

}  // namespace semifree
