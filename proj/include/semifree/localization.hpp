// Equivariant Euler classes of fixed-component normal bundles and their
// localization contributions to the integral of 1.
#pragma once

#include "semifree/cohomology.hpp"
#include "semifree/types.hpp"

#include <cstdint>
#include <vector>

namespace semifree {

/// sum_j terms[j] * t^(top_power - j), coefficients in a component's ring.
/// Only `order` terms are kept; since ring coefficients are nilpotent past the
/// component's dimension this is exact once order exceeds dim/2 + 1.
class LaurentSeries {
public:
    LaurentSeries(RingHandle ring, int top_power, std::vector<RingClass> terms);

    /// w*t + c, padded with zero terms to `order`.
    static LaurentSeries linear_factor(const RingHandle& ring, int weight, const RingClass& c, std::size_t order);
    /// t^2 + b*t + c, padded to `order`.
    static LaurentSeries quadratic(const RingHandle& ring, const RingClass& b, const RingClass& c, std::size_t order);
    /// s * t^power.
    static LaurentSeries scalar(const RingHandle& ring, const Rational& s, int power, std::size_t order);

    const RingHandle& ring() const { return ring_; }
    int top_power() const { return top_power_; }
    std::size_t order() const { return terms_.size(); }
    /// Coefficient of t^power (zero outside the stored window).
    RingClass coefficient(int power) const;

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator*(const RingClass& c) const;
    /// Requires the leading coefficient to be a nonzero rational constant.
    LaurentSeries inverse() const;

    std::string str() const;

private:
    RingHandle ring_;
    int top_power_;
    std::vector<RingClass> terms_;
};

/// Terms kept for a component of real dimension dim.
std::size_t series_order(int dim);

/// t^2 + sign*k'*h*t + c2*h^2 over CP2.
LaurentSeries equivariant_euler_fourdim(const FourDimExtremal& nb, int sign);
/// e^{S^1}(N_F) as a product of per-summand factors.
LaurentSeries equivariant_euler(const FixedComponent& comp);

/// Coordinates of [omega]|_F = c1(M)|_F = c1(F) + c1(N_F) in the H^2 basis.
std::array<std::int64_t, 2> omega_coordinates(const FixedComponent& comp);
RingClass restricted_omega(const FixedComponent& comp);

std::int64_t contribution_isolated(int lambda);
std::int64_t contribution_surface(int lambda, const SurfaceNormal& nb);
std::int64_t contribution_fourdim_extremal(const FourDimExtremal& nb);
/// -(L-^2 - L-.L+ + L+^2) over the base.
std::int64_t contribution_split(ComponentType base, const FourDimSplit& nb);
std::int64_t contribution_sixdim(const SixDim& nb);

/// Closed-form contribution of one component.
std::int64_t contribution(const FixedComponent& comp);
/// Same quantity from inverting e^{S^1}(N_F) as a series and integrating.
Rational contribution_series_oracle(const FixedComponent& comp);
Rational abbv_sum(const FixedPointData& data);

/// Intersection pairing of two degree-2 classes on a four-dimensional base.
std::int64_t pairing(ComponentType base, const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b);

}  // namespace semifree
