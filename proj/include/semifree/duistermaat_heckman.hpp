// Duistermaat-Heckman polynomials: DH(c) = integral over the reduced space
// M_c of [omega_c]^3. Volumes are integrals of omega^4 = 4 * integral DH dc.
#pragma once

#include "semifree/fixed_point.hpp"
#include "semifree/polynomial.hpp"
#include "semifree/report.hpp"
#include "semifree/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semifree {

namespace anchor {
inline constexpr const char* kDhPositivity = "DH positivity on regular levels";
inline constexpr const char* kDhContinuity = "DH continuity across level zero";
inline constexpr const char* kDhVanishing = "DH vanishing above the maximum";
inline constexpr const char* kVolume = "volume by halves";
}  // namespace anchor

/// 12x + 6x^2 + (1 - k2)x^3: extremal CP2 with c(N) = 1 - h + k2 h^2, x the
/// distance from the extremal level.
Polynomial dh_near_cp2(std::int64_t k2);
/// The same cubic from integrating (2 eta + x xi)^3 in the projectivized ring.
Polynomial dh_from_ring(std::int64_t k2);
/// Extremal CP2 with c1(N) = c1*h, c2(N) = c2*h^2 (either end).
Polynomial dh_near_plane(std::int64_t c1, std::int64_t c2);

/// 4 * integral_0^2 dh_near_cp2(k2) = 176 - 16 k2.
Rational half_volume_cp2(std::int64_t k2);
/// Isolated minimum plus one index-one point: 240.
Rational half_volume_isolated_pair();

/// Residue term of one component as a polynomial in x = c - H(F):
/// 6 * integral_F Res_t e^{omega_F + x t} / e^{S^1}(N_F).
Polynomial component_dh_term(const FixedComponent& comp);

enum class DHSide { Below, Above };

struct DHPiece {
    Rational lo;
    Rational hi;
    Polynomial poly;  // in the absolute level c
    DHSide side;
};

/// Regular intervals cut at level zero. Pieces below zero are summed from the
/// minimum, pieces above zero from the maximum.
struct DHProfile {
    std::vector<DHPiece> pieces;
};

DHProfile dh_profile(const FixedPointData& data);
/// 4 * sum of piece integrals.
Rational profile_volume(const DHProfile& profile);

struct VolumeResult {
    std::optional<Rational> value;
    std::string pattern;
};

/// Closed-form total volume for the two patterns whose halves are covered:
/// (0,4) without a sphere, 416 - 16 b4, and (4,4), 352 - 16 b4, both with
/// c1(N) = -h on every plane.
VolumeResult total_volume(const FixedPointData& data);
Rational volume_zero_four_no_sphere(int b4);
Rational volume_four_four(int b4);

struct PositivityResult {
    bool ok = true;
    std::optional<std::size_t> piece;
    /// A point at or next to the first violation.
    std::optional<Rational> witness;
    std::string detail;
};

/// Exact test that p > 0 on the open interval (lo, hi).
PositivityResult positivity_on(const Polynomial& p, const Rational& lo, const Rational& hi);
PositivityResult positivity_check(const DHProfile& profile);
/// Distinct real roots of p in (lo, hi], by Sturm sequences. p(lo) != 0.
int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Does DH positivity allow this b4 in the shape? `split` gives (c2_min, c2_max) for (4,4).
Check b4_bound_check(int b4, const DimPair& shape, std::optional<std::pair<std::int64_t, std::int64_t>> split = {});

/// sum_F P_F(c - H(F)); zero for data that comes from a manifold.
Polynomial dh_global_residual(const FixedPointData& data);
Check dh_positivity(const FixedPointData& data);
/// Halves computed from opposite ends agree at level zero.
Check dh_continuity(const FixedPointData& data);
Check dh_vanishing(const FixedPointData& data);

}  // namespace semifree
