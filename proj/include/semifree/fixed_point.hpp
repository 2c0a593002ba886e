// Checks on fixed-point data that need nothing beyond weights and Betti
// numbers: Kirwan localization, normalization, the signature identity, and
// FP-equivalence.
#pragma once

#include "semifree/report.hpp"
#include "semifree/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace semifree {

namespace anchor {
inline constexpr const char* kSemiFree = "semi-free weights";
inline constexpr const char* kTangent = "zero weights span the tangent space";
inline constexpr const char* kNormal = "normal bundle matches component";
inline constexpr const char* kKirwan = "Kirwan Betti localization";
inline constexpr const char* kPoincare = "Poincare duality of M";
inline constexpr const char* kPowers = "nonvanishing powers of [omega]";
inline constexpr const char* kLevels = "weight-sum level normalization";
inline constexpr const char* kAbbv = "ABBV localization of 1";
inline constexpr const char* kSignature = "signature equals self-intersection of the fixed set";
}  // namespace anchor

using BettiVector = std::array<int, 9>;

/// b_i(M) = sum_F b_{i - 2 lambda_F}(F).
int kirwan_betti(const FixedPointData& data, int i);
BettiVector kirwan_betti_vector(const FixedPointData& data);

/// Number of isolated points with the given index.
int count_points(const FixedPointData& data, int lambda);

/// Structural checks: semi-free weights, tangent dimension, normal variant,
/// unique extrema, b2 = 1, Poincare duality, level ordering.
ConstraintReport validate(const FixedPointData& data);

/// Normal-variant compatibility of one component; empty when fine.
std::string normal_mismatch(const FixedComponent& comp);

/// Self-intersection of M^{S^1} in the middle dimension.
std::int64_t self_intersection(const FixedPointData& data);
Check signature_check(const FixedPointData& data);

struct DimPair {
    int d1 = 0;
    int d2 = 0;
    bool reversed = false;  // true if the raw data had dim(min) > dim(max)
    friend bool operator==(const DimPair&, const DimPair&) = default;
};

/// Requires a unique minimum and maximum.
DimPair dim_pair(const FixedPointData& data);
FixedPointData reverse_action(const FixedPointData& data);
/// The data itself, or its reversal when dim(min) > dim(max).
FixedPointData normalized_orientation(const FixedPointData& data);

/// Invariant description of one component, used as an FP-equivalence key.
std::string canonical_key(const FixedComponent& comp);
/// Sorted component keys.
std::vector<std::string> canonical_keys(const FixedPointData& data);
bool fp_equivalent(const FixedPointData& a, const FixedPointData& b);

}  // namespace semifree
