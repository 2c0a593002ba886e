// Constraint rules beyond localization, the admissible (d1,d2) shapes, and
// the exhaustive search over fixed-point data of a shape.
#pragma once

#include "semifree/duistermaat_heckman.hpp"
#include "semifree/fixed_point.hpp"
#include "semifree/report.hpp"
#include "semifree/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semifree {

namespace anchor {
inline constexpr const char* kIndex = "index from an extremal component";
inline constexpr const char* kIndexConsistency = "index agrees at both extremal components";
inline constexpr const char* kArea = "positive symplectic area on fixed components";
inline constexpr const char* kInteriorFourfold = "interior fourfold between isolated extrema";
inline constexpr const char* kSphereA = "sphere-map rule a: gradient spheres from index-two points";
inline constexpr const char* kSphereB = "sphere-map rule b: spheres from the minimum to a fourfold maximum";
inline constexpr const char* kSphereC = "sphere-map rule c: spheres between extrema";
inline constexpr const char* kSphereD = "sphere-map rule d: 3 a1 = 2 + a1 + a2 + a3";
inline constexpr const char* kIndexQuadric = "sphere index rule: interior fourfold forces index >= 4";
inline constexpr const char* kIndexOdd = "sphere index rule: interior sphere forces odd index";
inline constexpr const char* kIndexLow = "sphere index rule: interior index-one point forces index <= 2";
inline constexpr const char* kExtremalBetti = "extremal Betti bound";
inline constexpr const char* kForcedFourfold = "forced interior fourfold";
}  // namespace anchor

struct IndexResult {
    std::optional<int> value;
    bool lower_bound_only = false;  // the rule proves value <= iota; value is the reported iota
    std::string trace;
};

/// iota(M) read off an extremal component of positive dimension, or from the
/// interior fourfold when both extrema are points.
IndexResult index_from_extremal(const FixedPointData& data);

/// Positive area, index consistency, interior fourfold rule.
ConstraintReport structural_rules(const FixedPointData& data);
/// Sphere-map rules a) to d); inapplicable rules are reported as skipped.
ConstraintReport sphere_constraints(const FixedPointData& data);
ConstraintReport sphere_index_rules(const FixedPointData& data);

struct CheckOptions {
    bool strict_dh = false;  // add DH continuity and vanishing
};

/// Every check in order: validate, ABBV, signature, structural, sphere maps,
/// sphere index, DH. Stops after validate if the data is malformed.
ConstraintReport full_report(const FixedPointData& data, const CheckOptions& options = {});

struct ShapeVerdict {
    DimPair shape;
    bool admissible = true;
    std::string anchor;
    std::string reason;
};

/// All ten pairs d1 <= d2 in {0,2,4,6}, with the Kirwan computation that
/// rejects the inadmissible ones.
std::vector<ShapeVerdict> admissible_dim_pairs();
std::optional<ShapeVerdict> shape_verdict(const DimPair& shape);

struct EnumerateOptions {
    int b4_max = 30;
    int degree_box = 12;  // |a_k| and bidegree entries
    bool strict_dh = false;
};

struct FamilyMember {
    int n2 = 0;
    int b4 = 0;
    std::vector<std::int64_t> c2;  // per extremal plane, minimum first
    FixedPointData data;
};

struct Family {
    std::string key;
    std::string label;
    DimPair shape;
    std::optional<int> iota;
    std::vector<FamilyMember> members;  // sorted by (n2, c2)
    std::size_t representative = 0;
    ConstraintReport report;  // of the representative
    const FixedPointData& representative_data() const { return members[representative].data; }
};

struct EnumerationResult {
    DimPair shape;
    std::vector<Family> families;
    std::uint64_t candidates = 0;  // parameter assignments examined
};

/// Throws std::invalid_argument for an inadmissible shape.
EnumerationResult enumerate_case(const DimPair& shape, const EnumerateOptions& options = {});

}  // namespace semifree
