// Fixed-point data of a semi-free circle action on a closed symplectic
// 8-manifold: component types, weights and normal bundle Chern data.
#pragma once

#include "semifree/cohomology.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semifree {

enum class ComponentType { Point, CP1, CP2, P1xP1, CP3 };

int dimension(ComponentType t);
/// Betti numbers b_0..b_dim of the component.
const std::vector<int>& betti(ComponentType t);
int betti_at(ComponentType t, int i);
RingHandle ring_of(ComponentType t);
/// Rank of H^2, i.e. the number of coordinates of a degree-2 class.
int h2_rank(ComponentType t);
/// Coordinates of c_1 of the component itself.
std::array<std::int64_t, 2> c1_of(ComponentType t);
std::string type_name(ComponentType t);
std::optional<ComponentType> parse_type(const std::string& s);

/// The four weights at a component, kept sorted ascending.
using WeightSignature = std::array<int, 4>;

struct PointNormal {
    friend bool operator==(const PointNormal&, const PointNormal&) = default;
};

struct Summand {
    std::int64_t degree = 0;
    int weight = 1;
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Three line bundles over a fixed sphere, negative-weight summands first.
struct SurfaceNormal {
    std::array<Summand, 3> summands{};
    friend bool operator==(const SurfaceNormal&, const SurfaceNormal&) = default;
};

/// Rank two normal bundle of an extremal plane: c1 = c1_coeff * h, c2 = c2_coeff * h^2.
struct FourDimExtremal {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    friend bool operator==(const FourDimExtremal&, const FourDimExtremal&) = default;
};

/// L_- (+) L_+ over a four-dimensional component with weights {-1,+1}.
/// Classes are coordinates in the H^2 basis of the base (h on CP2, x,y on
/// CP1xCP1); unused coordinates stay zero.
struct FourDimSplit {
    std::array<std::int64_t, 2> negative{};
    std::array<std::int64_t, 2> positive{};
    friend bool operator==(const FourDimSplit&, const FourDimSplit&) = default;
};

/// Line bundle over CP3 with c1 = m h.
struct SixDim {
    std::int64_t m = 0;
    friend bool operator==(const SixDim&, const SixDim&) = default;
};

using NormalBundleData = std::variant<PointNormal, SurfaceNormal, FourDimExtremal, FourDimSplit, SixDim>;

std::string normal_kind(const NormalBundleData& n);

struct FixedComponent {
    ComponentType type = ComponentType::Point;
    WeightSignature weights{};
    NormalBundleData normal = PointNormal{};

    int dim() const { return dimension(type); }
    /// Number of negative weights.
    int lambda() const;
    /// H(F) = -(sum of weights).
    int level() const;
    int zero_weights() const;
    bool is_local_min() const;  // no negative weights
    bool is_local_max() const;  // no positive weights

    friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

struct FixedPointData {
    std::string name;
    std::vector<FixedComponent> components;

    friend bool operator==(const FixedPointData& a, const FixedPointData& b) { return a.components == b.components; }
};

WeightSignature sorted_weights(WeightSignature w);
/// Sorts summands negative weight first, then by degree.
SurfaceNormal normalized(SurfaceNormal s);

// Builders used by the catalog, the enumerator and tests.
FixedComponent make_point(int lambda);
FixedComponent make_surface(std::array<Summand, 3> summands);
FixedComponent make_plane_extremal(int sign, std::int64_t c1, std::int64_t c2);
FixedComponent make_split(ComponentType base, std::array<std::int64_t, 2> negative, std::array<std::int64_t, 2> positive);
FixedComponent make_sixdim(int sign, std::int64_t m);

/// Index of the unique component with lambda 0, if any.
std::optional<std::size_t> min_index(const FixedPointData& d);
/// Index of the unique component that is a local maximum of top level, if any.
std::optional<std::size_t> max_index(const FixedPointData& d);

std::string describe(const FixedComponent& c);

}  // namespace semifree
