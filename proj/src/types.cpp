#include "semifree/types.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semifree {

int dimension(ComponentType t) {
    switch (t) {
        case ComponentType::Point: return 0;
        case ComponentType::CP1: return 2;
        case ComponentType::CP2:
        case ComponentType::P1xP1: return 4;
        case ComponentType::CP3: return 6;
    }
    return 0;
}

const std::vector<int>& betti(ComponentType t) {
    static const std::vector<int> pt{1};
    static const std::vector<int> cp1{1, 0, 1};
    static const std::vector<int> cp2{1, 0, 1, 0, 1};
    static const std::vector<int> p1p1{1, 0, 2, 0, 1};
    static const std::vector<int> cp3{1, 0, 1, 0, 1, 0, 1};
    switch (t) {
        case ComponentType::Point: return pt;
        case ComponentType::CP1: return cp1;
        case ComponentType::CP2: return cp2;
        case ComponentType::P1xP1: return p1p1;
        case ComponentType::CP3: return cp3;
    }
    return pt;
}

int betti_at(ComponentType t, int i) {
    const auto& b = betti(t);
    if (i < 0 || i >= static_cast<int>(b.size())) return 0;
    return b[static_cast<std::size_t>(i)];
}

RingHandle ring_of(ComponentType t) {
    switch (t) {
        case ComponentType::Point: return ring_point();
        case ComponentType::CP1: return ring_cpn(1);
        case ComponentType::CP2: return ring_cpn(2);
        case ComponentType::P1xP1: return ring_p1xp1();
        case ComponentType::CP3: return ring_cpn(3);
    }
    return ring_point();
}

int h2_rank(ComponentType t) {
    switch (t) {
        case ComponentType::Point: return 0;
        case ComponentType::P1xP1: return 2;
        default: return 1;
    }
}

std::array<std::int64_t, 2> c1_of(ComponentType t) {
    switch (t) {
        case ComponentType::Point: return {0, 0};
        case ComponentType::CP1: return {2, 0};
        case ComponentType::CP2: return {3, 0};
        case ComponentType::P1xP1: return {2, 2};
        case ComponentType::CP3: return {4, 0};
    }
    return {0, 0};
}

std::string type_name(ComponentType t) {
    switch (t) {
        case ComponentType::Point: return "point";
        case ComponentType::CP1: return "cp1";
        case ComponentType::CP2: return "cp2";
        case ComponentType::P1xP1: return "p1xp1";
        case ComponentType::CP3: return "cp3";
    }
    return "?";
}

std::optional<ComponentType> parse_type(const std::string& s) {
    for (auto t : {ComponentType::Point, ComponentType::CP1, ComponentType::CP2, ComponentType::P1xP1,
                   ComponentType::CP3})
        if (type_name(t) == s) return t;
    return std::nullopt;
}

std::string normal_kind(const NormalBundleData& n) {
    struct V {
        std::string operator()(const PointNormal&) const { return "point"; }
        std::string operator()(const SurfaceNormal&) const { return "surface"; }
        std::string operator()(const FourDimExtremal&) const { return "fourdim_extremal"; }
        std::string operator()(const FourDimSplit&) const { return "fourdim_split"; }
        std::string operator()(const SixDim&) const { return "sixdim"; }
    };
    return std::visit(V{}, n);
}

int FixedComponent::lambda() const {
    return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int w) { return w < 0; }));
}

int FixedComponent::level() const {
    int s = 0;
    for (int w : weights) s += w;
    return -s;
}

int FixedComponent::zero_weights() const {
    return static_cast<int>(std::count(weights.begin(), weights.end(), 0));
}

bool FixedComponent::is_local_min() const {
    return std::none_of(weights.begin(), weights.end(), [](int w) { return w < 0; });
}

bool FixedComponent::is_local_max() const {
    return std::none_of(weights.begin(), weights.end(), [](int w) { return w > 0; });
}

WeightSignature sorted_weights(WeightSignature w) {
    std::sort(w.begin(), w.end());
    return w;
}

SurfaceNormal normalized(SurfaceNormal s) {
    std::sort(s.summands.begin(), s.summands.end(), [](const Summand& a, const Summand& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.degree > b.degree;
    });
    return s;
}

FixedComponent make_point(int lambda) {
    if (lambda < 0 || lambda > 4) throw std::invalid_argument("point index out of range");
    FixedComponent c;
    c.type = ComponentType::Point;
    for (int i = 0; i < 4; ++i) c.weights[static_cast<std::size_t>(i)] = i < lambda ? -1 : 1;
    return c;
}

FixedComponent make_surface(std::array<Summand, 3> summands) {
    FixedComponent c;
    c.type = ComponentType::CP1;
    SurfaceNormal s{summands};
    s = normalized(s);
    c.weights = sorted_weights({0, s.summands[0].weight, s.summands[1].weight, s.summands[2].weight});
    c.normal = s;
    return c;
}

FixedComponent make_plane_extremal(int sign, std::int64_t c1, std::int64_t c2) {
    FixedComponent c;
    c.type = ComponentType::CP2;
    c.weights = sorted_weights({0, 0, sign, sign});
    c.normal = FourDimExtremal{c1, c2};
    return c;
}

FixedComponent make_split(ComponentType base, std::array<std::int64_t, 2> negative, std::array<std::int64_t, 2> positive) {
    FixedComponent c;
    c.type = base;
    c.weights = {-1, 0, 0, 1};
    c.normal = FourDimSplit{negative, positive};
    return c;
}

FixedComponent make_sixdim(int sign, std::int64_t m) {
    FixedComponent c;
    c.type = ComponentType::CP3;
    c.weights = sorted_weights({0, 0, 0, sign});
    c.normal = SixDim{m};
    return c;
}

std::optional<std::size_t> min_index(const FixedPointData& d) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (d.components[i].lambda() != 0) continue;
        if (!best || d.components[i].level() < d.components[*best].level()) best = i;
    }
    return best;
}

std::optional<std::size_t> max_index(const FixedPointData& d) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (!d.components[i].is_local_max()) continue;
        if (!best || d.components[i].level() > d.components[*best].level()) best = i;
    }
    return best;
}

std::string describe(const FixedComponent& c) {
    std::ostringstream os;
    os << type_name(c.type) << "{";
    for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << c.weights[i];
    os << "}";
    std::visit(
        [&os, &c](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SurfaceNormal>) {
                os << " deg(";
                for (std::size_t i = 0; i < 3; ++i)
                    os << (i ? "," : "") << n.summands[i].degree << (n.summands[i].weight < 0 ? "-" : "+");
                os << ")";
            } else if constexpr (std::is_same_v<T, FourDimExtremal>) {
                os << " c1=" << n.c1 << "h c2=" << n.c2;
            } else if constexpr (std::is_same_v<T, FourDimSplit>) {
                if (c.type == ComponentType::P1xP1)
                    os << " L-=(" << n.negative[0] << "," << n.negative[1] << ") L+=(" << n.positive[0] << ","
                       << n.positive[1] << ")";
                else
                    os << " L-=" << n.negative[0] << "h L+=" << n.positive[0] << "h";
            } else if constexpr (std::is_same_v<T, SixDim>) {
                os << " c1=" << n.m << "h";
            }
        },
        c.normal);
    os << " @" << c.level();
    return os.str();
}

}  // namespace semifree
