#include "semifree/fixed_point.hpp"

#include "semifree/localization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semifree {

int kirwan_betti(const FixedPointData& data, int i) {
    int total = 0;
    for (const auto& c : data.components) total += betti_at(c.type, i - 2 * c.lambda());
    return total;
}

BettiVector kirwan_betti_vector(const FixedPointData& data) {
    BettiVector b{};
    for (int i = 0; i <= 8; ++i) b[static_cast<std::size_t>(i)] = kirwan_betti(data, i);
    return b;
}

int count_points(const FixedPointData& data, int lambda) {
    return static_cast<int>(std::count_if(data.components.begin(), data.components.end(), [lambda](const auto& c) {
        return c.type == ComponentType::Point && c.lambda() == lambda;
    }));
}

std::string normal_mismatch(const FixedComponent& c) {
    std::vector<int> nonzero;
    for (int w : c.weights)
        if (w != 0) nonzero.push_back(w);
    std::sort(nonzero.begin(), nonzero.end());
    const std::string kind = normal_kind(c.normal);
    auto bad = [&](const std::string& why) { return type_name(c.type) + " with " + kind + " data: " + why; };
    switch (c.type) {
        case ComponentType::Point:
            if (!std::holds_alternative<PointNormal>(c.normal)) return bad("points carry no normal data");
            return {};
        case ComponentType::CP1: {
            const auto* s = std::get_if<SurfaceNormal>(&c.normal);
            if (!s) return bad("a sphere needs three line-bundle summands");
            std::vector<int> labels;
            for (const auto& sm : s->summands) labels.push_back(sm.weight);
            std::sort(labels.begin(), labels.end());
            if (labels != nonzero) return bad("summand weights differ from the nonzero weights");
            return {};
        }
        case ComponentType::CP2:
        case ComponentType::P1xP1: {
            if (std::holds_alternative<FourDimExtremal>(c.normal)) {
                if (c.type != ComponentType::CP2) return bad("extremal rank-two data is defined over CP2 only");
                if (nonzero.size() != 2 || nonzero[0] != nonzero[1])
                    return bad("extremal data needs two equal nonzero weights");
                return {};
            }
            const auto* sp = std::get_if<FourDimSplit>(&c.normal);
            if (!sp) return bad("a four-dimensional component needs rank-two normal data");
            if (nonzero != std::vector<int>{-1, 1}) return bad("split data needs weights -1 and +1");
            if (c.type == ComponentType::CP2 && (sp->negative[1] != 0 || sp->positive[1] != 0))
                return bad("classes over CP2 have one coordinate");
            return {};
        }
        case ComponentType::CP3:
            if (!std::holds_alternative<SixDim>(c.normal)) return bad("CP3 needs a line bundle");
            return {};
    }
    return bad("unknown type");
}

ConstraintReport validate(const FixedPointData& data) {
    ConstraintReport r;
    {
        std::string detail;
        for (std::size_t i = 0; i < data.components.size(); ++i)
            for (int w : data.components[i].weights)
                if (w < -1 || w > 1) {
                    detail = "component " + std::to_string(i) + " has weight " + std::to_string(w);
                    break;
                }
        r.add("semi-free", anchor::kSemiFree, detail.empty(), detail.empty() ? "all weights in {-1,0,1}" : detail);
    }
    {
        std::string detail;
        for (std::size_t i = 0; i < data.components.size(); ++i) {
            const auto& c = data.components[i];
            if (c.zero_weights() * 2 != c.dim()) {
                detail = "component " + std::to_string(i) + " (" + type_name(c.type) + ") has " +
                         std::to_string(c.zero_weights()) + " zero weights";
                break;
            }
        }
        r.add("tangent-dimension", anchor::kTangent, detail.empty(),
              detail.empty() ? "zero-weight count equals dim/2 everywhere" : detail);
    }
    {
        std::string detail;
        for (std::size_t i = 0; i < data.components.size() && detail.empty(); ++i) {
            const std::string m = normal_mismatch(data.components[i]);
            if (!m.empty()) detail = "component " + std::to_string(i) + ": " + m;
        }
        r.add("normal-variant", anchor::kNormal, detail.empty(), detail.empty() ? "every variant fits" : detail);
    }

    const BettiVector b = kirwan_betti_vector(data);
    std::ostringstream bs;
    for (int i = 0; i <= 8; ++i) bs << (i ? "," : "") << b[static_cast<std::size_t>(i)];
    const std::string betti_text = "b = [" + bs.str() + "]";

    const auto minima = std::count_if(data.components.begin(), data.components.end(),
                                      [](const auto& c) { return c.is_local_min(); });
    const auto maxima = std::count_if(data.components.begin(), data.components.end(),
                                      [](const auto& c) { return c.is_local_max(); });
    r.add("unique-minimum", anchor::kKirwan, b[0] == 1 && minima == 1,
          "b0 = " + std::to_string(b[0]) + ", local minima " + std::to_string(minima));
    r.add("unique-maximum", anchor::kKirwan, b[8] == 1 && maxima == 1,
          "b8 = " + std::to_string(b[8]) + ", local maxima " + std::to_string(maxima));
    r.add("b2-one", anchor::kKirwan, b[2] == 1, "b2 = " + std::to_string(b[2]));
    bool sym = true;
    for (int i = 0; i <= 8; ++i) sym = sym && b[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(8 - i)];
    r.add("poincare", anchor::kPoincare, sym, betti_text);
    bool odd_zero = true;
    for (int i = 1; i <= 7; i += 2) odd_zero = odd_zero && b[static_cast<std::size_t>(i)] == 0;
    r.add("symplectic-powers", anchor::kPowers,
          odd_zero && b[0] >= 1 && b[2] >= 1 && b[4] >= 1 && b[6] >= 1 && b[8] >= 1, betti_text);

    bool ordered = minima == 1 && maxima == 1;
    std::string detail = "needs a unique minimum and maximum";
    if (ordered) {
        const auto lo = *min_index(data);
        const auto hi = *max_index(data);
        const int hmin = data.components[lo].level();
        const int hmax = data.components[hi].level();
        detail = "H_min = " + std::to_string(hmin) + ", H_max = " + std::to_string(hmax);
        for (std::size_t i = 0; i < data.components.size(); ++i) {
            if (i == lo || i == hi) continue;
            const int h = data.components[i].level();
            if (h <= hmin || h >= hmax) {
                ordered = false;
                detail = "component " + std::to_string(i) + " at level " + std::to_string(h) + " outside (" +
                         std::to_string(hmin) + "," + std::to_string(hmax) + ")";
                break;
            }
        }
        if (ordered && hmin >= hmax) ordered = false;
    }
    r.add("level-order", anchor::kLevels, ordered, detail);
    return r;
}

std::int64_t self_intersection(const FixedPointData& data) {
    std::int64_t total = 0;
    for (const auto& c : data.components) {
        if (const auto* x = std::get_if<FourDimExtremal>(&c.normal)) {
            total += x->c2;
        } else if (const auto* sp = std::get_if<FourDimSplit>(&c.normal)) {
            total += pairing(c.type, sp->negative, sp->positive);
        } else if (const auto* s6 = std::get_if<SixDim>(&c.normal)) {
            // zero locus of a section of O(m) on CP3: a degree-m surface
            total += (4 * s6->m - s6->m * s6->m * s6->m) / 3;
        }
    }
    return total;
}

Check signature_check(const FixedPointData& data) {
    const std::int64_t s = self_intersection(data);
    const int b4 = kirwan_betti(data, 4);
    return {"signature", anchor::kSignature, s == b4 ? Verdict::Pass : Verdict::Fail,
            "self-intersection " + std::to_string(s) + " vs b4(M) " + std::to_string(b4)};
}

DimPair dim_pair(const FixedPointData& data) {
    const auto lo = min_index(data);
    const auto hi = max_index(data);
    if (!lo || !hi) throw std::invalid_argument("data has no minimum or maximum");
    const int a = data.components[*lo].dim();
    const int b = data.components[*hi].dim();
    if (a <= b) return {a, b, false};
    return {b, a, true};
}

FixedPointData reverse_action(const FixedPointData& data) {
    FixedPointData out = data;
    for (auto& c : out.components) {
        for (int& w : c.weights) w = -w;
        c.weights = sorted_weights(c.weights);
        if (auto* s = std::get_if<SurfaceNormal>(&c.normal)) {
            for (auto& sm : s->summands) sm.weight = -sm.weight;
            *s = normalized(*s);
        } else if (auto* sp = std::get_if<FourDimSplit>(&c.normal)) {
            std::swap(sp->negative, sp->positive);
        }
    }
    return out;
}

FixedPointData normalized_orientation(const FixedPointData& data) {
    return dim_pair(data).reversed ? reverse_action(data) : data;
}

std::string canonical_key(const FixedComponent& c) {
    std::ostringstream os;
    os << type_name(c.type) << "[";
    const auto w = sorted_weights(c.weights);
    for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << w[i];
    os << "]";
    std::visit(
        [&os, &c](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SurfaceNormal>) {
                // a rank-two bundle over CP1 is determined by its degree
                std::int64_t neg = 0, pos = 0;
                for (const auto& sm : n.summands) (sm.weight < 0 ? neg : pos) += sm.degree;
                os << "neg=" << neg << ";pos=" << pos;
            } else if constexpr (std::is_same_v<T, FourDimExtremal>) {
                os << "c1=" << n.c1 << ";c2=" << n.c2;
            } else if constexpr (std::is_same_v<T, FourDimSplit>) {
                std::array<std::int64_t, 4> a{n.negative[0], n.negative[1], n.positive[0], n.positive[1]};
                if (c.type == ComponentType::P1xP1) {
                    std::array<std::int64_t, 4> swapped{a[1], a[0], a[3], a[2]};
                    a = std::min(a, swapped);
                    os << "neg=(" << a[0] << "," << a[1] << ");pos=(" << a[2] << "," << a[3] << ")";
                } else {
                    os << "neg=" << a[0] << ";pos=" << a[2];
                }
            } else if constexpr (std::is_same_v<T, SixDim>) {
                os << "c1=" << n.m;
            }
        },
        c.normal);
    return os.str();
}

std::vector<std::string> canonical_keys(const FixedPointData& data) {
    std::vector<std::string> keys;
    keys.reserve(data.components.size());
    for (const auto& c : data.components) keys.push_back(canonical_key(c));
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool fp_equivalent(const FixedPointData& a, const FixedPointData& b) { return canonical_keys(a) == canonical_keys(b); }

}  // namespace semifree
