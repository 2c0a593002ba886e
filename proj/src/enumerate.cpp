#include "semifree/classifier.hpp"

#include "semifree/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace semifree {

namespace {

enum class ParamKind { None, OneGroup, SplitGroups, Plane, SplitPlane, SplitQuadric, Six };

struct Slot {
    FixedComponent comp;
    ParamKind kind = ParamKind::None;
    bool extremal = false;
};

/// n integers summing to s, as equal as possible, largest first.
std::vector<std::int64_t> balanced(std::int64_t s, int n) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    const std::int64_t q = s >= 0 ? s / n : -((-s + n - 1) / n);
    std::int64_t r = s - q * n;
    for (auto& v : out) {
        v = q + (r > 0 ? 1 : 0);
        if (r > 0) --r;
    }
    return out;
}

SurfaceNormal surface_from_sums(std::int64_t neg_sum, int neg_count, std::int64_t pos_sum, int pos_count) {
    SurfaceNormal s;
    std::size_t i = 0;
    if (neg_count > 0)
        for (auto d : balanced(neg_sum, neg_count)) s.summands[i++] = {d, -1};
    if (pos_count > 0)
        for (auto d : balanced(pos_sum, pos_count)) s.summands[i++] = {d, 1};
    return normalized(s);
}

Slot extremal_slot(int dim, bool is_min) {
    const int s = is_min ? 1 : -1;
    Slot slot;
    slot.extremal = true;
    switch (dim) {
        case 0:
            slot.comp = make_point(is_min ? 0 : 4);
            break;
        case 2:
            slot.comp = make_surface({Summand{0, s}, Summand{0, s}, Summand{0, s}});
            slot.kind = ParamKind::OneGroup;
            break;
        case 4:
            slot.comp = make_plane_extremal(s, 0, 0);
            slot.kind = ParamKind::Plane;
            break;
        default:
            slot.comp = make_sixdim(s, 0);
            slot.kind = ParamKind::Six;
            break;
    }
    return slot;
}

std::vector<Slot> interior_kinds() {
    std::vector<Slot> kinds;
    kinds.push_back({make_point(1), ParamKind::None, false});
    kinds.push_back({make_point(3), ParamKind::None, false});
    kinds.push_back({make_surface({Summand{0, -1}, Summand{0, 1}, Summand{0, 1}}), ParamKind::SplitGroups, false});
    kinds.push_back({make_surface({Summand{0, -1}, Summand{0, -1}, Summand{0, 1}}), ParamKind::SplitGroups, false});
    kinds.push_back({make_split(ComponentType::CP2, {0, 0}, {0, 0}), ParamKind::SplitPlane, false});
    kinds.push_back({make_split(ComponentType::P1xP1, {0, 0}, {0, 0}), ParamKind::SplitQuadric, false});
    return kinds;
}

/// Kirwan numbers of a slot list (without index-two points).
BettiVector betti_of(const std::vector<Slot>& slots) {
    BettiVector b{};
    for (const auto& s : slots)
        for (int i = 0; i <= 8; ++i) b[static_cast<std::size_t>(i)] += betti_at(s.comp.type, i - 2 * s.comp.lambda());
    return b;
}

std::string family_key(const FixedPointData& d) {
    std::vector<std::string> keys;
    for (const auto& c : d.components) {
        if (c.type == ComponentType::Point && c.lambda() == 2) continue;
        if (const auto* x = std::get_if<FourDimExtremal>(&c.normal)) {
            std::ostringstream os;
            const auto w = sorted_weights(c.weights);
            os << type_name(c.type) << "[" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << "]c1=" << x->c1;
            keys.push_back(os.str());
        } else {
            keys.push_back(canonical_key(c));
        }
    }
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += (out.empty() ? "" : " + ") + k;
    return out;
}

class Search {
public:
    Search(const DimPair& shape, const EnumerateOptions& opt) : shape_(shape), opt_(opt) {
        box_ = opt.degree_box;
        kbox_ = opt.b4_max + 2;
    }

    EnumerationResult run() {
        const Slot lo = extremal_slot(shape_.d1, true);
        const Slot hi = extremal_slot(shape_.d2, false);
        const auto kinds = interior_kinds();
        std::vector<int> mult(kinds.size(), 0);
        // every multiplicity vector in {0,1,2}^kinds; Kirwan prunes
        std::function<void(std::size_t)> choose = [&](std::size_t k) {
            if (k == kinds.size()) {
                std::vector<Slot> slots{lo};
                for (std::size_t i = 0; i < kinds.size(); ++i)
                    for (int m = 0; m < mult[i]; ++m) slots.push_back(kinds[i]);
                slots.push_back(hi);
                skeleton(slots);
                return;
            }
            for (int m = 0; m <= 2; ++m) {
                mult[k] = m;
                choose(k + 1);
            }
            mult[k] = 0;
        };
        choose(0);
        return finish();
    }

private:
    void skeleton(const std::vector<Slot>& slots) {
        const BettiVector b = betti_of(slots);
        for (int i : {0, 2, 6, 8})
            if (b[static_cast<std::size_t>(i)] != 1) return;
        for (int i : {1, 3, 5, 7})
            if (b[static_cast<std::size_t>(i)] != 0) return;
        const int hmin = slots.front().comp.level();
        const int hmax = slots.back().comp.level();
        for (std::size_t i = 1; i + 1 < slots.size(); ++i) {
            const int h = slots[i].comp.level();
            if (h <= hmin || h >= hmax) return;
        }
        // index-two points sit at level 0
        if (0 <= hmin || 0 >= hmax) return;
        slots_ = slots;
        b4_base_ = b[4];
        data_.components.clear();
        for (const auto& s : slots_) data_.components.push_back(s.comp);
        assign(0);
    }

    bool local_ok(std::size_t i) const {
        const FixedComponent& c = data_.components[i];
        if (c.dim() > 0) {
            const auto w = omega_coordinates(c);
            if (w[0] <= 0 || (c.type == ComponentType::P1xP1 && w[1] <= 0)) return false;
        }
        if (const auto* sp = std::get_if<FourDimSplit>(&c.normal)) {
            const auto& lo = slots_.front().comp;
            const auto& hi = slots_.back().comp;
            if (lo.dim() == 0 && hi.dim() == 0) {
                const auto w = omega_coordinates(c);
                const int n = c.type == ComponentType::P1xP1 ? 2 : 1;
                for (int k = 0; k < n; ++k) {
                    const auto kk = static_cast<std::size_t>(k);
                    if (-lo.level() * sp->negative[kk] != w[kk] || hi.level() * sp->positive[kk] != w[kk]) return false;
                }
            }
        }
        return true;
    }

    void assign(std::size_t i) {
        if (i == slots_.size()) {
            leaf();
            return;
        }
        auto next = [&]() {
            if (local_ok(i)) assign(i + 1);
        };
        const std::int64_t B = box_;
        const std::int64_t K = kbox_;
        switch (slots_[i].kind) {
            case ParamKind::None:
                next();
                break;
            case ParamKind::OneGroup: {
                const int w = slots_[i].comp.lambda() == 0 ? 1 : -1;
                for (std::int64_t s = -3 * B; s <= 3 * B; ++s) {
                    data_.components[i].normal = w > 0 ? surface_from_sums(0, 0, s, 3) : surface_from_sums(s, 3, 0, 0);
                    next();
                }
                break;
            }
            case ParamKind::SplitGroups: {
                const int neg = slots_[i].comp.lambda();
                const int pos = 3 - neg;
                for (std::int64_t a = -neg * B; a <= neg * B; ++a)
                    for (std::int64_t p = -pos * B; p <= pos * B; ++p) {
                        data_.components[i].normal = surface_from_sums(a, neg, p, pos);
                        next();
                    }
                break;
            }
            case ParamKind::Plane:
                for (std::int64_t k = -K; k <= K; ++k) {
                    data_.components[i].normal = FourDimExtremal{k, 0};
                    next();
                }
                break;
            case ParamKind::SplitPlane:
                for (std::int64_t u = -B; u <= B; ++u)
                    for (std::int64_t v = -B; v <= B; ++v) {
                        data_.components[i].normal = FourDimSplit{{u, 0}, {v, 0}};
                        next();
                    }
                break;
            case ParamKind::SplitQuadric:
                for (std::int64_t u1 = -B; u1 <= B; ++u1)
                    for (std::int64_t u2 = -B; u2 <= B; ++u2)
                        for (std::int64_t v1 = -B; v1 <= B; ++v1)
                            for (std::int64_t v2 = -B; v2 <= B; ++v2) {
                                data_.components[i].normal = FourDimSplit{{u1, u2}, {v1, v2}};
                                next();
                            }
                break;
            case ParamKind::Six:
                for (std::int64_t m = -K; m <= K; ++m) {
                    data_.components[i].normal = SixDim{m};
                    next();
                }
                break;
        }
    }

    void leaf() {
        std::vector<std::size_t> planes;
        std::int64_t fixed_abbv = 0;
        std::int64_t fixed_self = 0;
        std::int64_t plane_c1_sq = 0;
        for (std::size_t i = 0; i < data_.components.size(); ++i) {
            const auto& c = data_.components[i];
            if (const auto* x = std::get_if<FourDimExtremal>(&c.normal)) {
                planes.push_back(i);
                plane_c1_sq += x->c1 * x->c1;
                continue;
            }
            fixed_abbv += contribution(c);
            FixedPointData one;
            one.components.push_back(c);
            fixed_self += self_intersection(one);
        }
        const std::size_t base_size = data_.components.size();
        const int n2_lo = std::max(0, 1 - b4_base_);
        for (int n2 = n2_lo; b4_base_ + n2 <= opt_.b4_max; ++n2) {
            const std::int64_t b4 = b4_base_ + n2;
            // sum of plane c2 is fixed by the signature; ABBV then needs no c2
            const std::int64_t c2_total = b4 - fixed_self;
            const std::int64_t abbv = fixed_abbv + n2 + plane_c1_sq - (planes.empty() ? 0 : c2_total);
            ++candidates_;
            if (abbv != 0) continue;
            if (planes.empty() && c2_total != 0) continue;
            data_.components.resize(base_size);
            for (int p = 0; p < n2; ++p) data_.components.push_back(make_point(2));
            if (planes.size() == 1) {
                if (std::llabs(c2_total) > kbox_) continue;
                std::get<FourDimExtremal>(data_.components[planes[0]].normal).c2 = c2_total;
                accept(n2, static_cast<int>(b4), {c2_total});
            } else if (planes.size() == 2) {
                for (std::int64_t a = -kbox_; a <= kbox_; ++a) {
                    const std::int64_t b = c2_total - a;
                    if (std::llabs(b) > kbox_) continue;
                    ++candidates_;
                    std::get<FourDimExtremal>(data_.components[planes[0]].normal).c2 = a;
                    std::get<FourDimExtremal>(data_.components[planes[1]].normal).c2 = b;
                    accept(n2, static_cast<int>(b4), {a, b});
                }
            } else {
                accept(n2, static_cast<int>(b4), {});
            }
            data_.components.resize(base_size);
        }
    }

    void accept(int n2, int b4, std::vector<std::int64_t> c2) {
        if (!structural_rules(data_).passed()) return;
        if (!sphere_index_rules(data_).passed()) return;
        if (!sphere_constraints(data_).passed()) return;
        if (!validate(data_).passed()) return;
        if (signature_check(data_).verdict != Verdict::Pass) return;
        if (abbv_sum(data_) != 0) return;
        if (dh_positivity(data_).verdict != Verdict::Pass) return;
        if (opt_.strict_dh) {
            if (dh_continuity(data_).verdict != Verdict::Pass) return;
            if (dh_vanishing(data_).verdict != Verdict::Pass) return;
        }
        FixedPointData copy = data_;
        const std::string key = family_key(copy);
        found_[key].push_back({n2, b4, std::move(c2), std::move(copy)});
    }

    EnumerationResult finish() {
        EnumerationResult res;
        res.shape = shape_;
        res.candidates = candidates_;
        for (auto& [key, members] : found_) {
            Family f;
            f.key = key;
            f.shape = shape_;
            std::sort(members.begin(), members.end(), [](const FamilyMember& a, const FamilyMember& b) {
                return std::tie(a.n2, a.c2) < std::tie(b.n2, b.c2);
            });
            // representative: fewest points, most balanced split
            auto spread = [](const FamilyMember& m) {
                return m.c2.size() == 2 ? std::llabs(m.c2[0] - m.c2[1]) : 0;
            };
            std::size_t best = 0;
            for (std::size_t i = 1; i < members.size(); ++i) {
                const auto& a = members[i];
                const auto& b = members[best];
                if (std::make_tuple(a.n2, spread(a)) < std::make_tuple(b.n2, spread(b))) best = i;
            }
            f.members = std::move(members);
            f.representative = best;
            f.label = key + (f.members.back().n2 > 0 ? " + N2 x point[-1,-1,1,1]" : "");
            f.iota = index_from_extremal(f.representative_data()).value;
            CheckOptions co;
            co.strict_dh = opt_.strict_dh;
            f.report = full_report(f.representative_data(), co);
            res.families.push_back(std::move(f));
        }
        return res;
    }

    DimPair shape_;
    EnumerateOptions opt_;
    std::int64_t box_ = 12;
    std::int64_t kbox_ = 32;
    std::vector<Slot> slots_;
    int b4_base_ = 0;
    FixedPointData data_;
    std::uint64_t candidates_ = 0;
    std::map<std::string, std::vector<FamilyMember>> found_;
};

}  // namespace

EnumerationResult enumerate_case(const DimPair& shape, const EnumerateOptions& options) {
    const auto v = shape_verdict(shape);
    if (!v) throw std::invalid_argument("(d1,d2) must satisfy d1 <= d2 with both in {0,2,4,6}");
    if (!v->admissible)
        throw std::invalid_argument("shape (" + std::to_string(shape.d1) + "," + std::to_string(shape.d2) +
                                    ") is not admissible: " + v->reason + " [" + v->anchor + "]");
    return Search(shape, options).run();
}

}  // namespace semifree
