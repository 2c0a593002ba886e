#include "semifree/catalog.hpp"

#include "semifree/fixed_point.hpp"

namespace semifree {

FixedPointData kuznetsov_data(std::int64_t c2_min, std::int64_t c2_max) {
    FixedPointData d{"kuznetsov", {make_plane_extremal(1, -1, c2_min), make_plane_extremal(-1, -1, c2_max)}};
    for (int i = 0; i < 6; ++i) d.components.push_back(make_point(2));
    return d;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> e;
        e.push_back({"projectiveone", "P4", 625, 'a', {"projectiveone", {make_point(0), make_sixdim(-1, 1)}}});
        e.push_back({"exampletwofour",
                     "P4",
                     625,
                     'a',
                     {"exampletwofour",
                      {make_surface({Summand{1, 1}, Summand{1, 1}, Summand{1, 1}}), make_plane_extremal(-1, 2, 1)}}});
        e.push_back({"quadricone",
                     "Q4",
                     512,
                     'b',
                     {"quadricone", {make_point(0), make_split(ComponentType::P1xP1, {1, 1}, {1, 1}), make_point(4)}}});
        e.push_back({"quadricexample",
                     "Q4",
                     512,
                     'b',
                     {"quadricexample", {make_plane_extremal(1, 1, 1), make_plane_extremal(-1, 1, 1)}}});
        e.push_back({"wexample",
                     "W5",
                     405,
                     'c',
                     {"wexample",
                      {make_point(0), make_surface({Summand{3, -1}, Summand{2, 1}, Summand{2, 1}}),
                       make_plane_extremal(-1, 0, 2)}}});
        e.push_back({"kuznetsov", "X8m", 224, 'd', kuznetsov_data()});
        return e;
    }();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> n;
    for (const auto& e : catalog()) n.push_back(e.name);
    return n;
}

const CatalogEntry* find_catalog(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

/// Kuznetsov data with this data's own c2 split, if the split sums to 8.
std::optional<FixedPointData> kuznetsov_like(const FixedPointData& d) {
    std::optional<std::int64_t> lo, hi;
    for (const auto& c : d.components)
        if (const auto* x = std::get_if<FourDimExtremal>(&c.normal)) (c.is_local_min() ? lo : hi) = x->c2;
    if (!lo || !hi || *lo + *hi != 8) return std::nullopt;
    return kuznetsov_data(*lo, *hi);
}

}  // namespace

FpMatch match_fp_class(const FixedPointData& data) {
    const FixedPointData rev = reverse_action(data);
    for (const auto& e : catalog()) {
        if (fp_equivalent(data, e.data)) return {e.fp_case, e.name, false};
        if (fp_equivalent(rev, e.data)) return {e.fp_case, e.name, true};
    }
    for (const auto* d : {&data, &rev}) {
        const auto k = kuznetsov_like(*d);
        if (k && fp_equivalent(*d, *k)) return {'d', "kuznetsov", d == &rev};
    }
    return {};
}

std::string fp_case_name(const FpMatch& m) {
    if (!m.fp_case) return "unclassified";
    return std::string("case ") + *m.fp_case + ")";
}

}  // namespace semifree
