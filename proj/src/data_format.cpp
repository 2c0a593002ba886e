#include "semifree/data_format.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace semifree {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("field " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* a : keys) known = known || k == a;
        if (!known) fail(path, "unknown key \"" + k + "\"");
    }
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        fail(path, "integer out of range");
    return j.get<std::int64_t>();
}

int as_small(const Json& j, const std::string& path) {
    const std::int64_t v = as_int(j, path);
    if (v < -1000000 || v > 1000000) fail(path, "integer out of range");
    return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path, std::size_t n) {
    if (!j.is_array()) fail(path, "expected an array");
    if (n && j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    return j;
}

std::array<std::int64_t, 2> pair_of(const Json& j, const std::string& path) {
    as_array(j, path, 2);
    return {as_int(j[0], path + "[0]"), as_int(j[1], path + "[1]")};
}

NormalBundleData normal_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const std::string kind = as_string(field(j, path, "kind"), path + ".kind");
    if (kind == "point") {
        only_keys(j, path, {"kind"});
        return PointNormal{};
    }
    if (kind == "surface") {
        only_keys(j, path, {"kind", "summands"});
        const std::string sp = path + ".summands";
        const Json& arr = as_array(field(j, path, "summands"), sp, 3);
        SurfaceNormal s;
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string ip = sp + "[" + std::to_string(i) + "]";
            only_keys(arr[i], ip, {"degree", "weight"});
            s.summands[i].degree = as_int(field(arr[i], ip, "degree"), ip + ".degree");
            s.summands[i].weight = as_small(field(arr[i], ip, "weight"), ip + ".weight");
        }
        return s;
    }
    if (kind == "fourdim_extremal") {
        only_keys(j, path, {"kind", "c1", "c2"});
        return FourDimExtremal{as_int(field(j, path, "c1"), path + ".c1"), as_int(field(j, path, "c2"), path + ".c2")};
    }
    if (kind == "fourdim_split") {
        only_keys(j, path, {"kind", "negative", "positive"});
        return FourDimSplit{pair_of(field(j, path, "negative"), path + ".negative"),
                            pair_of(field(j, path, "positive"), path + ".positive")};
    }
    if (kind == "sixdim") {
        only_keys(j, path, {"kind", "c1"});
        return SixDim{as_int(field(j, path, "c1"), path + ".c1")};
    }
    fail(path + ".kind", "unknown kind \"" + kind +
                             "\" (expected point, surface, fourdim_extremal, fourdim_split or sixdim)");
}

Json normal_to_json(const NormalBundleData& n) {
    Json j;
    j["kind"] = normal_kind(n);
    std::visit(
        [&j](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SurfaceNormal>) {
                Json arr = Json::array();
                for (const auto& s : x.summands) arr.push_back(Json{{"degree", s.degree}, {"weight", s.weight}});
                j["summands"] = arr;
            } else if constexpr (std::is_same_v<T, FourDimExtremal>) {
                j["c1"] = x.c1;
                j["c2"] = x.c2;
            } else if constexpr (std::is_same_v<T, FourDimSplit>) {
                j["negative"] = x.negative;
                j["positive"] = x.positive;
            } else if constexpr (std::is_same_v<T, SixDim>) {
                j["c1"] = x.m;
            }
        },
        n);
    return j;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        const auto at = msg.find("parse error");
        throw ParseError(at == std::string::npos ? msg : msg.substr(at));
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

Json data_to_json(const FixedPointData& data) {
    Json j;
    j["name"] = data.name;
    j["dimension"] = 8;
    j["b2"] = 1;
    Json comps = Json::array();
    for (const auto& c : data.components) {
        Json cj;
        cj["type"] = type_name(c.type);
        cj["weights"] = c.weights;
        cj["normal"] = normal_to_json(c.normal);
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

FixedPointData data_from_json(const Json& j) {
    only_keys(j, "", {"name", "dimension", "b2", "components"});
    FixedPointData d;
    if (j.contains("name")) d.name = as_string(j["name"], "name");
    if (as_int(field(j, "", "dimension"), "dimension") != 8) fail("dimension", "only dimension 8 is supported");
    if (as_int(field(j, "", "b2"), "b2") != 1) fail("b2", "only b2 = 1 is supported");
    const Json& comps = as_array(field(j, "", "components"), "components", 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string p = "components[" + std::to_string(i) + "]";
        only_keys(comps[i], p, {"type", "weights", "normal"});
        FixedComponent c;
        const std::string t = as_string(field(comps[i], p, "type"), p + ".type");
        const auto type = parse_type(t);
        if (!type) fail(p + ".type", "unknown type \"" + t + "\" (expected point, cp1, cp2, p1xp1 or cp3)");
        c.type = *type;
        const Json& w = as_array(field(comps[i], p, "weights"), p + ".weights", 4);
        for (std::size_t k = 0; k < 4; ++k) c.weights[k] = as_small(w[k], p + ".weights[" + std::to_string(k) + "]");
        c.weights = sorted_weights(c.weights);
        c.normal = normal_from_json(field(comps[i], p, "normal"), p + ".normal");
        d.components.push_back(std::move(c));
    }
    return d;
}

std::string emit_data(const FixedPointData& data) { return data_to_json(data).dump(2) + "\n"; }

FixedPointData parse_data(const std::string& text) { return data_from_json(parse_text(text)); }

FixedPointData load_data(const std::string& path) { return parse_data(read_file(path)); }

Json fano_table_to_json(const std::vector<FanoFamilyRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) {
        Json j;
        j["name"] = r.name;
        j["iota"] = r.iota;
        j["b4"] = r.b4;
        j["c1_fourth"] = r.c1_fourth;
        j["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
        j["finite_automorphisms"] = r.finite_automorphisms;
        arr.push_back(j);
    }
    return Json{{"families", arr}};
}

std::vector<FanoFamilyRecord> fano_table_from_json(const Json& j) {
    only_keys(j, "", {"families"});
    const Json& arr = as_array(field(j, "", "families"), "families", 0);
    std::vector<FanoFamilyRecord> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = "families[" + std::to_string(i) + "]";
        only_keys(arr[i], p, {"name", "iota", "b4", "c1_fourth", "genus", "finite_automorphisms"});
        FanoFamilyRecord r;
        r.name = as_string(field(arr[i], p, "name"), p + ".name");
        r.iota = as_small(field(arr[i], p, "iota"), p + ".iota");
        r.b4 = as_small(field(arr[i], p, "b4"), p + ".b4");
        r.c1_fourth = as_int(field(arr[i], p, "c1_fourth"), p + ".c1_fourth");
        if (arr[i].contains("genus") && !arr[i]["genus"].is_null()) r.genus = as_small(arr[i]["genus"], p + ".genus");
        if (arr[i].contains("finite_automorphisms")) {
            if (!arr[i]["finite_automorphisms"].is_boolean()) fail(p + ".finite_automorphisms", "expected a boolean");
            r.finite_automorphisms = arr[i]["finite_automorphisms"].get<bool>();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string emit_fano_table(const std::vector<FanoFamilyRecord>& records) {
    return fano_table_to_json(records).dump(2) + "\n";
}

std::vector<FanoFamilyRecord> parse_fano_table(const std::string& text) {
    return fano_table_from_json(parse_text(text));
}

std::vector<FanoFamilyRecord> load_fano_table(const std::string& path) { return parse_fano_table(read_file(path)); }

std::string table_hash(const std::vector<FanoFamilyRecord>& records) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : fano_table_to_json(records).dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace semifree
