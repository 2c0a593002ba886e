#include "semifree/cli.hpp"

#include "semifree/catalog.hpp"
#include "semifree/classifier.hpp"
#include "semifree/data_format.hpp"
#include "semifree/fano.hpp"
#include "semifree/localization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace semifree {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
    bool json = false;
    bool strict_dh = false;
};

Json tool_header() {
    return Json{{"name", "semifree"}, {"version", kToolVersion}, {"fano_table_hash", table_hash(default_fano_table())}};
}

void text_header(std::ostream& out) {
    out << "semifree " << kToolVersion << " (default Fano table " << table_hash(default_fano_table()) << ")\n";
}

std::string shape_str(const DimPair& s) { return "(" + std::to_string(s.d1) + "," + std::to_string(s.d2) + ")"; }

Json checks_json(const ConstraintReport& r) {
    Json arr = Json::array();
    for (const auto& c : r.checks())
        arr.push_back(Json{{"id", c.id}, {"verdict", verdict_name(c.verdict)}, {"anchor", c.anchor}, {"detail", c.detail}});
    return arr;
}

void checks_text(std::ostream& out, const ConstraintReport& r, const std::string& indent = "") {
    for (const auto& c : r.checks())
        out << indent << verdict_name(c.verdict) << " " << c.id << ": " << c.detail << " [" << c.anchor << "]\n";
}

/// Invariants shown next to a report; empty when the data lacks extrema.
struct Summary {
    bool available = false;
    DimPair shape;
    BettiVector betti{};
    std::optional<int> iota;
    Rational volume;
    std::string fp_class;
};

Summary summarize(const FixedPointData& data) {
    Summary s;
    if (!validate(data).passed()) return s;
    s.available = true;
    s.shape = dim_pair(data);
    s.betti = kirwan_betti_vector(data);
    s.iota = index_from_extremal(data).value;
    s.volume = profile_volume(dh_profile(data));
    s.fp_class = fp_case_name(match_fp_class(data));
    return s;
}

Json summary_json(const Summary& s) {
    if (!s.available) return Json(nullptr);
    Json j;
    j["shape"] = {s.shape.d1, s.shape.d2};
    j["reversed"] = s.shape.reversed;
    j["betti"] = s.betti;
    j["iota"] = s.iota ? Json(*s.iota) : Json(nullptr);
    j["volume"] = to_string(s.volume);
    j["fp_class"] = s.fp_class;
    return j;
}

void summary_text(std::ostream& out, const Summary& s) {
    if (!s.available) {
        out << "invariants: unavailable (data fails basic validation)\n";
        return;
    }
    out << "shape " << shape_str(s.shape) << (s.shape.reversed ? " after reversal" : "") << ", betti";
    for (int b : s.betti) out << " " << b;
    out << ", iota " << (s.iota ? std::to_string(*s.iota) : "?") << ", volume " << to_string(s.volume) << ", "
        << s.fp_class << "\n";
}

Json dh_json(const FixedPointData& data) {
    Json arr = Json::array();
    for (const auto& p : dh_profile(data).pieces)
        arr.push_back(Json{{"lo", to_string(p.lo)}, {"hi", to_string(p.hi)}, {"side", p.side == DHSide::Below ? "below" : "above"},
                           {"poly", p.poly.str("c")}});
    return arr;
}

void dh_text(std::ostream& out, const FixedPointData& data) {
    out << "DH profile:\n";
    for (const auto& p : dh_profile(data).pieces)
        out << "  [" << to_string(p.lo) << ", " << to_string(p.hi) << "] " << p.poly.str("c") << "\n";
}

int report_data(std::ostream& out, const Flags& flags, const std::string& command, const std::string& source,
                const FixedPointData& data, bool show_dh, const Json& extra = nullptr) {
    CheckOptions opt;
    opt.strict_dh = flags.strict_dh;
    const ConstraintReport rep = full_report(data, opt);
    const Summary sum = summarize(data);
    const int code = rep.passed() ? 0 : kExitFail;
    if (flags.json) {
        Json j;
        j["tool"] = tool_header();
        j["command"] = command;
        j["input"] = source;
        j["name"] = data.name;
        if (!extra.is_null()) j["entry"] = extra;
        j["components"] = data.components.size();
        j["invariants"] = summary_json(sum);
        j["checks"] = checks_json(rep);
        if (show_dh && sum.available) j["dh_profile"] = dh_json(data);
        j["overall"] = rep.passed() ? "PASS" : "FAIL";
        j["exit_code"] = code;
        out << j.dump(2) << "\n";
        return code;
    }
    text_header(out);
    out << command << " " << source << ": " << data.components.size() << " components\n";
    if (!extra.is_null())
        out << "entry: " << extra["fano"].get<std::string>() << ", c1^4 = " << extra["c1_fourth"].get<std::int64_t>()
            << ", expected case " << extra["fp_case"].get<std::string>() << ")\n";
    for (const auto& c : data.components) out << "  " << describe(c) << "\n";
    summary_text(out, sum);
    checks_text(out, rep);
    if (show_dh && sum.available) dh_text(out, data);
    out << "overall: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return code;
}

int cmd_verify(std::ostream& out, std::ostream& err, const Flags& flags, const std::string& path, bool show_dh) {
    FixedPointData data;
    try {
        data = load_data(path);
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return report_data(out, flags, "verify", path, data, show_dh);
}

std::optional<DimPair> parse_shape(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const int d1 = std::stoi(a, &p1);
        const int d2 = std::stoi(b, &p2);
        if (p1 != a.size() || p2 != b.size()) return std::nullopt;
        return DimPair{d1, d2, false};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void list_shapes(std::ostream& os) {
    os << "admissible shapes:";
    for (const auto& v : admissible_dim_pairs())
        if (v.admissible) os << " " << shape_str(v.shape);
    os << "\nrejected shapes:\n";
    for (const auto& v : admissible_dim_pairs())
        if (!v.admissible) os << "  " << shape_str(v.shape) << ": " << v.reason << " [" << v.anchor << "]\n";
}

Json family_json(const Family& f) {
    Json j;
    j["key"] = f.key;
    j["label"] = f.label;
    j["iota"] = f.iota ? Json(*f.iota) : Json(nullptr);
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(Json{{"n2", m.n2}, {"b4", m.b4}, {"c2", m.c2}});
    j["members"] = members;
    j["representative"] = data_to_json(f.representative_data());
    j["fp_class"] = fp_case_name(match_fp_class(f.representative_data()));
    j["checks"] = checks_json(f.report);
    j["verdict"] = f.report.passed() ? "PASS" : "FAIL";
    return j;
}

void family_text(std::ostream& out, const Family& f) {
    int b4_lo = f.members.front().b4, b4_hi = b4_lo, n2_hi = 0;
    for (const auto& m : f.members) {
        b4_lo = std::min(b4_lo, m.b4);
        b4_hi = std::max(b4_hi, m.b4);
        n2_hi = std::max(n2_hi, m.n2);
    }
    out << "  family " << f.label << "\n";
    out << "    iota " << (f.iota ? std::to_string(*f.iota) : "?") << ", " << f.members.size() << " members, b4 " << b4_lo;
    if (b4_hi != b4_lo) out << ".." << b4_hi;
    out << ", N2 0.." << n2_hi << ", " << fp_case_name(match_fp_class(f.representative_data())) << "\n";
    if (!f.members.front().c2.empty()) {
        out << "    plane c2 (N2: c2...):";
        for (const auto& m : f.members) {
            out << " " << m.n2 << ":";
            for (std::size_t i = 0; i < m.c2.size(); ++i) out << (i ? "/" : "") << m.c2[i];
        }
        out << "\n";
    }
    out << "    representative:";
    for (const auto& c : f.representative_data().components) out << " " << describe(c) << ";";
    out << "\n";
    const Check* bad = f.report.first_failure();
    out << "    report " << (bad ? "FAIL" : "PASS") << " (" << f.report.checks().size() << " checks)";
    if (bad) out << ": " << bad->id << ": " << bad->detail << " [" << bad->anchor << "]";
    out << "\n";
}

int cmd_enumerate(std::ostream& out, std::ostream& err, const Flags& flags, const std::string& shape_arg, int b4_max) {
    std::vector<DimPair> shapes;
    if (shape_arg == "all") {
        for (const auto& v : admissible_dim_pairs())
            if (v.admissible) shapes.push_back(v.shape);
    } else {
        const auto s = parse_shape(shape_arg);
        const auto v = s ? shape_verdict(*s) : std::nullopt;
        if (!v) {
            err << "error: --shape expects d1,d2 with d1 <= d2 in {0,2,4,6}, or all\n";
            list_shapes(err);
            return kExitUsage;
        }
        if (!v->admissible) {
            err << "error: shape " << shape_str(v->shape) << " is not admissible: " << v->reason << " [" << v->anchor << "]\n";
            list_shapes(err);
            return kExitUsage;
        }
        shapes.push_back(*s);
    }
    EnumerateOptions opt;
    opt.b4_max = b4_max;
    opt.strict_dh = flags.strict_dh;
    bool ok = true;
    int max_b4 = 0;
    Json results = Json::array();
    std::ostringstream text;
    for (const auto& s : shapes) {
        const EnumerationResult res = enumerate_case(s, opt);
        Json fams = Json::array();
        text << "shape " << shape_str(s) << ": " << res.families.size() << " families, " << res.candidates
             << " candidates\n";
        for (const auto& f : res.families) {
            ok = ok && f.report.passed();
            for (const auto& m : f.members) max_b4 = std::max(max_b4, m.b4);
            fams.push_back(family_json(f));
            family_text(text, f);
        }
        results.push_back(Json{{"shape", {s.d1, s.d2}}, {"candidates", res.candidates}, {"families", fams}});
    }
    const int code = ok ? 0 : kExitFail;
    if (flags.json) {
        Json j;
        j["tool"] = tool_header();
        j["command"] = "enumerate";
        j["max_b4_bound"] = b4_max;
        j["strict_dh"] = flags.strict_dh;
        j["results"] = results;
        j["max_reported_b4"] = max_b4;
        j["overall"] = ok ? "PASS" : "FAIL";
        j["exit_code"] = code;
        out << j.dump(2) << "\n";
        return code;
    }
    text_header(out);
    out << "enumerate " << shape_arg << " with b4 <= " << b4_max << (flags.strict_dh ? ", strict DH" : "") << "\n";
    out << text.str();
    out << "max reported b4 = " << max_b4 << "\n";
    out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return code;
}

int cmd_classify(std::ostream& out, std::ostream& err, const Flags& flags, const std::string& table_path) {
    std::vector<FanoFamilyRecord> table = default_fano_table();
    if (!table_path.empty()) {
        try {
            table = load_fano_table(table_path);
        } catch (const ParseError& e) {
            err << "error: " << table_path << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }
    FanoClassification cls;
    try {
        cls = classify_fano(table);
    } catch (const FanoTableError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::string source = table_path.empty() ? "default" : table_path;
    if (flags.json) {
        Json j;
        j["tool"] = tool_header();
        j["command"] = "classify-fano";
        j["table"] = source;
        j["table_hash"] = table_hash(table);
        Json verdicts = Json::array();
        for (const auto& v : cls.verdicts)
            verdicts.push_back(Json{{"name", v.record.name},
                                    {"iota", v.record.iota},
                                    {"b4", v.record.b4},
                                    {"c1_fourth", v.record.c1_fourth},
                                    {"survives", v.survives},
                                    {"anchor", v.anchor},
                                    {"trace", v.trace}});
        j["verdicts"] = verdicts;
        j["survivors"] = cls.survivors;
        j["exit_code"] = 0;
        out << j.dump(2) << "\n";
        return 0;
    }
    text_header(out);
    out << "classify-fano table " << source << " (" << table_hash(table) << ")\n";
    for (const auto& v : cls.verdicts) {
        out << (v.survives ? "SURVIVES " : "REJECTED ") << v.record.name << " (iota " << v.record.iota << ", b4 "
            << v.record.b4 << ", c1^4 " << v.record.c1_fourth << ")";
        if (!v.survives) out << " [" << v.anchor << "]";
        out << "\n";
        for (const auto& t : v.trace) out << "    " << t << "\n";
    }
    out << "survivors:";
    for (const auto& n : cls.survivors) out << " " << n;
    out << "\n";
    return 0;
}

int cmd_catalog(std::ostream& out, std::ostream& err, const Flags& flags, const std::string& name,
                const std::string& emit) {
    const CatalogEntry* e = find_catalog(name);
    if (!e) {
        err << "error: unknown catalog entry \"" << name << "\"; choose one of:";
        for (const auto& n : catalog_names()) err << " " << n;
        err << "\n";
        return kExitUsage;
    }
    if (emit == "file") {
        out << emit_data(e->data);
        return 0;
    }
    const Json extra{{"fano", e->fano}, {"c1_fourth", e->c1_fourth}, {"fp_case", std::string(1, e->fp_case)}};
    return report_data(out, flags, "catalog", name, e->data, true, extra);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fixed-point data engine for semi-free circle actions on symplectic 8-manifolds with b2 = 1",
                 "semifree"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Flags flags;
    app.add_flag("--json", flags.json, "Print one JSON document instead of text");
    app.add_flag("--strict-dh", flags.strict_dh, "Also require DH continuity at level 0 and vanishing residue");

    std::string path;
    bool show_dh = false;
    auto* verify = app.add_subcommand("verify", "Check a fixed-point data file");
    verify->add_option("file", path, "JSON data file")->required();
    verify->add_flag("--dh", show_dh, "Print the DH profile");

    std::string shape;
    int b4_max = 30;
    auto* enumerate = app.add_subcommand("enumerate", "Search all fixed-point data of a shape");
    enumerate->add_option("--shape", shape, "d1,d2 or all")->required();
    enumerate->add_option("--max-b4", b4_max, "Upper bound on b4")->check(CLI::Range(1, 60));

    std::string table;
    auto* classify = app.add_subcommand("classify-fano", "Filter the prime Fano fourfold table");
    classify->add_option("--table", table, "JSON Fano table (default: built in)");

    std::string name;
    std::string emit = "file";
    auto* cat = app.add_subcommand("catalog", "Emit or verify a worked example");
    cat->add_option("--name", name, "Entry name")->required();
    cat->add_option("--emit", emit, "file or report")->check(CLI::IsMember({"file", "report"}));

    for (auto* sub : {verify, enumerate, classify, cat}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(out, err, flags, path, show_dh);
        if (*enumerate) return cmd_enumerate(out, err, flags, shape, b4_max);
        if (*classify) return cmd_classify(out, err, flags, table);
        return cmd_catalog(out, err, flags, name, emit);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace semifree
