#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hkmod/errors.hpp"
#include "hkmod/reports.hpp"

using namespace hkmod;

namespace {

// Malformed invocation or unreadable/ill-formed input file: exit 1, message
// on stderr. Domain failures (hkmod::Error) instead exit 2 with JSON on
// stdout, so callers can tell the two apart.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_input(const std::string& msg) { throw BadInput(msg); }

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

long parse_long(const std::string& raw, const std::string& what) {
    const std::string s = trim(raw);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        bad_input(what + ": '" + raw + "' is not an integer");
    return value;
}

std::vector<long> parse_long_list(const std::string& s, std::size_t min_count,
                                  std::size_t max_count, const std::string& what) {
    const auto parts = split(s, ',');
    if (parts.size() < min_count || parts.size() > max_count)
        bad_input(what + ": expected " + std::to_string(min_count) +
                  (max_count > min_count ? "-" + std::to_string(max_count) : "") +
                  " comma-separated integers, got '" + s + "'");
    std::vector<long> out;
    out.reserve(parts.size());
    for (const auto& part : parts) out.push_back(parse_long(part, what));
    return out;
}

Rational parse_rat(const std::string& raw, const std::string& what) {
    const auto q = parse_rational(trim(raw));
    if (!q) bad_input(what + ": '" + raw + "' is not a rational (use p or p/q)");
    return *q;
}

std::pair<Rational, Rational> parse_rat_pair(const std::string& s, const std::string& what) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) bad_input(what + ": expected 'x,y', got '" + s + "'");
    return {parse_rat(parts[0], what), parse_rat(parts[1], what)};
}

ScenarioParams params_from_json_text(const std::string& text, const std::string& path) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad_input(path + ": " + e.what());
    }
    if (!j.is_object()) bad_input(path + ": expected a JSON object");
    long r1 = 0, a = 0, m0 = 0, d0 = 0, b = 0;
    bool has_b = false;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer()) bad_input(path + ": key '" + key + "' must be an integer");
        const long v = value.get<long>();
        if (key == "r1") r1 = v;
        else if (key == "a") a = v;
        else if (key == "m0") m0 = v;
        else if (key == "d0") d0 = v;
        else if (key == "b") { b = v; has_b = true; }
        else bad_input(path + ": unknown key '" + key + "'");
    }
    for (const char* key : {"r1", "a", "m0", "d0"})
        if (!j.contains(key)) bad_input(path + ": missing key '" + std::string(key) + "'");
    return has_b ? make_params(r1, a, m0, d0, b) : make_params(r1, a, m0, d0);
}

// Flat `key = value` lines with # comments; exactly the keys r1, a, m0, d0
// and optional b are accepted.
ScenarioParams params_from_toml_text(const std::string& text, const std::string& path) {
    long r1 = 0, a = 0, m0 = 0, d0 = 0, b = 0;
    bool seen_r1 = false, seen_a = false, seen_m0 = false, seen_d0 = false, seen_b = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) bad_input(path + ": expected 'key = value' in '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const long value = parse_long(line.substr(eq + 1), path + ": " + key);
        auto set = [&](long& slot, bool& seen) {
            if (seen) bad_input(path + ": duplicate key '" + key + "'");
            slot = value;
            seen = true;
        };
        if (key == "r1") set(r1, seen_r1);
        else if (key == "a") set(a, seen_a);
        else if (key == "m0") set(m0, seen_m0);
        else if (key == "d0") set(d0, seen_d0);
        else if (key == "b") set(b, seen_b);
        else bad_input(path + ": unknown key '" + key + "'");
    }
    if (!(seen_r1 && seen_a && seen_m0 && seen_d0))
        bad_input(path + ": need keys r1, a, m0, d0");
    return seen_b ? make_params(r1, a, m0, d0, b) : make_params(r1, a, m0, d0);
}

ScenarioParams params_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_input(path + ": cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    bool as_json;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        as_json = true;
    } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
        as_json = false;
    } else {
        const std::string lead = trim(text);
        as_json = !lead.empty() && lead.front() == '{';
    }
    return as_json ? params_from_json_text(text, path) : params_from_toml_text(text, path);
}

struct ParamsOpts {
    std::string params;
    std::string file;
};

ScenarioParams resolve_params(const ParamsOpts& o) {
    if (!o.params.empty() && !o.file.empty()) bad_input("give either --params or --file, not both");
    if (!o.params.empty()) {
        const auto v = parse_long_list(o.params, 4, 5, "--params");
        return v.size() == 5 ? make_params(v[0], v[1], v[2], v[3], v[4])
                             : make_params(v[0], v[1], v[2], v[3]);
    }
    if (!o.file.empty()) return params_from_file(o.file);
    bad_input("need --params r1,a,m0,d0[,b] or --file path");
}

void add_params_opts(CLI::App* sub, ParamsOpts& o) {
    sub->add_option("--params", o.params, "parameter tuple r1,a,m0,d0[,b]");
    sub->add_option("--file", o.file, "JSON or TOML file with keys r1, a, m0, d0 and optional b");
}

RankTwoCone cone_from(const std::string& s) {
    const auto [c, G] = parse_rat_pair(s, "--cone");
    return make_cone(c, G);
}

LatticeVector vector_from(const RankTwoCone& cone, const std::string& s, const std::string& what) {
    const auto [x, y] = parse_rat_pair(s, what);
    return cone_vector(cone, x, y);
}

ScanRanges ranges_from(const std::string& s) {
    const auto v = parse_long_list(s, 4, 4, "--ranges");
    return {v[0], v[1], v[2], v[3]};
}

unsigned threads_from_env() {
    const char* raw = std::getenv("HKMOD_THREADS");
    if (!raw) return 1;
    long n = 0;
    try {
        n = parse_long(raw, "HKMOD_THREADS");
    } catch (const BadInput&) {
        return 1;
    }
    if (n < 1) return 1;
    if (n > 256) return 256;
    return static_cast<unsigned>(n);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice calculus for induced sheaves on Hilbert squares of K3 surfaces"};
    app.require_subcommand(1);
    // --h is an option on several subcommands, so no -h short flag anywhere.
    app.set_help_flag("--help", "print this help message and exit");
    auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print this help message and exit");
        return sub;
    };

    ParamsOpts scenario_o, wg_o, atomic_o, extended_o, exts_o, jacobian_o;
    long hom12 = 0, hom21 = 0;
    std::string suit_cone, suit_a, suit_h;
    std::string walls_cone, walls_a, walls_h0, walls_h1;
    std::string fried_cone, fried_a, fried_h;
    std::string stima_cone, stima_h;
    std::string scan_ranges;
    std::string ident_ranges = "6,6,60,30";

    auto* scenario = add_subcommand("scenario", "full report for one parameter tuple");
    add_params_opts(scenario, scenario_o);
    scenario->callback([&] { emit(scenario_report(build_scenario(resolve_params(scenario_o)))); });

    auto* wg = add_subcommand("wg", "induced sheaf, polarization data and d0 bounds");
    add_params_opts(wg, wg_o);
    wg->callback([&] { emit(wg_report(build_scenario(resolve_params(wg_o)))); });

    auto* atomic = add_subcommand("atomic", "atomicity criterion for the pair (v1, v2)");
    add_params_opts(atomic, atomic_o);
    atomic->callback([&] { emit(atomic_report(build_scenario(resolve_params(atomic_o)))); });

    auto* extended = add_subcommand("extended", "extended Mukai data of the induced sheaf");
    add_params_opts(extended, extended_o);
    extended->callback([&] { emit(extended_report(build_scenario(resolve_params(extended_o)))); });

    auto* exts = add_subcommand("exts", "Ext dimensions of the induced sheaf");
    add_params_opts(exts, exts_o);
    exts->add_option("--hom12", hom12, "asserted dim Hom(E1, E2) (default 0)");
    exts->add_option("--hom21", hom21, "asserted dim Hom(E2, E1) (default 0)");
    exts->callback([&] {
        StabilityAssumptions assume;
        assume.hom12 = Integer(hom12);
        assume.hom21 = Integer(hom21);
        emit(exts_report(build_scenario(resolve_params(exts_o)), assume));
    });

    auto* jacobian = add_subcommand("jacobian", "determinant-curve linear system data");
    add_params_opts(jacobian, jacobian_o);
    jacobian->callback([&] { emit(jacobian_report(build_scenario(resolve_params(jacobian_o)))); });

    auto* fatighenti = add_subcommand("fatighenti", "reference tuple (1, 3, 1, 11) report");
    fatighenti->callback([] { emit(fatighenti_json()); });

    auto* suitable = add_subcommand("suitable", "a-suitability of h = x f + y g");
    suitable->add_option("--cone", suit_cone, "cone gram entries c,G")->required();
    suitable->add_option("--a", suit_a, "wall-square bound a > 0")->required();
    suitable->add_option("--h", suit_h, "class x,y meaning x f + y g")->required();
    suitable->callback([&] {
        const auto cone = cone_from(suit_cone);
        emit(suitable_report(parse_rat(suit_a, "--a"), vector_from(cone, suit_h, "--h"), cone));
    });

    auto* walls = add_subcommand("walls", "walls crossed by the segment from h0 to h1");
    walls->add_option("--cone", walls_cone, "cone gram entries c,G")->required();
    walls->add_option("--a", walls_a, "wall-square bound a > 0")->required();
    walls->add_option("--h0", walls_h0, "segment start x,y")->required();
    walls->add_option("--h1", walls_h1, "segment end x,y")->required();
    walls->callback([&] {
        const auto cone = cone_from(walls_cone);
        emit(walls_report(parse_rat(walls_a, "--a"), vector_from(cone, walls_h0, "--h0"),
                          vector_from(cone, walls_h1, "--h1"), cone));
    });

    auto* friedman = add_subcommand("friedman", "fiber shift making h0 + N f a-suitable");
    friedman->add_option("--cone", fried_cone, "cone gram entries c,G")->required();
    friedman->add_option("--a", fried_a, "wall-square bound a > 0")->required();
    friedman->add_option("--h", fried_h, "start class x,y")->required();
    friedman->callback([&] {
        const auto cone = cone_from(fried_cone);
        emit(friedman_report(parse_rat(fried_a, "--a"), vector_from(cone, fried_h, "--h"), cone));
    });

    auto* stimakota = add_subcommand("stimakota", "orthogonal-wall square bound for h");
    stimakota->add_option("--cone", stima_cone, "cone gram entries c,G")->required();
    stimakota->add_option("--h", stima_h, "class x,y")->required();
    stimakota->callback([&] {
        const auto cone = cone_from(stima_cone);
        emit(stimakota_report(vector_from(cone, stima_h, "--h"), cone));
    });

    auto* scan = add_subcommand("scan", "enumerate valid tuples over a box, one JSON per line");
    scan->add_option("--ranges", scan_ranges, "box r1max,amax,m0max,d0max")->required();
    scan->callback([&] {
        for (const auto& row : theorem_scan(ranges_from(scan_ranges), threads_from_env()))
            std::cout << scan_row_json(row).dump() << "\n";
    });

    auto* identities = add_subcommand("identities", "cross-identity suite over a box");
    identities->add_option("--ranges", ident_ranges, "box r1max,amax,m0max,d0max (default 6,6,60,30)");
    identities->callback([&] { emit(identities_report(ranges_from(ident_ranges))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const BadInput& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        emit(error_json(err_code_name(e.code()), e.which(), e.what()));
        return 2;
    }
    return 0;
}
