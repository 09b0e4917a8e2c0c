// fppkit command-line front end.
//
// Subcommands: hj, sing, surface, isect, solve-fiber, exclusions, classes,
// verify-paper. Exit codes: 0 success/pass, 1 check failure, 2 usage error.

#include "fppkit/fppkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define FPPKIT_ISATTY _isatty
#define FPPKIT_FILENO _fileno
#else
#include <unistd.h>
#define FPPKIT_ISATTY isatty
#define FPPKIT_FILENO fileno
#endif

namespace {

using nlohmann::ordered_json;
using namespace fppkit;

bool use_color() {
    const char* env = std::getenv("FPPKIT_COLOR");
    if (env && std::string(env) == "0")
        return false;
    return FPPKIT_ISATTY(FPPKIT_FILENO(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
    if (!use_color())
        return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string green(const std::string& t) { return paint(t, "32"); }
std::string red(const std::string& t) { return paint(t, "31"); }

std::vector<long> parse_entries(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty())
            throw std::invalid_argument("not an integer list entry: '" + item + "'");
        out.push_back(value);
    }
    return out;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return make_rat(parse_int(s), 1);
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::pair<Int, Int> parse_fraction(const std::string& s) {
    Rat r = parse_rat(s);
    return {r.get_num(), r.get_den()};
}

// "y1:2=1,y2:1=1,y1:3=2"
void parse_hits(const std::string& s, ExceptionalIncidence& inc) {
    if (s.empty())
        return;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        auto eq = item.find('=');
        if (colon == std::string::npos || eq == std::string::npos || eq < colon)
            throw std::invalid_argument("bad hit '" + item + "' (expected label:index=count)");
        inc.add_hit(item.substr(0, colon),
                    std::stoi(item.substr(colon + 1, eq - colon - 1)),
                    Int(item.substr(eq + 1)));
    }
}

SurfaceModel resolve_model(const std::string& name_or_path) {
    for (auto& m : quotient_presets())
        if (m.name == name_or_path)
            return m;
    return load_model(name_or_path);
}

ordered_json uv_json(const UVSequences& uv) {
    ordered_json j;
    j["q"] = to_long(uv.q);
    j["u"] = ordered_json::array();
    j["v"] = ordered_json::array();
    for (const auto& x : uv.u)
        j["u"].push_back(to_long(x));
    for (const auto& x : uv.v)
        j["v"].push_back(to_long(x));
    return j;
}

std::string entries_str(const HJString& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.entries.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.entries[i]);
    return out + "]";
}

std::string int_row(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + v[i].get_str();
    return out;
}

void print_hj(const HJString& s, bool json) {
    const auto uv = uv_sequences(s);
    const Rat value = hj_eval(s);
    if (json) {
        ordered_json j;
        j["string"] = s.entries;
        j["value"] = rat_to_json(value);
        j["uv"] = uv_json(uv);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "string: " << entries_str(s) << "\n"
              << "value:  " << rat_str(value) << "\n"
              << "q:      " << uv.q.get_str() << "\n"
              << "u:      " << int_row(uv.u) << "\n"
              << "v:      " << int_row(uv.v) << "\n";
}

int run_hj(const std::string& action, const std::string& arg, bool json) {
    if (action == "eval") {
        print_hj(HJString(parse_entries(arg)), json);
    } else {
        auto [q, a] = parse_fraction(arg);
        print_hj(hj_expand(q, a), json);
    }
    return 0;
}

int run_sing(const std::string& arg, bool json) {
    auto [q, a] = parse_fraction(arg);
    SingularityType p(q, a, "p");
    const auto d = discrepancy(p);
    if (json) {
        ordered_json j;
        j["q"] = to_long(p.q);
        j["a"] = to_long(p.a);
        j["string"] = p.string.entries;
        j["uv"] = uv_json(p.uv);
        j["discrepancy"] = ordered_json::array();
        for (const auto& c : d.coefficients)
            j["discrepancy"].push_back(rat_to_json(c));
        j["dpk"] = rat_to_json(d.dpk);
        j["dp2"] = rat_to_json(d.dp2);
        j["det"] = to_long(local_discriminant_order(p));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "singularity: 1/" << p.q.get_str() << "(1," << p.a.get_str() << ")\n"
              << "string:      " << entries_str(p.string) << "\n"
              << "u:           " << int_row(p.uv.u) << "\n"
              << "v:           " << int_row(p.uv.v) << "\n"
              << "|det|:       " << local_discriminant_order(p).get_str() << "\n";
    std::cout << "discrepancy: (";
    for (std::size_t i = 0; i < d.coefficients.size(); ++i)
        std::cout << (i ? ", " : "") << rat_str(d.coefficients[i]);
    std::cout << ")\n"
              << "Dp.K:        " << rat_str(d.dpk) << "\n"
              << "Dp^2:        " << rat_str(d.dp2) << "\n";
    return 0;
}

ordered_json invariants_json(const SurfaceModel& m, const SurfaceInvariants& inv) {
    ordered_json j;
    j["model"] = model_to_json(m);
    j["k2_s"] = rat_to_json(inv.k2_s);
    j["det_r"] = to_long(inv.det_r);
    j["d"] = to_long(inv.d);
    j["d_prime"] = to_long(inv.d_prime);
    if (inv.sqrt_d_prime)
        j["sqrt_d_prime"] = to_long(*inv.sqrt_d_prime);
    return j;
}

int run_surface(const SurfaceModel& m, bool json) {
    try {
        const auto inv = compute_invariants(m);
        if (json) {
            auto j = invariants_json(m, inv);
            j["status"] = "ok";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "model:   " << m.name << "\n"
                      << "K_S^2:   " << rat_str(inv.k2_s) << "\n"
                      << "|det R|: " << inv.det_r.get_str() << "\n"
                      << "D:       " << inv.d.get_str() << "\n"
                      << "D':      " << inv.d_prime.get_str() << "\n";
            if (inv.sqrt_d_prime)
                std::cout << "sqrt D': " << inv.sqrt_d_prime->get_str() << "\n";
            std::cout << green("valid Q-homology projective plane data") << "\n";
        }
        return 0;
    } catch (const std::domain_error& e) {
        if (json) {
            ordered_json j;
            j["model"] = model_to_json(m);
            j["status"] = "invalid";
            j["error"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << red(std::string("validation failed: ") + e.what()) << "\n";
        }
        return 1;
    }
}

int run_isect(const std::string& which, const SurfaceModel& m, const std::string& m_coeff,
              const std::string& hits, bool json) {
    ExceptionalIncidence inc;
    inc.m = parse_rat(m_coeff);
    parse_hits(hits, inc);
    const Rat value = which == "ek" ? ek(m, inc) : e2(m, inc);
    if (json) {
        ordered_json j;
        j["model"] = m.name;
        j["m"] = rat_to_json(inc.m);
        j["hits"] = ordered_json::array();
        for (const auto& [key, count] : inc.hits)
            j["hits"].push_back(
                {{"point", key.first}, {"component", key.second}, {"count", to_long(count)}});
        j[which] = rat_to_json(value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << which << " = " << rat_str(value) << "\n";
    }
    return 0;
}

ordered_json solution_json(const FiberSolution& s) {
    ordered_json j;
    j["k"] = ordered_json::array();
    for (int i = 0; i < 3; ++i)
        j["k"].push_back({s.k[i][0], s.k[i][1], s.k[i][2]});
    j["m"] = {s.m[0], s.m[1], s.m[2]};
    return j;
}

int run_solve_fiber(const std::string& case_str, int mu, bool symmetric_only, bool json) {
    FiberScenario scenario(elliptic_case_from_string(case_str), mu);
    const auto solutions = symmetric_only ? symmetric_solutions(scenario) : solve(scenario);
    if (json) {
        ordered_json j;
        j["case"] = to_string(scenario.elliptic_case);
        j["mu"] = scenario.mu;
        j["row_sum"] = scenario.row_sum;
        j["symmetric_only"] = symmetric_only;
        j["solutions"] = ordered_json::array();
        for (const auto& s : solutions)
            j["solutions"].push_back(solution_json(s));
        j["count"] = solutions.size();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "case " << to_string(scenario.elliptic_case) << ", mu = " << scenario.mu
              << ", row sum = " << scenario.row_sum << (symmetric_only ? ", symmetric only" : "")
              << "\n";
    if (solutions.empty()) {
        std::cout << "no solutions (infeasible)\n";
        return 0;
    }
    for (const auto& s : solutions) {
        for (int i = 0; i < 3; ++i) {
            std::cout << (i == 1 ? "k = " : "    ") << "| ";
            for (int j = 0; j < 3; ++j)
                std::cout << s.k[i][j] << " ";
            std::cout << "|" << (i == 1 ? "   m = (" + std::to_string(s.m[0]) + ", " +
                                              std::to_string(s.m[1]) + ", " +
                                              std::to_string(s.m[2]) + ")"
                                        : "")
                      << "\n";
        }
        std::cout << "\n";
    }
    std::cout << solutions.size() << " solution(s)\n";
    return 0;
}

int run_exclusions(const std::string& case_str, bool json) {
    const auto report = exclusion_report(elliptic_case_from_string(case_str));
    if (json) {
        ordered_json j;
        j["case"] = to_string(report.elliptic_case);
        j["verdicts"] = ordered_json::array();
        for (const auto& v : report.verdicts)
            j["verdicts"].push_back({{"mu", v.mu},
                                     {"classification", to_string(v.classification)},
                                     {"detail", v.detail},
                                     {"solutions", v.solution_count}});
        j["admissible"] = report.admissible;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "case " << to_string(report.elliptic_case) << "\n";
    for (const auto& v : report.verdicts)
        std::cout << "  mu = " << v.mu << ": " << to_string(v.classification) << " ("
                  << v.detail << ")\n";
    std::cout << "admissible multiplicities: {";
    for (std::size_t i = 0; i < report.admissible.size(); ++i)
        std::cout << (i ? "," : "") << report.admissible[i];
    std::cout << "}\n";
    return 0;
}

std::vector<long> parse_group(const std::string& s) { return parse_entries(s); }

int run_classes_chi(long m, bool json) {
    const Int value = chi(m);
    if (json) {
        ordered_json j;
        j["m"] = m;
        j["chi"] = to_long(value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi(" << m << "L + t) = " << value.get_str() << "\n";
    }
    return 0;
}

int run_classes_cube_roots(const std::string& group_str, std::optional<bool> divisible,
                           bool json) {
    TorsionGroup g(parse_group(group_str));
    const Int count = cube_roots_of_K(g, divisible);
    if (json) {
        ordered_json j;
        j["group"] = g.cyclic_orders;
        j["cube_roots"] = to_long(count);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cubic roots of K over " << g.str() << ": " << count.get_str() << "\n";
    }
    return 0;
}

int run_classes_exclusion(const std::string& case_str, int mu, bool json) {
    const auto cert = multiplicity2_exclusion(elliptic_case_from_string(case_str), mu);
    if (json) {
        ordered_json j;
        j["case"] = to_string(cert.elliptic_case);
        j["mu"] = cert.mu;
        j["per_curve_multiple"] = cert.per_curve_multiple;
        j["steps"] = ordered_json::array();
        for (const auto& s : cert.steps)
            j["steps"].push_back({{"name", s.name}, {"statement", s.statement}});
        j["contradiction"] = cert.contradiction;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "case " << to_string(cert.elliptic_case) << ", mu = " << cert.mu
              << ", per-curve class " << cert.per_curve_multiple << "L + t\n";
    for (const auto& s : cert.steps)
        std::cout << "  [" << s.name << "] " << s.statement << "\n";
    std::cout << red("contradiction: " + cert.contradiction) << "\n";
    return 0;
}

int run_verify(const std::string& only, const std::string& json_path, bool mutate) {
    VerifyOptions options;
    options.only = only;
    options.mutate_singularity_order = mutate;
    const auto report = verify_paper(options);
    if (!json_path.empty()) {
        const std::string payload = report.to_json_string();
        if (json_path == "-") {
            std::cout << payload;
        } else {
            std::ofstream out(json_path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write " + json_path);
            out << payload;
        }
    }
    if (json_path != "-") {
        for (const auto& c : report.checks) {
            std::string tag = c.status == CheckStatus::pass   ? green("PASS ")
                              : c.status == CheckStatus::fail ? red("FAIL ")
                                                              : "AXIOM";
            std::cout << "[" << tag << "] " << c.name;
            if (c.status == CheckStatus::fail)
                std::cout << "\n    expected: " << c.expected
                          << "\n    computed: " << c.computed;
            std::cout << "\n";
        }
        std::cout << report.checks.size() << " checks, " << report.failures() << " failure(s): "
                  << (report.pass() ? green("PASS") : red("FAIL")) << "\n";
    }
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection theory of Q-homology projective planes "
                 "with cyclic quotient singularities"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text")->configurable(false);

    // hj
    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions");
    hj->require_subcommand(1);
    std::string hj_entries, hj_fraction;
    auto* hj_eval_cmd = hj->add_subcommand("eval", "evaluate a string, e.g. 2,2,3");
    hj_eval_cmd->add_option("entries", hj_entries, "comma-separated entries")->required();
    auto* hj_expand_cmd = hj->add_subcommand("expand", "expand a fraction, e.g. 7/5");
    hj_expand_cmd->add_option("fraction", hj_fraction, "q/a with q > a >= 1")->required();

    // sing
    auto* sing = app.add_subcommand("sing", "cyclic quotient singularity data");
    sing->require_subcommand(1);
    std::string sing_fraction;
    auto* sing_info = sing->add_subcommand("info", "string, u/v and discrepancy of 1/q(1,a)");
    sing_info->add_option("fraction", sing_fraction, "q/a")->required();

    // surface
    auto* surface = app.add_subcommand("surface", "Q-homology projective plane invariants");
    surface->require_subcommand(1);
    std::string surface_model_path, surface_preset_name;
    auto* surface_check = surface->add_subcommand("check", "validate a JSON model file");
    surface_check->add_option("--model", surface_model_path, "path to model JSON")->required();
    auto* surface_preset = surface->add_subcommand("preset", "run a built-in model");
    surface_preset->add_option("name", surface_preset_name, "X/C3, X/C3^2, X/C7 or X/(7:3)")
        ->required();

    // isect
    auto* isect = app.add_subcommand("isect", "intersection numbers E.K and E^2");
    isect->require_subcommand(1);
    std::string isect_model = "X/C7", isect_m = "0", isect_hits;
    for (const char* which : {"ek", "e2"}) {
        auto* sub = isect->add_subcommand(which, std::string("compute ") + which);
        sub->add_option("--model", isect_model, "preset name or model JSON path");
        sub->add_option("--m", isect_m, "leading coefficient (rational)");
        sub->add_option("--hits", isect_hits, "label:index=count, comma-separated");
    }

    // solve-fiber
    auto* solve_cmd = app.add_subcommand("solve-fiber", "enumerate I9-fibre incidence matrices");
    std::string fiber_case;
    int fiber_mu = 1;
    bool symmetric_only = false;
    solve_cmd->add_option("--case", fiber_case, "elliptic case: 2,3 / 2,4 / 3,3")->required();
    solve_cmd->add_option("--mu", fiber_mu, "fibre multiplicity")->required();
    solve_cmd->add_flag("--symmetric-only", symmetric_only, "rotation-symmetric solutions only");

    // exclusions
    auto* excl = app.add_subcommand("exclusions", "classify candidate fibre multiplicities");
    std::string excl_case;
    excl->add_option("--case", excl_case, "elliptic case: 2,3 / 2,4 / 3,3")->required();

    // classes
    auto* classes = app.add_subcommand("classes", "divisor classes on a fake projective plane");
    classes->require_subcommand(1);
    long chi_m = 0;
    auto* classes_chi = classes->add_subcommand("chi", "Euler characteristic of mL + t");
    classes_chi->add_option("--m", chi_m, "coefficient of the ample generator")->required();
    std::string group_str;
    bool div_flag = false, indiv_flag = false;
    auto* classes_roots = classes->add_subcommand("cube-roots", "number of cubic roots of K");
    classes_roots->add_option("--group", group_str, "cyclic orders, e.g. 2,2,2")->required();
    classes_roots->add_flag("--k-divisible", div_flag, "assert K divisible by 3");
    classes_roots->add_flag("--k-indivisible", indiv_flag, "assert K not divisible by 3");
    std::string cls_case;
    int cls_mu = 2;
    auto* classes_excl = classes->add_subcommand("exclusion", "torsion/section contradiction");
    classes_excl->add_option("--case", cls_case, "elliptic case")->required();
    classes_excl->add_option("--mu", cls_mu, "fibre multiplicity")->required();

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run every check and report");
    std::string only, json_out;
    bool mutate = false;
    verify->add_option("--only", only, "restrict to one check group "
                                       "(hj, sing, surface, isect, fiber, classes, proof, axiom)");
    verify->add_option("--json", json_out, "write the JSON report to a file ('-' for stdout)");
    verify->add_flag("--selftest-mutate", mutate,
                     "poison the three-point model to demonstrate failure detection");

    // Let --json (defined on the root) be given after any subcommand.
    auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hj_eval_cmd->parsed())
            return run_hj("eval", hj_entries, json);
        if (hj_expand_cmd->parsed())
            return run_hj("expand", hj_fraction, json);
        if (sing_info->parsed())
            return run_sing(sing_fraction, json);
        if (surface_check->parsed())
            return run_surface(load_model(surface_model_path), json);
        if (surface_preset->parsed())
            return run_surface(find_preset(surface_preset_name), json);
        if (isect->parsed()) {
            const std::string which = isect->get_subcommands().front()->get_name();
            return run_isect(which, resolve_model(isect_model), isect_m, isect_hits, json);
        }
        if (solve_cmd->parsed())
            return run_solve_fiber(fiber_case, fiber_mu, symmetric_only, json);
        if (excl->parsed())
            return run_exclusions(excl_case, json);
        if (classes_chi->parsed())
            return run_classes_chi(chi_m, json);
        if (classes_roots->parsed()) {
            std::optional<bool> divisible;
            if (div_flag)
                divisible = true;
            else if (indiv_flag)
                divisible = false;
            return run_classes_cube_roots(group_str, divisible, json);
        }
        if (classes_excl->parsed())
            return run_classes_exclusion(cls_case, cls_mu, json);
        if (verify->parsed())
            return run_verify(only, json_out, mutate);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help() << "\n";
    return 2;
}
