// Command-line surface for the orbifold Chern number library: exact
// criterion evaluation, parameter scans, the symbolic Riemann-Roch oracle,
// and jet generator enumeration. All verdict output is exact "p/q"; decimal
// approximations appear only behind --approx.

#include <orbcc/chern.hpp>
#include <orbcc/config.hpp>
#include <orbcc/criteria.hpp>
#include <orbcc/gg_oracle.hpp>
#include <orbcc/scan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using orbcc::Rational;

struct OutputOptions {
    std::string format = "text";  // text | csv | json
    std::string output_path;
    bool approx = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.output_path, "Write the report to a file");
    cmd->add_flag("--approx", out.approx,
                  "Add 6-significant-digit decimal approximations");
}

void emit(const OutputOptions& out, const std::string& report) {
    if (out.output_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream f(out.output_path, std::ios::binary);
        if (!f) {
            throw orbcc::Error("cannot open output file: " + out.output_path);
        }
        f << report;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw orbcc::ParseError("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<orbcc::Multiplicity> parse_mult_list(const std::string& csv) {
    std::vector<orbcc::Multiplicity> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(orbcc::parse_multiplicity(item));
    }
    if (out.empty()) {
        throw orbcc::ParseError("empty multiplicity list");
    }
    return out;
}

std::string render_verdict(const orbcc::CriterionVerdict& v,
                           const OutputOptions& out,
                           const std::vector<std::string>& notes) {
    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["tag"] = std::string(orbcc::theorem_name(v.tag));
        j["description"] = std::string(orbcc::theorem_description(v.tag));
        j["lhs"] = orbcc::render_rational(v.lhs);
        j["holds"] = v.holds;
        if (v.normalization) j["normalization"] = *v.normalization;
        if (out.approx) j["approx"] = orbcc::render_approx(v.lhs);
        if (!notes.empty()) j["notes"] = notes;
        return j.dump(2) + "\n";
    }
    if (out.format == "csv") {
        std::string s = "tag,lhs,holds\n";
        s += std::string(orbcc::theorem_name(v.tag)) + "," +
             orbcc::render_rational(v.lhs) + "," +
             (v.holds ? "true" : "false") + "\n";
        return s;
    }
    std::string s = "tag=" + std::string(orbcc::theorem_name(v.tag)) +
                    " lhs=" + orbcc::render_rational(v.lhs) +
                    " holds=" + (v.holds ? "true" : "false");
    if (v.normalization) {
        s += " normalization=" + std::to_string(*v.normalization);
    }
    if (out.approx) s += " approx=" + orbcc::render_approx(v.lhs);
    s += "\n";
    s += "criterion: " + std::string(orbcc::theorem_description(v.tag)) + "\n";
    for (const std::string& note : notes) {
        s += "note: " + note + "\n";
    }
    return s;
}

struct CriteriaArgs {
    std::string family;
    std::string config_path;
    long long d = 0, n = 0, c = 0, l = 0, d1 = 0, d2 = 0;
    int jet_order = 2;
    std::string m1 = "2", m2 = "2";
    std::string multiplicities;
    std::string c1_sq, c2;
};

int run_criteria(const CriteriaArgs& args, const OutputOptions& out) {
    orbcc::CriterionVerdict verdict{orbcc::Theorem::TheoremA, Rational(0), false, {}};
    std::vector<std::string> notes;

    if (args.family == "theorem-a" || args.family == "remark") {
        orbcc::ParsedConfig cfg = orbcc::parse_config(read_file(args.config_path));
        if (args.family == "remark") {
            if (!cfg.ambient) {
                throw orbcc::ParseError(
                    "the remark form needs a surface block in ambient form");
            }
            verdict = orbcc::remark_form_lhs(*cfg.ambient);
        } else {
            if (!cfg.surface) {
                throw orbcc::ParseError("config has no surface block");
            }
            verdict = orbcc::theorem_a_lhs(*cfg.surface);
        }
        if (cfg.surface &&
            orbcc::has_infinite_multiplicity(cfg.surface->components)) {
            notes.push_back(
                "infinite multiplicities evaluated as the limit 1/m = 0");
        }
    } else if (args.family == "plane-pair") {
        orbcc::PlanePairConfig cfg{args.d1, args.d2,
                                   orbcc::parse_multiplicity(args.m1),
                                   orbcc::parse_multiplicity(args.m2)};
        verdict = orbcc::plane_pair_lhs(cfg);
        if (cfg.m1.is_infinite() || cfg.m2.is_infinite()) {
            notes.push_back(
                "infinite multiplicities evaluated as the limit 1/m = 0");
        }
    } else if (args.family == "nodes-cusps") {
        verdict = orbcc::nodes_cusps_lhs(args.d, args.n, args.c);
    } else if (args.family == "nodal-surface") {
        verdict = orbcc::nodal_surface_lhs(args.d, args.l);
    } else if (args.family == "nevanlinna") {
        orbcc::NevanlinnaConfig cfg{parse_mult_list(args.multiplicities)};
        verdict = orbcc::nevanlinna_excess(cfg);
    } else if (args.family == "jet") {
        verdict = orbcc::jet_h0_coefficient(args.jet_order, args.d, args.l);
    } else if (args.family == "bogomolov") {
        if (args.c1_sq.empty() || args.c2.empty()) {
            throw orbcc::ParseError("bogomolov needs --c1-sq and --c2");
        }
        verdict = orbcc::bogomolov_stack({orbcc::parse_rational(args.c1_sq),
                                          orbcc::parse_rational(args.c2)});
    } else {
        throw orbcc::ParseError("unknown criteria family: \"" + args.family + "\"");
    }
    emit(out, render_verdict(verdict, out, notes));
    return 0;
}

struct ChernArgs {
    std::string family;
    std::string config_path;
    long long d = 0, n = 0, c = 0, l = 0, m = 5;
};

int run_chern(const ChernArgs& args, const OutputOptions& out) {
    std::string report;
    auto line = [&report, &out](const std::string& key, const Rational& v) {
        report += key + "=" + orbcc::render_rational(v);
        if (out.approx) report += " approx=" + orbcc::render_approx(v);
        report += "\n";
    };
    if (!args.config_path.empty()) {
        orbcc::ParsedConfig cfg = orbcc::parse_config(read_file(args.config_path));
        if (!cfg.surface) throw orbcc::ParseError("config has no surface block");
        const auto& s = *cfg.surface;
        line("log_c1_sq", s.log_c1_sq);
        line("log_c2", s.log_c2);
        orbcc::ChernNumbers ch = orbcc::stack_chern(s);
        line("c1_sq", ch.c1_sq);
        line("c2", ch.c2);
        line("c1_sq-c2", ch.c1_sq - ch.c2);
        if (orbcc::has_infinite_multiplicity(s.components)) {
            report += "note: infinite multiplicities evaluated as the limit 1/m = 0\n";
        }
    } else if (args.family == "nodes-cusps") {
        orbcc::ChernNumbers ch =
            orbcc::plane_nc_curve_chern({args.d, args.n, args.c, args.m});
        line("c1_sq", ch.c1_sq);
        line("c2", ch.c2);
        line("c1_sq-c2", ch.c1_sq - ch.c2);
        if (args.m != 5) {
            report += "note: m != 5 extrapolates the cusp order formula beyond "
                      "its published value\n";
        }
    } else if (args.family == "nodal-surface") {
        orbcc::ChernNumbers ch = orbcc::nodal_surface_chern({args.d, args.l});
        line("c1_sq", ch.c1_sq);
        line("c2", ch.c2);
        line("c1_sq-c2", ch.c1_sq - ch.c2);
    } else {
        throw orbcc::ParseError(
            "chern needs --config or --family nodes-cusps|nodal-surface");
    }
    emit(out, report);
    return 0;
}

struct ScanArgs {
    std::string family;
    std::string sweep;  // "name=lo..hi" or "name=lo..inf"
    long long d = 0, n = 0, c = 0, l = 0, d1 = 0, d2 = 0, m1 = 0, m2 = 0;
    int jet_order = 0;
};

orbcc::ScanRequest build_scan_request(const ScanArgs& args) {
    orbcc::ScanRequest req;
    req.family = orbcc::parse_scan_family(args.family);

    auto eq = args.sweep.find('=');
    auto dots = args.sweep.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
        throw orbcc::ParseError("--sweep expects name=lo..hi, got \"" +
                                args.sweep + "\"");
    }
    req.swept_name = args.sweep.substr(0, eq);
    std::string lo = args.sweep.substr(eq + 1, dots - eq - 1);
    std::string hi = args.sweep.substr(dots + 2);
    try {
        req.lo = std::stoll(lo);
        if (hi == "inf") {
            req.hi = req.lo - 1;  // empty finite range, infinity only
            req.include_infinity = true;
        } else if (!hi.empty() && hi.back() == '+' ) {
            throw std::invalid_argument(hi);
        } else {
            req.hi = std::stoll(hi);
        }
    } catch (const std::exception&) {
        throw orbcc::ParseError("bad sweep bounds in \"" + args.sweep + "\"");
    }

    auto set_fixed = [&req](const std::string& name, long long v) {
        if (v != 0 || name == "n" || name == "c" || name == "l") {
            if (req.swept_name != name) req.fixed[name] = v;
        }
    };
    set_fixed("d", args.d);
    set_fixed("n", args.n);
    set_fixed("c", args.c);
    set_fixed("l", args.l);
    set_fixed("d1", args.d1);
    set_fixed("d2", args.d2);
    if (args.m1 > 0) req.fixed["m1"] = args.m1;
    if (args.m2 > 0) req.fixed["m2"] = args.m2;
    if (args.jet_order > 0) req.fixed["k"] = args.jet_order;
    return req;
}

int run_scan(const ScanArgs& args, const OutputOptions& out) {
    orbcc::ScanRequest req = build_scan_request(args);
    std::vector<orbcc::ScanRow> rows = orbcc::grid_scan(req);
    std::optional<long long> minimal;
    for (const orbcc::ScanRow& row : rows) {
        if (row.holds && !row.is_infinity) {
            minimal = row.value;
            break;
        }
    }

    std::string report;
    if (out.format == "csv") {
        report = "param,lhs,holds\n";
        for (const auto& row : rows) {
            report += row.param_str() + "," + orbcc::render_rational(row.lhs) +
                      "," + (row.holds ? "true" : "false") + "\n";
        }
    } else if (out.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = std::string(orbcc::scan_family_name(req.family));
        j["swept"] = req.swept_name;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json r;
            r["param"] = row.param_str();
            r["lhs"] = orbcc::render_rational(row.lhs);
            r["holds"] = row.holds;
            if (out.approx) r["approx"] = orbcc::render_approx(row.lhs);
            j["rows"].push_back(std::move(r));
        }
        if (minimal) {
            j["minimal"] = *minimal;
        } else {
            j["minimal"] = nullptr;
        }
        report = j.dump(2) + "\n";
    } else {
        for (const auto& row : rows) {
            report += req.swept_name + "=" + row.param_str() +
                      " lhs=" + orbcc::render_rational(row.lhs) +
                      " holds=" + (row.holds ? "true" : "false");
            if (out.approx) report += " approx=" + orbcc::render_approx(row.lhs);
            report += "\n";
        }
        report += "minimal " + req.swept_name + " = " +
                  (minimal ? std::to_string(*minimal) : "none") + "\n";
    }
    emit(out, report);
    return 0;
}

int run_oracle(int jet_order, std::optional<long long> exact_n,
               const OutputOptions& out) {
    std::string report;
    if (exact_n) {
        orbcc::CoeffForm f = orbcc::chi_jet_exact(jet_order, *exact_n);
        report = orbcc::render_coeff_form(f) + "\n";
    } else {
        orbcc::LeadingCoefficient lead = orbcc::leading_coefficient(jet_order);
        report = orbcc::render_coeff_form(lead.form) + ", degree " +
                 std::to_string(lead.degree) + "\n";
    }
    emit(out, report);
    return 0;
}

int run_generators(int k, long long weight, const std::string& mults,
                   const OutputOptions& out) {
    auto [count, monomials] =
        orbcc::count_orbifold_jet_generators(k, weight, parse_mult_list(mults));
    std::string report = "count=" + std::to_string(count) + "\n";
    for (const orbcc::JetMonomial& mono : monomials) {
        report += "exps=[";
        for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
            if (i) report += ";";
            for (std::size_t j = 0; j < mono.exponents[i].size(); ++j) {
                if (j) report += ",";
                report += std::to_string(mono.exponents[i][j]);
            }
        }
        report += "] ceil=[";
        for (std::size_t i = 0; i < mono.ceil_powers.size(); ++i) {
            if (i) report += ",";
            report += std::to_string(mono.ceil_powers[i]);
        }
        report += "]\n";
    }
    emit(out, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbifold Chern numbers and hyperbolicity criteria"};
    app.require_subcommand(1);

    CriteriaArgs crit;
    OutputOptions crit_out;
    CLI::App* criteria = app.add_subcommand(
        "criteria", "Evaluate a positivity criterion (exact verdict)");
    criteria->add_option("--family", crit.family,
                         "theorem-a|remark|plane-pair|nodes-cusps|"
                         "nodal-surface|nevanlinna|jet|bogomolov")
        ->required();
    criteria->add_option("--config", crit.config_path, "Configuration file");
    criteria->add_option("-d", crit.d, "Degree");
    criteria->add_option("-n", crit.n, "Node count");
    criteria->add_option("-c", crit.c, "Cusp count");
    criteria->add_option("-l", crit.l, "Node count (surfaces)");
    criteria->add_option("--d1", crit.d1, "Degree of the first curve");
    criteria->add_option("--d2", crit.d2, "Degree of the second curve");
    criteria->add_option("--m1", crit.m1, "Multiplicity of the first curve");
    criteria->add_option("--m2", crit.m2, "Multiplicity of the second curve");
    criteria->add_option("-k,--jet-order", crit.jet_order, "Jet order (2 or 3)");
    criteria->add_option("--multiplicities", crit.multiplicities,
                         "Comma-separated multiplicities (integers or inf)");
    criteria->add_option("--c1-sq", crit.c1_sq, "c1^2 as p/q");
    criteria->add_option("--c2", crit.c2, "c2 as p/q");
    add_output_flags(criteria, crit_out);

    ChernArgs chern;
    OutputOptions chern_out;
    CLI::App* chern_cmd =
        app.add_subcommand("chern", "Compute exact orbifold Chern numbers");
    chern_cmd->add_option("--config", chern.config_path, "Configuration file");
    chern_cmd->add_option("--family", chern.family,
                          "nodes-cusps|nodal-surface");
    chern_cmd->add_option("-d", chern.d, "Degree");
    chern_cmd->add_option("-n", chern.n, "Node count");
    chern_cmd->add_option("-c", chern.c, "Cusp count");
    chern_cmd->add_option("-l", chern.l, "Node count (surfaces)");
    chern_cmd->add_option("-m", chern.m, "Multiplicity (plane curves, 2..5)");
    add_output_flags(chern_cmd, chern_out);

    ScanArgs scan;
    OutputOptions scan_out;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "Sweep a parameter over a criterion");
    scan_cmd->add_option("--family", scan.family,
                         "plane-pair|nodes-cusps|nodal-surface|nodal-jet")
        ->required();
    scan_cmd->add_option("--sweep", scan.sweep, "name=lo..hi (inclusive)")
        ->required();
    scan_cmd->add_option("-d", scan.d, "Degree");
    scan_cmd->add_option("-n", scan.n, "Node count");
    scan_cmd->add_option("-c", scan.c, "Cusp count");
    scan_cmd->add_option("-l", scan.l, "Node count (surfaces)");
    scan_cmd->add_option("--d1", scan.d1, "Degree of the first curve");
    scan_cmd->add_option("--d2", scan.d2, "Degree of the second curve");
    scan_cmd->add_option("--m1", scan.m1, "Multiplicity of the first curve");
    scan_cmd->add_option("--m2", scan.m2, "Multiplicity of the second curve");
    scan_cmd->add_option("-k,--jet-order", scan.jet_order, "Jet order");
    add_output_flags(scan_cmd, scan_out);

    int oracle_k = 1;
    std::optional<long long> oracle_exact;
    OutputOptions oracle_out;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "Symbolic Riemann-Roch: asymptotic and exact chi forms");
    oracle_cmd->add_option("-k,--jet-order", oracle_k, "Jet order (1..4)")
        ->required();
    oracle_cmd->add_option("--exact", oracle_exact,
                           "Print the exact chi form at this weight instead");
    add_output_flags(oracle_cmd, oracle_out);

    int gen_k = 1;
    long long gen_n = 0;
    std::string gen_mults;
    OutputOptions gen_out;
    CLI::App* gen_cmd = app.add_subcommand(
        "generators", "Enumerate local generators of jet differential sheaves");
    gen_cmd->add_option("-k,--jet-order", gen_k, "Jet order")->required();
    gen_cmd->add_option("-N,--weight", gen_n, "Weighted degree")->required();
    gen_cmd->add_option("--multiplicities", gen_mults,
                        "Comma-separated finite multiplicities, one per variable")
        ->required();
    add_output_flags(gen_cmd, gen_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (criteria->parsed()) return run_criteria(crit, crit_out);
        if (chern_cmd->parsed()) return run_chern(chern, chern_out);
        if (scan_cmd->parsed()) return run_scan(scan, scan_out);
        if (oracle_cmd->parsed()) {
            return run_oracle(oracle_k, oracle_exact, oracle_out);
        }
        if (gen_cmd->parsed()) {
            return run_generators(gen_k, gen_n, gen_mults, gen_out);
        }
    } catch (const orbcc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const orbcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
