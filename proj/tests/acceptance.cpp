// Acceptance gate: one line per criterion, PASS or FAIL, nothing faked.
// Exits nonzero when any criterion fails. argv[1] is the path to the CLI
// binary (used by the determinism criterion).

#include <orbcc/chern.hpp>
#include <orbcc/config.hpp>
#include <orbcc/criteria.hpp>
#include <orbcc/gg_oracle.hpp>
#include <orbcc/scan.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace orbcc;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
              << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

Rational q(const char* s) { return parse_rational(s); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        struct Expected {
            int k;
            CoeffForm form;
        };
        const std::vector<Expected> expected{
            {1, {q("1/6"), q("-1/6"), Rational(0)}},
            {2, {q("7/384"), q("-5/384"), Rational(0)}},
            {3, {q("85/7776"), q("-49/7776"), Rational(0)}},
        };
        for (const Expected& e : expected) {
            LeadingCoefficient got = leading_coefficient(e.k);
            if (!(got.form == e.form)) {
                ok = false;
                detail += (detail.empty() ? "" : "; ");
                detail += "k=" + std::to_string(e.k) + " got " +
                          render_coeff_form(got.form) + ", expected " +
                          render_coeff_form(e.form);
            }
        }
        double dt = seconds_since(t0);
        if (dt >= 60.0) {
            ok = false;
            detail += (detail.empty() ? "" : "; ");
            detail += "took " + std::to_string(dt) + " s";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "asymptotic oracle coefficients for jet orders 1, 2, 3", ok,
           detail);
}

void criterion_2() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> ncomp(1, 4);
    std::uniform_int_distribution<long long> genus(0, 10);
    std::uniform_int_distribution<long long> mult(1, 100);
    std::uniform_int_distribution<long long> diag(-5, 25);
    std::uniform_int_distribution<long long> off(0, 25);
    std::uniform_int_distribution<long long> chern(-20, 20);

    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 120 && ok; ++trial) {
        const int n = ncomp(rng);
        AmbientSurfaceData amb;
        amb.c1_sq = chern(rng);
        amb.c2 = chern(rng);
        for (int i = 0; i < n; ++i) {
            amb.components.push_back(
                {"C" + std::to_string(i + 1), genus(rng),
                 Multiplicity(mult(rng))});
        }
        std::vector<std::vector<long long>> rows(n,
                                                 std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            rows[i][i] = diag(rng);
            for (int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = off(rng);
        }
        amb.intersections = IntersectionMatrix(std::move(rows));

        SmoothOrbifoldSurface s = surface_from_ambient(amb);
        Rational lhs = theorem_a_lhs(s).lhs;
        if (lhs != stack_c1_sq(s) - stack_c2(s)) {
            ok = false;
            detail = "stack identity fails at trial " + std::to_string(trial);
        }
        if (lhs != remark_form_lhs(amb).lhs) {
            ok = false;
            detail = "ambient form disagrees at trial " + std::to_string(trial);
        }
    }
    report(2, "criterion identities on 120 randomized configurations", ok,
           detail);
}

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    CriterionVerdict a = plane_pair_lhs({5, 5, Multiplicity(69), Multiplicity(69)});
    CriterionVerdict b = plane_pair_lhs({5, 5, Multiplicity(68), Multiplicity(68)});
    if (a.lhs != q("6/4761") || !a.holds) {
        ok = false;
        detail = "m=69 gave " + render_rational(a.lhs);
    }
    if (b.lhs != q("-61/4624") || b.holds) {
        ok = false;
        detail = "m=68 gave " + render_rational(b.lhs);
    }
    ScanRequest req;
    req.family = ScanFamily::PlanePair;
    req.fixed = {{"d1", 5}, {"d2", 5}};
    req.swept_name = "m";
    req.lo = 2;
    req.hi = 100;
    if (minimal_passing(req) != 69) {
        ok = false;
        detail = "minimal multiplicity is not 69";
    }
    if (seconds_since(t0) >= 1.0) {
        ok = false;
        detail = "too slow";
    }
    report(3, "two-quintic threshold at multiplicity 69", ok, detail);
}

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    if (cusp_order(5) != Rational(600)) {
        ok = false;
        detail = "cusp order at 5 is not 600";
    }
    if (node_order(5) != 25) {
        ok = false;
        detail = "node order at 5 is not 25";
    }
    for (long long d = 4; d <= 12 && ok; ++d) {
        long long gmax = (d - 1) * (d - 2) / 2;
        for (long long n = 0; n <= 20 && ok; ++n) {
            for (long long c = 0; c <= 20 && ok; ++c) {
                if (n + c > gmax) continue;
                Rational lhs = nodes_cusps_lhs(d, n, c).lhs;
                Rational diff =
                    bogomolov_stack(plane_nc_curve_chern({d, n, c, 5})).lhs;
                if (lhs * q("4/25") != diff) {
                    ok = false;
                    detail = "factorization fails at d=" + std::to_string(d) +
                             " n=" + std::to_string(n) +
                             " c=" + std::to_string(c);
                }
            }
        }
    }
    if (seconds_since(t0) >= 5.0) {
        ok = false;
        detail = "too slow";
    }
    report(4, "node/cusp criterion factors through the stack difference", ok,
           detail);
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    ChernNumbers q5 = nodal_surface_chern({5, 31});
    if (q5.c1_sq - q5.c2 != q("-7/2")) {
        ok = false;
        detail = "31-node quintic difference is " +
                 render_rational(q5.c1_sq - q5.c2);
    }
    ScanRequest req;
    req.family = ScanFamily::NodalSurface;
    req.fixed = {{"d", 6}};
    req.swept_name = "l";
    req.lo = 0;
    req.hi = 200;
    if (minimal_passing(req) != 57) {
        ok = false;
        detail = "sextic threshold is not 57 nodes";
    }
    for (long long d = 5; d <= 15 && ok; ++d) {
        for (long long l = 0; l <= 200; ++l) {
            Rational expect =
                q("3/2") * (Rational(l) - q("8/3") * (d * d - q("5/2") * d));
            if (nodal_surface_lhs(d, l).lhs != expect) {
                ok = false;
                detail = "closed form fails at d=" + std::to_string(d) +
                         " l=" + std::to_string(l);
                break;
            }
        }
    }
    report(5, "nodal surface thresholds and closed form", ok, detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    CriterionVerdict j2 = jet_h0_coefficient(2, 5, 31);
    CriterionVerdict j3 = jet_h0_coefficient(3, 5, 31);
    if (j2.lhs != q("-15/2") || j2.holds) {
        ok = false;
        detail = "order 2 gave " + render_rational(j2.lhs);
    }
    if (j3.lhs != q("17/2") || !j3.holds) {
        ok = false;
        detail = "order 3 gave " + render_rational(j3.lhs);
    }
    ScanRequest req;
    req.family = ScanFamily::NodalJet;
    req.fixed = {{"d", 5}, {"k", 3}};
    req.swept_name = "l";
    req.lo = 0;
    req.hi = 60;
    if (minimal_passing(req) != 31) {
        ok = false;
        detail = "order-3 node threshold is not 31";
    }
    report(6, "order-3 jets reach the 31-node quintic where order 2 fails", ok,
           detail);
}

void criterion_7() {
    using M = Multiplicity;
    bool ok = true;
    std::string detail;
    CriterionVerdict a = nevanlinna_excess({{M(2), M(3), M(7)}});
    CriterionVerdict b = nevanlinna_excess({{M(2), M(3), M(6)}});
    CriterionVerdict c =
        nevanlinna_excess({{M::infinity(), M::infinity(), M::infinity()}});
    if (a.lhs != q("1/42") || !a.holds) ok = false, detail = "(2,3,7)";
    if (b.lhs != Rational(0) || b.holds) ok = false, detail = "(2,3,6)";
    if (c.lhs != Rational(1) || !c.holds) ok = false, detail = "(inf,inf,inf)";
    report(7, "ramification excess on the line", ok, detail);
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    auto check = [&](const char* name, const CoeffForm& got,
                     const CoeffForm& expect) {
        if (!(got == expect)) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += std::string(name) + " = " + render_coeff_form(got) +
                      ", expected " + render_coeff_form(expect);
        }
    };
    check("chi(Omega)", chi_graded_term(Composition{{1}}),
          {Rational(0), Rational(-1), Rational(2)});
    check("chi(S^2 Omega)", chi_graded_term(Composition{{2}}),
          {Rational(1), Rational(-3), Rational(3)});
    check("chi(order 2, weight 2)", chi_jet_exact(2, 2),
          {Rational(1), Rational(-4), Rational(5)});
    report(8, "oracle small-value cross-checks", ok, detail);
}

// --- criterion 9: CLI determinism and exit codes ---

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& args,
                  const std::string& tmp) {
    std::string cmd = cli + " " + args + " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (rc >= 0 && rc < 256) ? rc : rc / 256;
    std::ifstream f(tmp, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    r.output = ss.str();
    return r;
}

void criterion_9(const std::string& cli) {
    bool ok = true;
    std::string detail;
    const std::string tmp1 = "acceptance_run1.txt";
    const std::string tmp2 = "acceptance_run2.txt";
    const std::vector<std::string> examples{
        "criteria --family nodal-surface -d 5 -l 31",
        "criteria --family plane-pair --d1 5 --d2 5 --m1 69 --m2 69",
        "oracle --jet-order 3",
        "scan --family plane-pair --d1 5 --d2 5 --sweep m=2..100 --format csv",
        "generators --jet-order 2 --weight 3 --multiplicities 2",
    };
    for (const std::string& ex : examples) {
        RunResult a = run_cli(cli, ex, tmp1);
        RunResult b = run_cli(cli, ex, tmp2);
        if (a.output != b.output || a.exit_code != b.exit_code) {
            ok = false;
            detail = "nondeterministic output for: " + ex;
        }
        if (a.exit_code != 0) {
            ok = false;
            detail = "exit code " + std::to_string(a.exit_code) + " for: " + ex;
        }
    }
    RunResult bad =
        run_cli(cli, "criteria --family nodal-surface -d 4 -l 0", tmp1);
    if (bad.exit_code != 1) {
        ok = false;
        detail = "invalid input should exit 1, got " +
                 std::to_string(bad.exit_code);
    }
    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
    report(9, "CLI determinism and exit-code contract", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (argc > 1) {
        criterion_9(argv[1]);
    } else {
        report(9, "CLI determinism and exit-code contract", false,
               "no CLI path given");
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
