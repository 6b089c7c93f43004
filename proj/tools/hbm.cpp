// hbm: harmonic balance periods for the singular oscillator family
// x^{m+1} x'' + x^m = 0, with exact-arithmetic certification, plus reference
// periods of the weak solution and the regularized system.

#include "hbmosc/reference.hpp"
#include "hbmosc/solver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << data;
    if (!out) throw IoError("write failed: " + path);
}

hbmosc::GroebnerBudget budget_from_env() {
    hbmosc::GroebnerBudget b;
    if (const char* s = std::getenv("HBM_BUDGET_SPAIRS")) b.max_spairs = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("HBM_BUDGET_COEFF_BITS"))
        b.max_total_coeff_bits = std::strtoull(s, nullptr, 10);
    return b;
}

std::string format_ld(long double v, unsigned digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lg", static_cast<int>(digits), v);
    return buf;
}

struct SolveArgs {
    unsigned m = 0, order = 1, digits = 30;
    std::string amplitude = "1";
    std::string format = "text";
    std::string order_conversion = "auto";
    std::string out;
    hbmosc::GroebnerBudget budget;
};

int run_solve(const SolveArgs& a) {
    hbmosc::SolveOptions opts;
    opts.digits = a.digits;
    opts.budget = a.budget;
    opts.amplitude = hbmosc::Rational::from_string(a.amplitude);
    if (opts.amplitude.sign() <= 0) {
        std::cerr << "hbm solve: amplitude must be positive\n";
        return kExitInvalid;
    }
    if (a.order_conversion == "on") opts.path = hbmosc::SolveOptions::OrderPath::GrevlexFglm;
    else if (a.order_conversion == "off") opts.path = hbmosc::SolveOptions::OrderPath::DirectLex;
    std::cerr << "solving m=" << a.m << " N=" << a.order << "...\n";
    hbmosc::SolveReport report = hbmosc::solve_hbm(a.m, a.order, opts);
    std::string text = a.format == "json" ? hbmosc::to_json_string(report, a.digits) + "\n"
                                          : hbmosc::to_text_report(report, a.digits);
    write_output(a.out, text);
    return report.budget_exhausted ? kExitBudget : kExitOk;
}

struct TableArgs {
    unsigned max_m = 2, max_order = 3, digits = 12;
    std::string format = "text";
    std::string out;
    hbmosc::GroebnerBudget budget;
};

int run_table(const TableArgs& a) {
    hbmosc::SolveOptions opts;
    opts.digits = std::max(a.digits, 12u);
    opts.budget = a.budget;
    std::vector<hbmosc::ErrorTableEntry> entries;
    if (a.max_order > 0) {
        std::cerr << "computing " << (a.max_m + 1) * a.max_order << " cells...\n";
        entries = hbmosc::error_table(a.max_m, a.max_order, opts);
    }
    std::string text = a.format == "csv" ? hbmosc::table_to_csv(entries, a.digits)
                                         : hbmosc::table_to_text(entries);
    write_output(a.out, text);
    return kExitOk;
}

struct PeriodArgs {
    double amplitude = 1.0;
    double k = 0.0;
    bool k_set = false;
    std::vector<std::string> methods{"exact"};
    unsigned digits = 17;
};

int run_period(const PeriodArgs& a) {
    if (a.amplitude <= 0.0) {
        std::cerr << "hbm period: amplitude must be positive\n";
        return kExitInvalid;
    }
    long double A = a.amplitude;
    std::string out;
    for (const std::string& method : a.methods) {
        hbmosc::PeriodResult r;
        if (method == "exact") {
            r = hbmosc::exact_period(A);
        } else if (method == "quadrature" || method == "ode") {
            if (!a.k_set || a.k <= 0.0) {
                std::cerr << "hbm period: --k > 0 required for method " << method << "\n";
                return kExitInvalid;
            }
            r = method == "quadrature"
                    ? hbmosc::regularized_period_quadrature(A, a.k)
                    : hbmosc::regularized_period_ode(A, a.k);
        } else {
            std::cerr << "hbm period: unknown method " << method << "\n";
            return kExitInvalid;
        }
        out += method + " " + format_ld(r.value, a.digits) + " err<=" +
               format_ld(r.estimated_error, 3) + "\n";
    }
    std::cout << out;
    return kExitOk;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    auto dot = path.rfind('.');
    auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

struct EmitTrajArgs {
    double amplitude = 1.0, t_max = 20.0;
    std::vector<std::string> ks;
    std::string out;
};

int run_emit_trajectory(const EmitTrajArgs& a) {
    if (a.amplitude <= 0.0 || a.t_max <= 0.0) {
        std::cerr << "hbm emit trajectory: amplitude and t-max must be positive\n";
        return kExitInvalid;
    }
    if (a.ks.empty()) {
        std::cerr << "hbm emit trajectory: at least one --k required\n";
        return kExitInvalid;
    }
    for (const std::string& ktext : a.ks) {
        double k = std::stod(ktext);
        if (k <= 0.0) {
            std::cerr << "hbm emit trajectory: k must be positive\n";
            return kExitInvalid;
        }
        auto points = hbmosc::simulate_regularized(a.amplitude, k, a.t_max);
        std::string csv = "t,x,y\n";
        for (const auto& p : points) {
            csv += format_ld(static_cast<double>(p.t), 17) + "," +
                   format_ld(static_cast<double>(p.x), 17) + "," +
                   format_ld(static_cast<double>(p.y), 17) + "\n";
        }
        std::string path = a.ks.size() == 1 ? a.out : with_suffix(a.out, "_k" + ktext);
        write_output(path, csv);
        std::cerr << "wrote " << path << " (" << points.size() << " samples)\n";
    }
    return kExitOk;
}

struct EmitWeakArgs {
    double amplitude = 1.0, from = -8.0, to = 8.0, step = 0.01;
    std::string out;
};

int run_emit_weaksol(const EmitWeakArgs& a) {
    if (a.amplitude <= 0.0 || a.step <= 0.0 || a.to < a.from) {
        std::cerr << "hbm emit weaksol: need amplitude > 0, step > 0, to >= from\n";
        return kExitInvalid;
    }
    std::string csv = "t,x\n";
    long double t = a.from;
    for (long long i = 0; ; ++i) {
        t = a.from + static_cast<long double>(i) * a.step;
        if (t > a.to + 1e-12L) break;
        long double x = hbmosc::weak_solution(t, a.amplitude);
        csv += format_ld(static_cast<double>(t), 17) + "," +
               format_ld(static_cast<double>(x), 17) + "\n";
    }
    write_output(a.out, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic balance periods for x^{m+1} x'' + x^m = 0"};
    app.require_subcommand(1);

    SolveArgs sa;
    sa.budget = budget_from_env();
    auto* solve = app.add_subcommand("solve", "solve the order-N harmonic balance system");
    solve->add_option("--m", sa.m, "exponent m of the equation family");
    solve->add_option("--order,-N", sa.order, "number of harmonics N")->check(CLI::PositiveNumber);
    solve->add_option("--digits", sa.digits, "decimal digits of certified output");
    solve->add_option("--amplitude", sa.amplitude, "initial amplitude A (rational, e.g. 3/2)");
    solve->add_option("--format", sa.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--budget-spairs", sa.budget.max_spairs, "S-pair budget");
    solve->add_option("--budget-coeff-bits", sa.budget.max_total_coeff_bits,
                      "total coefficient bit budget");
    solve->add_option("--order-conversion", sa.order_conversion,
                      "auto | on (grevlex+FGLM) | off (direct lex)")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    solve->add_option("--out", sa.out, "output path (default stdout)");

    TableArgs ta;
    ta.budget = budget_from_env();
    auto* table = app.add_subcommand("table", "relative error table against the exact period");
    table->add_option("--max-m", ta.max_m, "largest exponent m");
    table->add_option("--max-order", ta.max_order, "largest order N (0 for empty table)");
    table->add_option("--digits", ta.digits, "decimal digits for C_N in CSV output");
    table->add_option("--format", ta.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    table->add_option("--budget-spairs", ta.budget.max_spairs, "S-pair budget per cell");
    table->add_option("--budget-coeff-bits", ta.budget.max_total_coeff_bits,
                      "total coefficient bit budget per cell");
    table->add_option("--out", ta.out, "output path (default stdout)");

    PeriodArgs pa;
    auto* period = app.add_subcommand("period", "reference period of the weak or regularized system");
    period->add_option("--amplitude", pa.amplitude, "initial amplitude A")->required();
    period->add_option("--k", pa.k, "regularization parameter")->each([&pa](const std::string&) {
        pa.k_set = true;
    });
    period->add_option("--method", pa.methods, "exact | quadrature | ode (repeatable)");
    period->add_option("--digits", pa.digits, "significant digits printed");

    auto* emit = app.add_subcommand("emit", "write CSV data files");
    emit->require_subcommand(1);
    EmitTrajArgs ea;
    auto* traj = emit->add_subcommand("trajectory", "regularized orbit samples (t,x,y)");
    traj->add_option("--amplitude", ea.amplitude, "initial amplitude A");
    traj->add_option("--k", ea.ks, "regularization parameter (repeatable for a sweep)")
        ->required();
    traj->add_option("--t-max", ea.t_max, "simulation end time");
    traj->add_option("--out", ea.out, "output CSV path")->required();
    EmitWeakArgs wa;
    auto* weak = emit->add_subcommand("weaksol", "weak solution samples (t,x)");
    weak->add_option("--amplitude", wa.amplitude, "initial amplitude A");
    weak->add_option("--from", wa.from, "start time");
    weak->add_option("--to", wa.to, "end time");
    weak->add_option("--step", wa.step, "sample spacing");
    weak->add_option("--out", wa.out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (solve->parsed()) return run_solve(sa);
        if (table->parsed()) return run_table(ta);
        if (period->parsed()) return run_period(pa);
        if (emit->parsed()) {
            if (traj->parsed()) return run_emit_trajectory(ea);
            if (weak->parsed()) return run_emit_weaksol(wa);
        }
    } catch (const hbmosc::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
