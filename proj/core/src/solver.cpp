#include "hbmosc/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <sstream>

namespace hbmosc {

namespace {

bool use_fglm(unsigned /*m*/, unsigned order, const SolveOptions& opts) {
    switch (opts.path) {
        case SolveOptions::OrderPath::DirectLex: return false;
        case SolveOptions::OrderPath::GrevlexFglm: return true;
        case SolveOptions::OrderPath::Auto: break;
    }
    // direct lex coefficient growth becomes prohibitive from order 3 up even
    // at m = 0; the grevlex basis plus order conversion stays in milliseconds
    return order >= 3;
}

// the generator defining a1 in shape position: linear in a1 with
// coefficients in w only; needed for the exact a1 = 0 branch test
struct ShapeParts {
    bool available = false;
    UniPoly c, d;  // generator = c(w) * a1 + d(w)
};

ShapeParts a1_shape_parts(const GroebnerBasis& basis) {
    ShapeParts out;
    if (basis.generators.empty()) return out;
    const std::size_t arity = basis.generators[0].arity();
    const std::size_t wvar = arity - 1;
    for (const auto& g : basis.generators) {
        if (!g.uses_var(0) || g.degree_in(0) != 1) continue;
        bool shape = true;
        std::vector<MultiPoly::Term> cterms, dterms;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 1; v < wvar && shape; ++v)
                if (t.mono[v]) shape = false;
            if (!shape) break;
            if (t.mono[0] == 1) {
                Monomial rest = t.mono;
                rest[0] = 0;
                cterms.push_back({rest, t.coeff});
            } else {
                dterms.push_back({t.mono, t.coeff});
            }
        }
        if (!shape) continue;
        out.available = true;
        out.c = UniPoly::from_multipoly(MultiPoly::from_terms(g.vars(), cterms), wvar);
        out.d = UniPoly::from_multipoly(MultiPoly::from_terms(g.vars(), dterms), wvar);
        return out;
    }
    return out;
}

RatInterval period_coefficient_of(const RootEnclosure& omega, const Rational& amplitude,
                                  unsigned digits) {
    RatInterval two_pi = Rational(2) * pi_enclosure(digits + 10);
    return two_pi / omega.interval / RatInterval::point(amplitude);
}

}  // namespace

SolveReport solve_hbm(unsigned m, unsigned order, const SolveOptions& opts) {
    SolveReport report;
    report.m = m;
    report.order = order;
    report.amplitude = opts.amplitude;
    if (opts.amplitude.sign() <= 0) throw std::domain_error("amplitude must be positive");
    report.system = build_hbm_system(m, order, opts.amplitude);

    try {
        report.basis = use_fglm(m, order, opts)
                           ? lex_via_grevlex(report.system.ideal_equations, opts.budget)
                           : buchberger(report.system.ideal_equations, lex_order(), opts.budget);
    } catch (const BudgetExhausted& e) {
        report.budget_exhausted = true;
        report.budget_message = e.what();
        report.stats = e.stats;
        return report;
    }
    report.stats = report.basis.stats;
    report.univariate = eliminate_univariate(report.basis);

    const Rational eps = pow10_inv(opts.digits);
    ShapeParts shape = a1_shape_parts(report.basis);

    std::vector<HbmSolution> cands;
    for (const RootEnclosure& root : isolate_positive_roots(report.univariate)) {
        SolutionEnclosure sol;
        try {
            sol = back_substitute(report.basis, refine(root, report.univariate, Rational(1, 1024)),
                                  eps);
        } catch (const InconsistentBranch&) {
            continue;
        }
        // admissibility: a1 must be provably nonzero
        if (sol.coefficients[0].contains_zero()) {
            bool exact_zero = shape.available &&
                              vanishes_at_root(shape.d, report.univariate, sol.omega);
            if (exact_zero) continue;
            bool excluded = false;
            Rational tighter = eps;
            for (int round = 0; round < 40 && !excluded; ++round) {
                tighter /= Rational(1 << 16);
                try {
                    sol = back_substitute(report.basis, sol.omega, tighter);
                } catch (const InconsistentBranch&) {
                    break;
                }
                excluded = !sol.coefficients[0].contains_zero();
            }
            if (!excluded) continue;
        }
        HbmSolution hs;
        hs.m = m;
        hs.order = order;
        hs.omega = sol.omega;
        hs.coefficients = sol.coefficients;
        hs.univariate_degree = static_cast<unsigned>(report.univariate.degree());
        hs.residual = parseval_norm(report.system.residual_series, sol, opts.digits + 10);
        hs.period_coefficient = period_coefficient_of(sol.omega, opts.amplitude, opts.digits);
        cands.push_back(std::move(hs));
    }

    // certified residual ranking: refine overlapping candidates, then order
    for (int round = 0; round < 8; ++round) {
        bool overlap = false;
        for (std::size_t i = 0; i < cands.size() && !overlap; ++i)
            for (std::size_t j = i + 1; j < cands.size() && !overlap; ++j)
                if (cands[i].residual.intersects(cands[j].residual)) overlap = true;
        if (!overlap) break;
        Rational tighter = pow10_inv(opts.digits + 8 * static_cast<unsigned>(round + 1));
        for (auto& c : cands) {
            SolutionEnclosure sol;
            sol.omega = c.omega;
            sol.coefficients = c.coefficients;
            try {
                sol = back_substitute(report.basis, c.omega, tighter);
                c.omega = sol.omega;
                c.coefficients = sol.coefficients;
                c.residual = parseval_norm(report.system.residual_series, sol, opts.digits + 18);
                c.period_coefficient =
                    period_coefficient_of(sol.omega, opts.amplitude, opts.digits);
            } catch (const InconsistentBranch&) {
                // keep the wider but valid enclosures
            }
        }
    }
    std::sort(cands.begin(), cands.end(), [](const HbmSolution& a, const HbmSolution& b) {
        if (a.residual.hi() != b.residual.hi()) return a.residual.hi() < b.residual.hi();
        return a.omega.interval.lo() < b.omega.interval.lo();  // deterministic tie-break
    });
    report.candidates = std::move(cands);
    if (!report.candidates.empty()) report.best = 0;
    return report;
}

RatInterval period_for_amplitude(const HbmSolution& solution, const Rational& amplitude) {
    if (amplitude.sign() <= 0) throw std::domain_error("amplitude must be positive");
    return solution.period_coefficient * RatInterval::point(amplitude);
}

std::vector<ErrorTableEntry> error_table(unsigned max_m, unsigned max_order,
                                         const SolveOptions& opts) {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned m = 0; m <= max_m; ++m)
        for (unsigned n = 1; n <= max_order; ++n) cells.push_back({m, n});

    RatInterval two_sqrt_2pi;
    {
        RatInterval two_pi = Rational(2) * pi_enclosure(opts.digits + 10);
        two_sqrt_2pi = Rational(2) * sqrt_enclosure(two_pi, pow10_inv(opts.digits + 8));
    }

    auto run_cell = [&](unsigned m, unsigned n) {
        ErrorTableEntry e;
        e.m = m;
        e.order = n;
        SolveReport rep = solve_hbm(m, n, opts);
        if (rep.budget_exhausted || !rep.best) {
            e.budget_exhausted = true;
            return e;
        }
        const RatInterval& c = rep.candidates[*rep.best].period_coefficient;
        e.period_coefficient = c;
        RatInterval err = (c - two_sqrt_2pi).abs() / two_sqrt_2pi * RatInterval::point(Rational(100));
        e.relative_error_percent = err;
        return e;
    };

    std::vector<std::future<ErrorTableEntry>> futures;
    futures.reserve(cells.size());
    for (auto [m, n] : cells)
        futures.push_back(std::async(std::launch::async, run_cell, m, n));
    std::vector<ErrorTableEntry> out;
    out.reserve(cells.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

bool scaled_system_check(unsigned m, unsigned order, const Rational& amplitude,
                         const SolveOptions& opts) {
    SolveOptions base = opts;
    base.amplitude = Rational(1);
    SolveReport ref = solve_hbm(m, order, base);
    SolveOptions scaled = opts;
    scaled.amplitude = amplitude;
    SolveReport got = solve_hbm(m, order, scaled);
    if (!ref.best || !got.best) return false;
    const HbmSolution& rs = ref.candidates[*ref.best];
    const HbmSolution& gs = got.candidates[*got.best];
    RatInterval ainv = RatInterval::point(amplitude.inverse());
    // omega(A) must contain omega(1)/A
    if (!(rs.omega.interval * ainv).intersects(gs.omega.interval)) return false;
    for (std::size_t i = 0; i < rs.coefficients.size(); ++i) {
        RatInterval expect = RatInterval::point(amplitude) * rs.coefficients[i];
        if (!expect.intersects(gs.coefficients[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

nlohmann::json interval_json(const RatInterval& iv) {
    return nlohmann::json::array({iv.lo().to_string(), iv.hi().to_string()});
}

}  // namespace

std::string to_json_string(const SolveReport& report, unsigned digits) {
    nlohmann::json j;
    j["m"] = report.m;
    j["N"] = report.order;
    j["amplitude"] = report.amplitude.to_string();
    if (report.budget_exhausted) {
        j["error"] = "budget exhausted";
        j["message"] = report.budget_message;
        j["stats"] = {{"spairs_processed", report.stats.spairs_processed},
                      {"reductions_to_zero", report.stats.reductions_to_zero},
                      {"max_coeff_bits", report.stats.max_coeff_bits},
                      {"peak_total_bits", report.stats.peak_total_bits}};
        return j.dump(2);
    }
    j["univariate_degree"] = static_cast<unsigned>(report.univariate.degree());
    j["candidates"] = report.candidates.size();
    if (report.best) {
        const HbmSolution& s = report.candidates[*report.best];
        j["omega_decimal"] = s.omega.interval.decimal(digits);
        j["omega_interval"] = interval_json(s.omega.interval);
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : s.coefficients) {
            nlohmann::json e;
            e["decimal"] = c.decimal(digits);
            e["interval"] = interval_json(c);
            coeffs.push_back(e);
        }
        j["coefficients"] = coeffs;
        j["period_coefficient_decimal"] = s.period_coefficient.decimal(digits);
        j["residual_decimal"] = s.residual.decimal(std::min(digits, 17u));
    }
    return j.dump(2);
}

std::string to_text_report(const SolveReport& report, unsigned digits) {
    std::ostringstream os;
    os << "hbm solve m=" << report.m << " N=" << report.order
       << " amplitude=" << report.amplitude.to_string() << "\n";
    if (report.budget_exhausted) {
        os << "budget exhausted: " << report.budget_message << "\n"
           << "  spairs processed:   " << report.stats.spairs_processed << "\n"
           << "  reductions to zero: " << report.stats.reductions_to_zero << "\n"
           << "  max coeff bits:     " << report.stats.max_coeff_bits << "\n";
        return os.str();
    }
    os << "univariate degree: " << report.univariate.degree() << "\n";
    os << "candidates: " << report.candidates.size() << "\n";
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const HbmSolution& s = report.candidates[i];
        os << (report.best && *report.best == i ? "* " : "  ") << "candidate " << i << "\n";
        os << "    omega = " << s.omega.interval.decimal(digits) << "\n";
        os << "    C_N = " << s.period_coefficient.decimal(digits) << "\n";
        os << "    T(A) = "
           << (s.period_coefficient * RatInterval::point(report.amplitude)).decimal(digits)
           << "\n";
        os << "    residual = " << s.residual.decimal(std::min(digits, 17u)) << "\n";
        for (std::size_t c = 0; c < s.coefficients.size(); ++c) {
            os << "    a" << 2 * c + 1 << " = " << s.coefficients[c].decimal(digits) << "\n";
        }
    }
    if (report.candidates.empty()) os << "no admissible solutions\n";
    return os.str();
}

std::string table_to_text(const std::vector<ErrorTableEntry>& entries) {
    unsigned max_m = 0, max_n = 0;
    for (const auto& e : entries) {
        max_m = std::max(max_m, e.m);
        max_n = std::max(max_n, e.order);
    }
    std::ostringstream os;
    os << "e_N(m)";
    for (unsigned m = 0; m <= max_m; ++m) os << "\tm=" << m;
    os << "\n";
    for (unsigned n = 1; n <= max_n; ++n) {
        os << "N=" << n;
        for (unsigned m = 0; m <= max_m; ++m) {
            const ErrorTableEntry* cell = nullptr;
            for (const auto& e : entries)
                if (e.m == m && e.order == n) cell = &e;
            os << "\t";
            if (!cell || !cell->relative_error_percent) os << "-";
            else os << decimal_fixed(cell->relative_error_percent->mid(), 2);
        }
        os << "\n";
    }
    return os.str();
}

std::string table_to_csv(const std::vector<ErrorTableEntry>& entries, unsigned digits) {
    std::ostringstream os;
    os << "m,N,C_N,error_percent\n";
    for (const auto& e : entries) {
        os << e.m << "," << e.order << ",";
        if (e.period_coefficient) os << e.period_coefficient->decimal(digits);
        else os << "-";
        os << ",";
        if (e.relative_error_percent) os << decimal_fixed(e.relative_error_percent->mid(), 2);
        else os << "-";
        os << "\n";
    }
    return os.str();
}

}  // namespace hbmosc
