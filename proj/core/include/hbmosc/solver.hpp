#ifndef HBMOSC_SOLVER_HPP
#define HBMOSC_SOLVER_HPP

#include "hbmosc/groebner.hpp"
#include "hbmosc/realroots.hpp"
#include "hbmosc/trigring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hbmosc {

struct SolveOptions {
    unsigned digits = 30;
    GroebnerBudget budget;
    enum class OrderPath { Auto, DirectLex, GrevlexFglm } path = OrderPath::Auto;
    Rational amplitude = Rational(1);
};

// One certified candidate of the balance system: frequency root, coefficient
// box, Parseval residual, and the period constant 2 pi / (omega * A).
struct HbmSolution {
    unsigned m = 0;
    unsigned order = 1;
    RootEnclosure omega;
    std::vector<RatInterval> coefficients;
    RatInterval residual;
    unsigned univariate_degree = 0;
    RatInterval period_coefficient;
};

struct SolveReport {
    unsigned m = 0;
    unsigned order = 1;
    Rational amplitude = Rational(1);
    std::vector<HbmSolution> candidates;  // sorted by residual, best first
    std::optional<std::size_t> best;      // index into candidates
    UniPoly univariate;
    GroebnerBasis basis;
    HbmSystem system;
    bool budget_exhausted = false;
    std::string budget_message;
    GroebnerStats stats;
};

// Full pipeline: system -> lex basis -> certified positive frequency roots ->
// triangular back-substitution -> residual ranking. Budget exhaustion gives a
// partial report (budget_exhausted set) instead of throwing.
SolveReport solve_hbm(unsigned m, unsigned order, const SolveOptions& opts = {});

// C_N(m) * A. Throws std::domain_error for A <= 0.
RatInterval period_for_amplitude(const HbmSolution& solution, const Rational& amplitude);

struct ErrorTableEntry {
    unsigned m = 0;
    unsigned order = 1;
    std::optional<RatInterval> period_coefficient;
    std::optional<RatInterval> relative_error_percent;  // empty when budget ran out
    bool budget_exhausted = false;
};

// e_N(m) = 100 |C_N(m) - 2 sqrt(2 pi)| / (2 sqrt(2 pi)) for every cell in
// range; per-cell budget failures are data, not errors. Cells run
// concurrently.
std::vector<ErrorTableEntry> error_table(unsigned max_m, unsigned max_order,
                                         const SolveOptions& opts = {});

// Re-solves with normalization sum(a) = A and checks the scaling relation
// a_i(A) = A a_i(1), omega(A) = omega(1) / A against the base solve.
bool scaled_system_check(unsigned m, unsigned order, const Rational& amplitude,
                         const SolveOptions& opts = {});

std::string to_json_string(const SolveReport& report, unsigned digits);
std::string to_text_report(const SolveReport& report, unsigned digits);

std::string table_to_text(const std::vector<ErrorTableEntry>& entries);
std::string table_to_csv(const std::vector<ErrorTableEntry>& entries, unsigned digits = 12);

}  // namespace hbmosc

#endif
