#ifndef HBMOSC_TRIGRING_HPP
#define HBMOSC_TRIGRING_HPP

#include "hbmosc/polynomial.hpp"
#include "hbmosc/realroots.hpp"

#include <map>
#include <string>
#include <vector>

namespace hbmosc {

// Finite cosine series sum_j C_j(a, w) * cos(j w t) with MultiPoly
// coefficients; the frequency symbol w is the last ambient variable.
class TrigPoly {
public:
    TrigPoly() = default;
    explicit TrigPoly(VarListPtr vars) : vars_(std::move(vars)) {}

    const VarListPtr& vars() const { return vars_; }
    const std::map<unsigned, MultiPoly>& harmonics() const { return h_; }
    bool is_zero() const { return h_.empty(); }
    unsigned max_harmonic() const { return h_.empty() ? 0 : h_.rbegin()->first; }
    MultiPoly coefficient(unsigned j) const;  // zero polynomial when absent

    void set(unsigned j, MultiPoly c);
    void add(unsigned j, const MultiPoly& c);

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    TrigPoly& operator+=(const TrigPoly& o) { *this = *this + o; return *this; }

    TrigPoly pow(unsigned e) const;

    // Numeric evaluation at time t for given (a, w) values; w read from the
    // last slot of point.
    long double eval(long double t, const std::vector<long double>& point) const;

private:
    VarListPtr vars_;
    std::map<unsigned, MultiPoly> h_;
};

// x_N = sum_{j=1..N} a_{2j-1} cos((2j-1) w t) over the hbm_vars(N) ring.
TrigPoly build_ansatz(unsigned order);

// Coefficient of cos(j w t) picks up a factor -j^2 w^2.
TrigPoly second_derivative(const TrigPoly& x);

// Product via cos a cos b = (cos(a-b) + cos(a+b)) / 2, fully collected.
TrigPoly trig_mul(const TrigPoly& x, const TrigPoly& y);

// The polynomial system of the order-N harmonic balance for
// x^{m+1} x'' + x^m = 0: the first N nonvanishing Fourier conditions,
// content-normalized, plus the normalization sum(a) = amplitude.
struct HbmSystem {
    unsigned m = 0;
    unsigned order = 1;       // N
    Rational amplitude = 1;
    VarListPtr vars;          // a1, a3, ..., a_{2N-1}, w
    std::vector<MultiPoly> equations;         // N + 1 entries, normalization last
    // The same conditions with only the rational content divided out. Monomial
    // factors (powers of a1, w) stay in, so degenerate branches that replicate
    // lower-order solutions remain part of the ideal; the admissibility filter
    // removes them after root isolation. This is the system the elimination
    // step runs on.
    std::vector<MultiPoly> ideal_equations;
    std::vector<MultiPoly> raw_coefficients;  // un-normalized A_j for j = 0..j_max
    TrigPoly residual_series;                 // F_N itself
    unsigned j_n = 0;                         // largest harmonic used by the equations

    std::string render() const;  // one equation per line
};

HbmSystem build_hbm_system(unsigned m, unsigned order, const Rational& amplitude = Rational(1));

// Parseval value of int_0^{2pi/w} F^2 dt over the un-normalized coefficients:
// (2pi/w) (A_0^2 + sum_{j>=1} A_j^2 / 2), interval arithmetic throughout.
RatInterval parseval_norm(const TrigPoly& F, const SolutionEnclosure& solution,
                          unsigned pi_digits = 40);

}  // namespace hbmosc

#endif
