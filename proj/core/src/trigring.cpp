#include "hbmosc/trigring.hpp"

#include <cmath>
#include <stdexcept>

namespace hbmosc {

MultiPoly TrigPoly::coefficient(unsigned j) const {
    auto it = h_.find(j);
    return it == h_.end() ? MultiPoly::zero(vars_) : it->second;
}

void TrigPoly::set(unsigned j, MultiPoly c) {
    if (c.is_zero()) h_.erase(j);
    else h_[j] = std::move(c);
}

void TrigPoly::add(unsigned j, const MultiPoly& c) {
    auto it = h_.find(j);
    if (it == h_.end()) {
        if (!c.is_zero()) h_.emplace(j, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) h_.erase(it);
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out = a;
    if (!out.vars_) out.vars_ = b.vars_;
    for (const auto& [j, c] : b.h_) out.add(j, c);
    return out;
}

TrigPoly trig_mul(const TrigPoly& x, const TrigPoly& y) {
    TrigPoly out(x.vars() ? x.vars() : y.vars());
    for (const auto& [i, ci] : x.harmonics()) {
        for (const auto& [j, cj] : y.harmonics()) {
            MultiPoly prod = ci * cj;
            MultiPoly half = prod.scaled(Rational(1, 2));
            unsigned lo = i > j ? i - j : j - i;
            unsigned hi = i + j;
            if (lo == hi) out.add(lo, prod);  // both halves land on the same harmonic
            else {
                out.add(lo, half);
                out.add(hi, half);
            }
        }
    }
    return out;
}

TrigPoly TrigPoly::pow(unsigned e) const {
    TrigPoly r(vars_);
    r.set(0, MultiPoly::constant(vars_, Rational(1)));
    TrigPoly base = *this;
    while (e) {
        if (e & 1) r = trig_mul(r, base);
        e >>= 1;
        if (e) base = trig_mul(base, base);
    }
    return r;
}

long double TrigPoly::eval(long double t, const std::vector<long double>& point) const {
    long double w = point.back();
    long double acc = 0.0L;
    for (const auto& [j, c] : h_) {
        long double cv = 0.0L;
        for (const auto& term : c.terms()) {
            long double v = term.coeff.to_long_double();
            for (std::size_t i = 0; i < c.arity(); ++i)
                for (uint32_t k = 0; k < term.mono[i]; ++k) v *= point[i];
            cv += v;
        }
        acc += cv * cosl(static_cast<long double>(j) * w * t);
    }
    return acc;
}

TrigPoly build_ansatz(unsigned order) {
    if (order < 1) throw std::invalid_argument("ansatz order must be >= 1");
    VarListPtr vars = hbm_vars(order);
    TrigPoly x(vars);
    for (unsigned j = 1; j <= order; ++j)
        x.set(2 * j - 1, MultiPoly::variable(vars, j - 1));
    return x;
}

TrigPoly second_derivative(const TrigPoly& x) {
    TrigPoly out(x.vars());
    if (!x.vars()) return out;
    const std::size_t wvar = x.vars()->size() - 1;
    for (const auto& [j, c] : x.harmonics()) {
        if (j == 0) continue;
        Monomial w2 = Monomial::var(c.arity(), wvar, 2);
        out.set(j, c.times_monomial(w2, Rational(-static_cast<long>(j) * static_cast<long>(j))));
    }
    return out;
}

namespace {

// Canonical sign for a balance equation: the lex-leading coefficient of the
// component with the lowest frequency degree is positive. This is the form
// the equations take before any frequency factor is cleared.
MultiPoly orient_equation(const MultiPoly& primitive, std::size_t wvar) {
    uint32_t wmin = UINT32_MAX;
    for (const auto& t : primitive.terms()) wmin = std::min(wmin, t.mono[wvar]);
    for (const auto& t : primitive.terms()) {
        if (t.mono[wvar] == wmin)  // terms are in descending lex order
            return t.coeff.sign() < 0 ? -primitive : primitive;
    }
    return primitive;
}

}  // namespace

HbmSystem build_hbm_system(unsigned m, unsigned order, const Rational& amplitude) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    HbmSystem sys;
    sys.m = m;
    sys.order = order;
    sys.amplitude = amplitude;
    TrigPoly x = build_ansatz(order);
    sys.vars = x.vars();
    const std::size_t wvar = sys.vars->size() - 1;

    TrigPoly xdd = second_derivative(x);
    TrigPoly xm = x.pow(m);
    TrigPoly F = trig_mul(xm, trig_mul(x, xdd)) + xm;  // x^{m+1} x'' + x^m
    sys.residual_series = F;

    const unsigned j_max = (m + 2) * (2 * order - 1);
    sys.raw_coefficients.reserve(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) sys.raw_coefficients.push_back(F.coefficient(j));

    unsigned taken = 0;
    for (unsigned j = 0; j <= j_max && taken < order; ++j) {
        const MultiPoly& a_j = sys.raw_coefficients[j];
        if (a_j.is_zero()) continue;
        ContentDecomposition cp = content_primitive(a_j);
        sys.equations.push_back(orient_equation(cp.primitive, wvar));
        sys.ideal_equations.push_back(a_j.scaled(cp.content.inverse()));
        sys.j_n = j;
        ++taken;
    }
    // normalization sum(a) = amplitude
    MultiPoly norm = MultiPoly::constant(sys.vars, -amplitude);
    for (unsigned j = 0; j < order; ++j) norm += MultiPoly::variable(sys.vars, j);
    sys.equations.push_back(norm);
    sys.ideal_equations.push_back(norm);
    return sys;
}

std::string HbmSystem::render() const {
    std::string out;
    for (const auto& eq : equations) {
        out += eq.render();
        out += "\n";
    }
    return out;
}

RatInterval parseval_norm(const TrigPoly& F, const SolutionEnclosure& solution,
                          unsigned pi_digits) {
    if (!F.vars()) return RatInterval::point(Rational(0));
    const std::size_t arity = F.vars()->size();
    std::vector<RatInterval> box;
    box.reserve(arity);
    for (const auto& c : solution.coefficients) box.push_back(c);
    box.push_back(solution.omega.interval);
    if (box.size() != arity) throw std::invalid_argument("solution arity mismatch");

    RatInterval sum = RatInterval::point(Rational(0));
    for (const auto& [j, c] : F.harmonics()) {
        RatInterval a = c.eval(box);
        RatInterval sq = a.pow(2);
        sum = sum + (j == 0 ? sq : Rational(1, 2) * sq);
    }
    RatInterval two_pi = Rational(2) * pi_enclosure(pi_digits);
    return two_pi / box.back() * sum;
}

}  // namespace hbmosc
