#include "hbmosc/reference.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hbmosc {

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
const long double kSqrtPi = sqrtl(kPi);
const long double kSqrt2Pi = sqrtl(2.0L * kPi);
}  // namespace

long double erf_ld(long double z) {
    if (z < 0.0L) return -erf_ld(-z);
    if (z == 0.0L) return 0.0L;
    if (z > 3.0L) return 1.0L - erfc_ld(z);
    // erf(z) = (2/sqrt(pi)) e^{-z^2} sum_k z^{2k+1} 2^k / (2k+1)!!
    // all terms positive: no cancellation
    long double term = z, sum = z;
    long double z2 = z * z;
    for (int k = 1; k < 400; ++k) {
        term *= 2.0L * z2 / static_cast<long double>(2 * k + 1);
        sum += term;
        if (term < 1e-22L * sum) break;
    }
    return 2.0L / kSqrtPi * expl(-z2) * sum;
}

long double erfc_ld(long double z) {
    if (z < 0.0L) return 2.0L - erfc_ld(-z);
    if (z <= 3.0L) return 1.0L - erf_ld(z);
    // continued fraction erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + (2/2)/(z + ...)))
    // evaluated with the modified Lentz algorithm
    const long double tiny = 1e-40L;
    long double f = z, c = z, d = 0.0L;
    for (int n = 1; n < 400; ++n) {
        long double an = static_cast<long double>(n) / 2.0L;
        d = z + an * d;
        if (d == 0.0L) d = tiny;
        c = z + an / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        long double delta = c * d;
        f *= delta;
        if (fabsl(delta - 1.0L) < 1e-20L) break;
    }
    return expl(-z * z) / (kSqrtPi * f);
}

long double erf_inv_ld(long double u) {
    if (!(u > -1.0L && u < 1.0L)) throw std::domain_error("erf_inv domain is (-1, 1)");
    if (u == 0.0L) return 0.0L;
    if (u < 0.0L) return -erf_inv_ld(-u);
    // seed with the asymptotically correct sqrt(-log(1-u^2)), then safeguarded
    // Newton on erf(z) - u
    long double w = -logl((1.0L - u) * (1.0L + u));
    long double z = sqrtl(w);
    long double lo = 0.0L, hi = z + 1.0L;
    while (erf_ld(hi) < u) { lo = hi; hi *= 2.0L; }
    for (int it = 0; it < 80; ++it) {
        long double f = erf_ld(z) - u;
        if (f > 0.0L) hi = z; else lo = z;
        long double df = 2.0L / kSqrtPi * expl(-z * z);
        long double step = f / df;
        long double next = z - step;
        if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
        if (fabsl(next - z) <= 1e-19L * (1.0L + fabsl(z))) { z = next; break; }
        z = next;
    }
    return z;
}

PeriodResult exact_period(long double amplitude) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    PeriodResult r;
    r.value = 2.0L * kSqrt2Pi * amplitude;
    r.method = PeriodMethod::ClosedForm;
    r.estimated_error = 0.0L;
    r.amplitude = amplitude;
    return r;
}

long double weak_solution(long double t, long double amplitude) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    const long double half = kSqrt2Pi * amplitude;  // half period
    // branch index n with t in ((2n-1)/2 half, (2n+1)/2 half)
    long double n = roundl(t / half);
    long double s = t - n * half;
    long double u = 2.0L * s / half;  // in [-1, 1]
    if (u <= -1.0L || u >= 1.0L) return 0.0L;
    long double z = erf_inv_ld(u);
    long double mag = amplitude * expl(-z * z);
    bool odd = fabsl(fmodl(n, 2.0L)) > 0.5L;
    return odd ? -mag : mag;
}

QuadratureResult integrate01(const std::function<long double(long double, long double)>& f,
                             long double target_rel_error, int max_level) {
    // nodes s = (1 + tanh(u))/2, u = (pi/2) sinh(t); both s and 1-s are
    // computed in stable exponential form
    auto node = [](long double t, long double& s, long double& oms, long double& weight) {
        long double u = 0.5L * kPi * sinhl(t);
        long double eu = expl(-2.0L * fabsl(u));
        long double denom = 1.0L + eu;
        long double near1 = 1.0L / denom;       // value approaching 1
        long double near0 = eu / denom;         // complementary part
        if (u >= 0.0L) { s = near1; oms = near0; }
        else { s = near0; oms = near1; }
        // ds/dt = (pi/2) cosh(t) / (2 cosh^2(u)); sech^2 in exponential form
        long double sech = 2.0L * expl(-fabsl(u)) / (1.0L + expl(-2.0L * fabsl(u)));
        weight = 0.25L * kPi * coshl(t) * sech * sech;
    };

    long double h = 1.0L;
    long double sum = 0.0L;
    {
        long double s, oms, w;
        node(0.0L, s, oms, w);
        sum = w * f(s, oms);
        for (int k = 1;; ++k) {
            long double t = h * static_cast<long double>(k);
            long double term = 0.0L;
            node(t, s, oms, w);
            if (oms > 0.0L && w > 0.0L) term += w * f(s, oms);
            node(-t, s, oms, w);
            if (s > 0.0L && w > 0.0L) term += w * f(s, oms);
            sum += term;
            if (t > 4.0L && fabsl(term) < 1e-22L * fabsl(sum)) break;
            if (t > 7.5L) break;
        }
    }
    QuadratureResult out;
    out.value = h * sum;
    out.abs_error_estimate = fabsl(out.value);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5L;
        long double add = 0.0L;
        for (int k = 1;; k += 2) {  // odd nodes only
            long double t = h * static_cast<long double>(k);
            long double s, oms, w, term = 0.0L;
            node(t, s, oms, w);
            if (oms > 0.0L && w > 0.0L) term += w * f(s, oms);
            node(-t, s, oms, w);
            if (s > 0.0L && w > 0.0L) term += w * f(s, oms);
            add += term;
            if (t > 4.0L && fabsl(term) < 1e-22L * fabsl(sum + add)) break;
            if (t > 7.5L) break;
        }
        sum += add;
        long double value = h * sum;
        out.abs_error_estimate = fabsl(value - out.value);
        out.value = value;
        out.levels = level;
        if (out.abs_error_estimate <= target_rel_error * fabsl(value) && level >= 3) break;
    }
    return out;
}

PeriodResult regularized_period_quadrature(long double amplitude, long double k) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    if (!(k > 0.0L)) throw std::domain_error("k must be positive; the k=0 limit is exact_period");
    const long double a2 = amplitude * amplitude;
    const long double denom = a2 + k * k;
    auto integrand = [a2, denom](long double s, long double oms) {
        // log((A^2+k^2)/(A^2 s^2+k^2)) = -log1p(-A^2 (1-s^2)/(A^2+k^2))
        long double one_minus_s2 = oms * (1.0L + s);
        long double arg = -a2 * one_minus_s2 / denom;
        long double lg = -log1pl(arg);
        return 1.0L / sqrtl(lg);
    };
    QuadratureResult q = integrate01(integrand, 1e-13L);
    PeriodResult r;
    r.value = 4.0L * amplitude * q.value;
    r.method = PeriodMethod::Quadrature;
    r.estimated_error = 4.0L * amplitude * q.abs_error_estimate;
    r.amplitude = amplitude;
    r.k = k;
    return r;
}

PeriodResult weak_limit_quadrature(long double amplitude) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    auto integrand = [](long double s, long double oms) {
        long double lg = s > 0.5L ? -log1pl(-oms) : -logl(s);
        return 1.0L / sqrtl(2.0L * lg);
    };
    QuadratureResult q = integrate01(integrand, 1e-13L);
    PeriodResult r;
    r.value = 4.0L * amplitude * q.value;
    r.method = PeriodMethod::Quadrature;
    r.estimated_error = 4.0L * amplitude * q.abs_error_estimate;
    r.amplitude = amplitude;
    r.k = 0.0L;
    return r;
}

long double regularized_energy(long double x, long double y, long double k) {
    return 0.5L * y * y + 0.5L * logl(x * x + k * k);
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with dense output.

namespace {

using State = std::array<long double, 2>;

struct DenseStep {
    long double t0 = 0.0L, h = 0.0L;
    std::array<State, 5> rcont{};

    State eval(long double theta) const {
        long double th1 = 1.0L - theta;
        State out{};
        for (int i = 0; i < 2; ++i) {
            out[i] = rcont[0][i] +
                     theta * (rcont[1][i] +
                              th1 * (rcont[2][i] + theta * (rcont[3][i] + th1 * rcont[4][i])));
        }
        return out;
    }
};

class Dopri5 {
public:
    Dopri5(long double k, const OdeOptions& opts) : k_(k), opts_(opts) {}

    void start(const State& y0) {
        t_ = 0.0L;
        y_ = y0;
        k1_ = rhs(y_);
        h_ = opts_.initial_step;
    }

    long double t() const { return t_; }
    const State& y() const { return y_; }
    const DenseStep& dense() const { return dense_; }

    // one accepted step; returns false never (throws on underflow)
    void step() {
        while (true) {
            if (!(h_ > fabsl(t_) * 1e-16L + 1e-30L))
                throw std::runtime_error("ode step size underflow at t=" + std::to_string((double)t_));
            State k2, k3, k4, k5, k6, k7, ynew;
            auto lin = [&](std::initializer_list<std::pair<long double, const State*>> parts) {
                State s = y_;
                for (auto& [c, v] : parts)
                    for (int i = 0; i < 2; ++i) s[i] += h_ * c * (*v)[i];
                return s;
            };
            k2 = rhs(lin({{1.0L / 5, &k1_}}));
            k3 = rhs(lin({{3.0L / 40, &k1_}, {9.0L / 40, &k2}}));
            k4 = rhs(lin({{44.0L / 45, &k1_}, {-56.0L / 15, &k2}, {32.0L / 9, &k3}}));
            k5 = rhs(lin({{19372.0L / 6561, &k1_}, {-25360.0L / 2187, &k2},
                          {64448.0L / 6561, &k3}, {-212.0L / 729, &k4}}));
            k6 = rhs(lin({{9017.0L / 3168, &k1_}, {-355.0L / 33, &k2}, {46732.0L / 5247, &k3},
                          {49.0L / 176, &k4}, {-5103.0L / 18656, &k5}}));
            for (int i = 0; i < 2; ++i)
                ynew[i] = y_[i] + h_ * (35.0L / 384 * k1_[i] + 500.0L / 1113 * k3[i] +
                                        125.0L / 192 * k4[i] - 2187.0L / 6784 * k5[i] +
                                        11.0L / 84 * k6[i]);
            k7 = rhs(ynew);
            long double err = 0.0L;
            for (int i = 0; i < 2; ++i) {
                long double e = h_ * ((35.0L / 384 - 5179.0L / 57600) * k1_[i] +
                                      (500.0L / 1113 - 7571.0L / 16695) * k3[i] +
                                      (125.0L / 192 - 393.0L / 640) * k4[i] +
                                      (-2187.0L / 6784 + 92097.0L / 339200) * k5[i] +
                                      (11.0L / 84 - 187.0L / 2100) * k6[i] - 1.0L / 40 * k7[i]);
                long double sc = opts_.abs_tol +
                                 opts_.rel_tol * std::max(fabsl(y_[i]), fabsl(ynew[i]));
                err += (e / sc) * (e / sc);
            }
            err = sqrtl(err / 2.0L);
            if (err <= 1.0L) {
                // dense output coefficients (Hairer's contd5)
                dense_.t0 = t_;
                dense_.h = h_;
                for (int i = 0; i < 2; ++i) {
                    long double dy = ynew[i] - y_[i];
                    long double bspl = h_ * k1_[i] - dy;
                    dense_.rcont[0][i] = y_[i];
                    dense_.rcont[1][i] = dy;
                    dense_.rcont[2][i] = bspl;
                    dense_.rcont[3][i] = dy - h_ * k7[i] - bspl;
                    dense_.rcont[4][i] =
                        h_ * (-12715105075.0L / 11282082432 * k1_[i] +
                              87487479700.0L / 32700410799 * k3[i] -
                              10690763975.0L / 1880347072 * k4[i] +
                              701980252875.0L / 199316789632 * k5[i] -
                              1453857185.0L / 822651844 * k6[i] +
                              69997945.0L / 29380423 * k7[i]);
                }
                t_ += h_;
                y_ = ynew;
                k1_ = k7;  // FSAL
                long double fac = 0.9L * powl(err > 1e-30L ? err : 1e-30L, -0.2L);
                h_ *= std::min(5.0L, std::max(0.2L, fac));
                return;
            }
            h_ *= std::max(0.1L, 0.9L * powl(err, -0.2L));
        }
    }

private:
    State rhs(const State& s) const {
        return {s[1], -s[0] / (s[0] * s[0] + k_ * k_)};
    }
    long double k_;
    OdeOptions opts_;
    long double t_ = 0.0L, h_ = 0.0L;
    State y_{}, k1_{};
    DenseStep dense_;
};

// locate a sign change of component `comp` within the last dense step
long double locate_zero(const DenseStep& dense, int comp) {
    long double lo = 0.0L, hi = 1.0L;
    long double flo = dense.eval(lo)[comp];
    for (int it = 0; it < 200; ++it) {
        long double mid = 0.5L * (lo + hi);
        long double fm = dense.eval(mid)[comp];
        if ((fm > 0.0L) == (flo > 0.0L)) { lo = mid; flo = fm; } else { hi = mid; }
        if (hi - lo < 1e-20L) break;
    }
    return dense.t0 + 0.5L * (lo + hi) * dense.h;
}

}  // namespace

std::vector<PhasePoint> simulate_regularized(long double amplitude, long double k,
                                             long double t_max, const OdeOptions& opts) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    if (!(k > 0.0L)) throw std::domain_error("k must be positive");
    if (!(t_max > 0.0L)) throw std::domain_error("t_max must be positive");
    Dopri5 ode(k, opts);
    ode.start({amplitude, 0.0L});
    std::vector<PhasePoint> out{{0.0L, amplitude, 0.0L}};
    while (ode.t() < t_max) {
        ode.step();
        if (ode.t() >= t_max) {
            long double theta = (t_max - ode.dense().t0) / ode.dense().h;
            State s = ode.dense().eval(theta);
            out.push_back({t_max, s[0], s[1]});
            break;
        }
        out.push_back({ode.t(), ode.y()[0], ode.y()[1]});
    }
    return out;
}

PeriodResult regularized_period_ode(long double amplitude, long double k,
                                    const OdeOptions& opts) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    if (!(k > 0.0L)) throw std::domain_error("k must be positive");
    Dopri5 ode(k, opts);
    ode.start({amplitude, 0.0L});
    long double prev_y = 0.0L;
    bool armed = false;  // y must leave zero before a crossing counts
    for (int guard = 0; guard < 2'000'000; ++guard) {
        ode.step();
        long double y = ode.y()[1];
        if (!armed) {
            if (fabsl(y) > 1e-8L) { armed = true; prev_y = y; }
            continue;
        }
        if (prev_y > 0.0L && y <= 0.0L && ode.y()[0] > 0.0L) {
            long double t = locate_zero(ode.dense(), 1);
            PeriodResult r;
            r.value = t;
            r.method = PeriodMethod::Ode;
            r.estimated_error = 10.0L * opts.rel_tol * t + 1e-17L;
            r.amplitude = amplitude;
            r.k = k;
            return r;
        }
        prev_y = y;
    }
    throw std::runtime_error("no return to the section y=0, x>0");
}

long double time_to_first_x_zero(long double amplitude, long double k, const OdeOptions& opts) {
    if (!(amplitude > 0.0L)) throw std::domain_error("amplitude must be positive");
    if (!(k > 0.0L)) throw std::domain_error("k must be positive");
    Dopri5 ode(k, opts);
    ode.start({amplitude, 0.0L});
    long double prev_x = amplitude;
    for (int guard = 0; guard < 2'000'000; ++guard) {
        ode.step();
        long double x = ode.y()[0];
        if (prev_x > 0.0L && x <= 0.0L) return locate_zero(ode.dense(), 0);
        prev_x = x;
    }
    throw std::runtime_error("no x = 0 crossing found");
}

}  // namespace hbmosc
