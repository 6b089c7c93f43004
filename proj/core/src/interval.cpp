#include "hbmosc/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbmosc {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
}

RatInterval RatInterval::hull(const Rational& a, const Rational& b) {
    return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RatInterval(lo, hi);
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
    return a * RatInterval(b.hi_.inverse(), b.lo_.inverse());
}

RatInterval operator*(const Rational& c, const RatInterval& a) {
    return RatInterval::point(c) * a;
}

RatInterval RatInterval::pow(unsigned e) const {
    if (e == 0) return point(Rational(1));
    if (e % 2 == 1 || lo_.sign() >= 0) return RatInterval(lo_.pow(e), hi_.pow(e));
    if (hi_.sign() <= 0) return RatInterval(hi_.pow(e), lo_.pow(e));
    // even power across zero
    return RatInterval(Rational(0), std::max(lo_.pow(e), hi_.pow(e)));
}

RatInterval RatInterval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return RatInterval(-hi_, -lo_);
    return RatInterval(Rational(0), std::max(-lo_, hi_));
}

std::string RatInterval::to_string() const {
    return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

std::string RatInterval::decimal(unsigned digits) const {
    return decimal_string(mid(), digits);
}

Rational pow10_inv(unsigned digits) {
    mpz_class ten(10), p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), digits);
    return Rational(mpz_class(1), p);
}

RatInterval sqrt_enclosure(const Rational& v, const Rational& eps) {
    if (v.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (v.is_zero()) return RatInterval::point(Rational(0));
    // exact square?
    mpz_class sn, sd;
    if (mpz_perfect_square_p(v.num().get_mpz_t()) && mpz_perfect_square_p(v.den().get_mpz_t())) {
        mpz_sqrt(sn.get_mpz_t(), v.num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), v.den().get_mpz_t());
        return RatInterval::point(Rational(sn, sd));
    }
    Rational lo(0), hi = std::max(Rational(1), v);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / Rational(2);
        if (mid * mid <= v) lo = mid; else hi = mid;
    }
    return RatInterval(lo, hi);
}

RatInterval sqrt_enclosure(const RatInterval& v, const Rational& eps) {
    RatInterval lo = sqrt_enclosure(v.lo(), eps);
    RatInterval hi = sqrt_enclosure(v.hi(), eps);
    return RatInterval(lo.lo(), hi.hi());
}

RatInterval pi_enclosure(unsigned digits) {
    // pi = 16 atan(1/5) - 4 atan(1/239); the atan series is alternating with
    // strictly decreasing terms, so consecutive partial sums bracket.
    Rational tol = pow10_inv(digits + 2);
    auto atan_brackets = [&tol](long inv_x) {
        Rational x(1, inv_x);
        Rational x2 = x * x;
        Rational term = x, sum(0);
        RatInterval out(Rational(0), Rational(1));
        unsigned k = 0;
        while (true) {
            Rational contrib = term / Rational(2 * static_cast<long>(k) + 1);
            if (k % 2 == 0) {
                Rational lo = sum;             // sum_{<k} (even k pending add)
                sum += contrib;
                out = RatInterval(lo, sum);    // upper after adding positive term
            } else {
                Rational hi = sum;
                sum -= contrib;
                out = RatInterval(sum, hi);
            }
            term *= x2;
            ++k;
            if (contrib < tol && k >= 2) break;
        }
        return out;
    };
    RatInterval a5 = atan_brackets(5);
    RatInterval a239 = atan_brackets(239);
    RatInterval pi = Rational(16) * a5 - Rational(4) * a239;
    return pi;
}

}  // namespace hbmosc
