#ifndef HBMOSC_INTERVAL_HPP
#define HBMOSC_INTERVAL_HPP

#include "hbmosc/rational.hpp"

#include <string>

namespace hbmosc {

// Closed interval with exact rational endpoints. All operations are exact,
// hence trivially outward-conservative: the true result of an operation on
// members is contained in the result interval.
class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    RatInterval(Rational lo, Rational hi);  // throws std::invalid_argument if lo > hi
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }
    // Endpoints in either order.
    static RatInterval hull(const Rational& a, const Rational& b);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains_zero() const { return contains(Rational(0)); }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const RatInterval& a, const RatInterval& b) { return !(a == b); }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    // Throws std::domain_error if b contains zero.
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

    RatInterval pow(unsigned e) const;  // tight for even powers across zero
    RatInterval abs() const;

    std::string to_string() const;                 // "[lo, hi]" with exact rationals
    std::string decimal(unsigned digits) const;    // midpoint rendering

    long double mid_long_double() const { return mid().to_long_double(); }

private:
    Rational lo_, hi_;
};

RatInterval operator*(const Rational& c, const RatInterval& a);

// Certified enclosure of sqrt(v) with width <= eps. Exact squares give a
// point interval. Throws std::domain_error for v < 0.
RatInterval sqrt_enclosure(const Rational& v, const Rational& eps);
RatInterval sqrt_enclosure(const RatInterval& v, const Rational& eps);

// Certified rational enclosure of pi via the Machin formula with alternating
// series tail bounds; width < 10^-digits.
RatInterval pi_enclosure(unsigned digits);

// 10^-digits as an exact rational, handy as a refinement target.
Rational pow10_inv(unsigned digits);

}  // namespace hbmosc

#endif
