#ifndef HBMOSC_RATIONAL_HPP
#define HBMOSC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hbmosc {

// Exact rational number. Canonical form is maintained at all times:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, coefficients come from int literals
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n) : q_(n) {}

    // Accepts "n", "n/d", decimal ("1.25", "-0.5") and exponent ("1e-3") forms.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    Rational inverse() const;  // throws std::domain_error on zero
    Rational pow(unsigned e) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // "n" when integral, "n/d" otherwise.
    std::string to_string() const;

    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;  // full 64-bit-significand conversion

    // Combined bit length of numerator and denominator.
    std::size_t bit_size() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

// rat_normalize: canonical rational from a (possibly unnormalized) pair.
// d = 0 raises std::domain_error("division by zero").
Rational rat_normalize(const mpz_class& n, const mpz_class& d);
Rational rat_normalize(long n, long d);

// Deterministic decimal rendering with `digits` significant digits,
// round-half-up on the magnitude. Positional for moderate exponents,
// scientific otherwise.
std::string decimal_string(const Rational& q, unsigned digits);

// Fixed-point rendering with exactly `decimals` digits after the point.
std::string decimal_fixed(const Rational& q, unsigned decimals);

}  // namespace hbmosc

#endif
