#ifndef HBMOSC_UNIPOLY_HPP
#define HBMOSC_UNIPOLY_HPP

#include "hbmosc/interval.hpp"
#include "hbmosc/polynomial.hpp"
#include "hbmosc/rational.hpp"

#include <string>
#include <vector>

namespace hbmosc {

// Dense univariate polynomial over Rational, coefficients ascending by degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs_ascending);
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    // Extracts the polynomial in variable `var`; throws if any other variable occurs.
    static UniPoly from_multipoly(const MultiPoly& p, std::size_t var);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    RatInterval eval(const RatInterval& x) const;
    long double eval(long double x) const;

    UniPoly derivative() const;
    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Euclidean remainder (exact rational arithmetic).
    UniPoly rem(const UniPoly& divisor) const;
    // Exact quotient by (x - root); pre: root is a root.
    UniPoly deflate(const Rational& root) const;

    // Positive-content primitive integer form: p = content * primitive with
    // primitive having coprime integer coefficients and positive leading one.
    std::pair<Rational, UniPoly> content_primitive() const;
    // Primitive part with the CONTENT SIGN KEPT (leading sign preserved);
    // suitable inside Sturm chains where signs matter.
    UniPoly primitive_same_sign() const;

    bool proportional_positive(const UniPoly& o) const;  // equal up to positive rational scalar
    bool is_even() const;  // only even-degree monomials

    // 1 + max |c_i| / |c_lead|.
    Rational cauchy_root_bound() const;

    std::string render(const std::string& var = "w") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // primitive, positive leading
UniPoly squarefree_part(const UniPoly& p);

}  // namespace hbmosc

#endif
