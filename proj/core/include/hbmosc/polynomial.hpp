#ifndef HBMOSC_POLYNOMIAL_HPP
#define HBMOSC_POLYNOMIAL_HPP

#include "hbmosc/interval.hpp"
#include "hbmosc/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hbmosc {

// Ambient variable list, shared by every polynomial of a given ring.
// Priority for monomial orders is list order: vars[0] is the highest.
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(std::initializer_list<const char*> names);
VarListPtr make_vars(const std::vector<std::string>& names);
// a1, a3, ..., a_{2N-1}, w  -- the HBM ambient ring.
VarListPtr hbm_vars(unsigned order);

// Exponent vector over a fixed ambient list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t arity) { return Monomial(arity); }
    static Monomial var(std::size_t arity, std::size_t i, uint32_t e = 1);

    std::size_t arity() const { return e_.size(); }
    uint32_t operator[](std::size_t i) const { return e_[i]; }
    uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<uint32_t>& exponents() const { return e_; }

    unsigned total_degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divide_by(const Monomial& o) const;  // this / o, pre: o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<uint32_t> e_;
};

// -1 / 0 / +1 comparisons. Lexicographic uses list order; graded reverse
// lexicographic compares total degree first, then the reversed tail rule.
int lex_compare(const Monomial& a, const Monomial& b);
int grevlex_compare(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GrevLex };

struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    int compare(const Monomial& a, const Monomial& b) const {
        return kind == OrderKind::Lex ? lex_compare(a, b) : grevlex_compare(a, b);
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind; }
};

inline MonomialOrder lex_order() { return {OrderKind::Lex}; }
inline MonomialOrder grevlex_order() { return {OrderKind::GrevLex}; }

// Multivariate polynomial over Rational. Terms are stored sorted in
// descending lexicographic order with no zero coefficients, so equal
// polynomials compare equal term-by-term.
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    MultiPoly() = default;
    static MultiPoly zero(VarListPtr vars);
    static MultiPoly constant(VarListPtr vars, const Rational& c);
    static MultiPoly variable(VarListPtr vars, std::size_t i);
    static MultiPoly from_terms(VarListPtr vars, std::vector<Term> terms);  // any order, collects

    const VarListPtr& vars() const { return vars_; }
    std::size_t arity() const { return vars_ ? vars_->size() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Largest monomial under `ord` (O(1) for lex). Pre: nonzero.
    const Term& leading_term(const MonomialOrder& ord) const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    Rational coeff_of(const Monomial& m) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly times_monomial(const Monomial& m, const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Replace variable `var` by `repl` (same ambient list).
    MultiPoly substitute(std::size_t var, const MultiPoly& repl) const;
    // Remove a variable that occurs in no term / add a fresh variable slot.
    MultiPoly drop_var(std::size_t var, VarListPtr smaller) const;
    MultiPoly insert_var(std::size_t at, VarListPtr larger) const;
    bool uses_var(std::size_t var) const;
    // True when every term's exponents vanish outside `var`.
    bool is_univariate_in(std::size_t var) const;

    Rational eval(const std::vector<Rational>& point) const;
    RatInterval eval(const std::vector<RatInterval>& box) const;

    std::string render() const;  // descending lex, explicit '*', '^' powers

private:
    void check_compatible(const MultiPoly& o) const;
    VarListPtr vars_;
    std::vector<Term> terms_;  // descending lex, nonzero coefficients
};

// Decomposition p = content * monomial_gcd * primitive with integer coprime
// primitive coefficients and positive leading coefficient under lex.
// Throws std::invalid_argument on the zero polynomial.
struct ContentDecomposition {
    Rational content;
    Monomial monomial_gcd;
    MultiPoly primitive;
};
ContentDecomposition content_primitive(const MultiPoly& p);

// Remainder of multivariate division by `divisors` under `ord`: no monomial
// of the result is divisible by any divisor's leading monomial, and
// p - result lies in the ideal generated by the divisors.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& ord);

// Parses the render() grammar: identifiers from `vars`, integer or a/b
// rational literals, + - * / ^ and parentheses.
MultiPoly parse_poly(VarListPtr vars, const std::string& text);

// Equality up to a positive rational scalar, the comparison used for golden
// equation fixtures.
bool proportional_positive(const MultiPoly& a, const MultiPoly& b);

}  // namespace hbmosc

#endif
