#ifndef HBMOSC_REALROOTS_HPP
#define HBMOSC_REALROOTS_HPP

#include "hbmosc/groebner.hpp"
#include "hbmosc/interval.hpp"
#include "hbmosc/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace hbmosc {

// Isolating interval for one real root. Either a certified open interval
// whose endpoints are not roots (Sturm variation difference 1), or an exact
// rational root stored as a zero-width interval.
struct RootEnclosure {
    RatInterval interval;
    bool is_exact = false;
    int sign_left = 0;   // sign of the squarefree part at interval.lo()
    int sign_right = 0;  // ... and at interval.hi(); 0 only for exact roots

    Rational approx() const { return interval.mid(); }
};

class EndpointRootError : public std::domain_error {
public:
    explicit EndpointRootError(const std::string& what) : std::domain_error(what) {}
};

class InconsistentBranch : public std::runtime_error {
public:
    explicit InconsistentBranch(const std::string& what) : std::runtime_error(what) {}
};

// Canonical Sturm chain of the squarefree part: p0 = p, p1 = p',
// p_{i+1} = -rem(p_{i-1}, p_i), content-stripped with sign preserved.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Sign variation count of a precomputed chain at x.
int sturm_variations(const std::vector<UniPoly>& chain, const Rational& x);

// Number of distinct real roots in the open interval. Throws
// EndpointRootError when an endpoint is a root.
int count_roots(const UniPoly& p, const RatInterval& interval);

// Disjoint certified enclosures of every root in (0, B], B the Cauchy bound.
std::vector<RootEnclosure> isolate_positive_roots(const UniPoly& p);

// Shrinks the enclosure below eps by exact bisection; detects exactly-hit
// rational roots.
RootEnclosure refine(const RootEnclosure& enc, const UniPoly& p, const Rational& eps);

// Exact decision: does q vanish at the root of p isolated by enc?
bool vanishes_at_root(const UniPoly& q, const UniPoly& p, const RootEnclosure& enc);

// Interval box certified against the generating system: omega plus one
// enclosure per remaining variable (ambient order).
struct SolutionEnclosure {
    RootEnclosure omega;
    std::vector<RatInterval> coefficients;  // a1, a3, ..., a_{2N-1}
};

// Triangular solve over a reduced lex basis: assigns every non-frequency
// variable from enclosures of omega outward. Throws InconsistentBranch when
// no assignment is compatible.
SolutionEnclosure back_substitute(const GroebnerBasis& basis, const RootEnclosure& omega,
                                  const Rational& eps);

}  // namespace hbmosc

#endif
