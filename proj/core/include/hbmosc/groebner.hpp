#ifndef HBMOSC_GROEBNER_HPP
#define HBMOSC_GROEBNER_HPP

#include "hbmosc/polynomial.hpp"
#include "hbmosc/unipoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbmosc {

struct GroebnerStats {
    std::uint64_t spairs_processed = 0;
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t max_coeff_bits = 0;     // largest single coefficient seen
    std::uint64_t peak_total_bits = 0;    // peak of summed stored coefficient bits
};

struct GroebnerBudget {
    std::uint64_t max_spairs = 1'000'000;
    std::uint64_t max_total_coeff_bits = 100'000'000;
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, GroebnerStats s)
        : std::runtime_error(what), stats(s) {}
    GroebnerStats stats;
};

// Reduced Groebner basis: every S-polynomial reduces to zero, no generator
// monomial is divisible by another generator's leading monomial, and each
// generator is in content_primitive canonical form. Generators are sorted by
// ascending leading monomial, so for lex with the frequency variable last the
// univariate generator comes first.
struct GroebnerBasis {
    std::vector<MultiPoly> generators;
    MonomialOrder order;
    GroebnerStats stats;

    std::string render() const;       // one generator per line
    std::string to_json_string() const;
};

// lcm-cancelling combination of the leading terms of f and g.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord);

// Buchberger completion with Gebauer-Moeller pair elimination and
// content-stripped intermediates. Throws BudgetExhausted when the pair or
// coefficient budget runs out.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord,
                         const GroebnerBudget& budget = {});

// Order conversion: grevlex Buchberger first, then FGLM to the reduced lex
// basis. Requires a zero-dimensional ideal.
GroebnerBasis lex_via_grevlex(const std::vector<MultiPoly>& gens,
                              const GroebnerBudget& budget = {});

// The generator involving only the last ambient variable, as a primitive
// integer univariate. Throws std::runtime_error("ideal not zero-dimensional
// or wrong order") when no such generator exists.
UniPoly eliminate_univariate(const GroebnerBasis& basis);

}  // namespace hbmosc

#endif
