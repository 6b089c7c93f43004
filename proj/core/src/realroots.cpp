#include "hbmosc/realroots.hpp"

#include <algorithm>

namespace hbmosc {

namespace {

// chain for an already squarefree, primitive polynomial
std::vector<UniPoly> chain_of_squarefree(const UniPoly& sf) {
    std::vector<UniPoly> chain;
    chain.push_back(sf);
    if (sf.degree() == 0) return chain;
    chain.push_back(sf.derivative().primitive_same_sign());
    while (chain.back().degree() > 0) {
        const UniPoly& prev = chain[chain.size() - 2];
        const UniPoly& cur = chain.back();
        UniPoly r = prev.rem(cur);
        if (r.is_zero()) break;  // cannot happen for squarefree input before a constant
        chain.push_back((-r).primitive_same_sign());
    }
    return chain;
}

RootEnclosure exact_root(const Rational& r) {
    RootEnclosure e;
    e.interval = RatInterval::point(r);
    e.is_exact = true;
    return e;
}

// isolation over the open interval (lo, hi); endpoint signs nonzero
void isolate_rec(const std::vector<UniPoly>& chain, const UniPoly& sf, const Rational& lo,
                 const Rational& hi, int vlo, int vhi, std::vector<RootEnclosure>& out,
                 std::vector<Rational>& exact) {
    int count = vlo - vhi;
    if (count <= 0) return;
    if (count == 1) {
        RootEnclosure e;
        e.interval = RatInterval(lo, hi);
        e.sign_left = sf.sign_at(lo);
        e.sign_right = sf.sign_at(hi);
        out.push_back(e);
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (sf.sign_at(mid) != 0) {
        int vmid = sturm_variations(chain, mid);
        isolate_rec(chain, sf, lo, mid, vlo, vmid, out, exact);
        isolate_rec(chain, sf, mid, hi, vmid, vhi, out, exact);
        return;
    }
    // the midpoint is an exact rational root: bracket it away and recurse
    exact.push_back(mid);
    Rational step = (hi - lo) / Rational(4);
    Rational left, right;
    int vleft = 0, vright = 0;
    while (true) {
        left = mid - step;
        right = mid + step;
        if (sf.sign_at(left) != 0 && sf.sign_at(right) != 0) {
            vleft = sturm_variations(chain, left);
            vright = sturm_variations(chain, right);
            if (vleft - vright == 1) break;  // only mid inside (left, right)
        }
        step /= Rational(2);
    }
    isolate_rec(chain, sf, lo, left, vlo, vleft, out, exact);
    isolate_rec(chain, sf, right, hi, vright, vhi, out, exact);
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_sequence of zero polynomial");
    return chain_of_squarefree(squarefree_part(p));
}

int sturm_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int count_roots(const UniPoly& p, const RatInterval& interval) {
    if (p.is_zero()) throw std::invalid_argument("count_roots of zero polynomial");
    std::vector<UniPoly> chain = sturm_sequence(p);
    const UniPoly& sf = chain.front();
    if (sf.sign_at(interval.lo()) == 0 || sf.sign_at(interval.hi()) == 0)
        throw EndpointRootError("endpoint is a root; perturb endpoints");
    return sturm_variations(chain, interval.lo()) - sturm_variations(chain, interval.hi());
}

std::vector<RootEnclosure> isolate_positive_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_positive_roots of zero polynomial");
    UniPoly sf = squarefree_part(p);
    std::vector<Rational> exact;
    while (sf.degree() > 0 && sf.coeff(0).is_zero()) sf = sf.deflate(Rational(0));
    std::vector<RootEnclosure> out;
    if (sf.degree() > 0) {
        Rational hi = sf.cauchy_root_bound();
        if (sf.sign_at(hi) == 0) {
            exact.push_back(hi);
            sf = sf.deflate(hi).primitive_same_sign();
        }
        if (sf.degree() > 0) {
            std::vector<UniPoly> chain = chain_of_squarefree(sf);
            Rational lo(0);
            int vlo = sturm_variations(chain, lo);
            int vhi = sturm_variations(chain, hi);
            isolate_rec(chain, sf, lo, hi, vlo, vhi, out, exact);
        }
    }
    for (const Rational& r : exact)
        if (r.sign() > 0) out.push_back(exact_root(r));
    std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        return a.interval.lo() < b.interval.lo();
    });
    return out;
}

RootEnclosure refine(const RootEnclosure& enc, const UniPoly& p, const Rational& eps) {
    if (enc.is_exact) return enc;
    if (enc.interval.width() <= eps) return enc;
    Rational lo = enc.interval.lo(), hi = enc.interval.hi();
    int slo = p.sign_at(lo), shi = p.sign_at(hi);
    UniPoly work = p;
    if (slo == 0 || shi == 0 || slo == shi) {
        // even multiplicity hides the sign change in p itself
        work = squarefree_part(p);
        slo = work.sign_at(lo);
        shi = work.sign_at(hi);
        if (slo == 0 || shi == 0 || slo == shi)
            throw std::invalid_argument("refine: enclosure does not isolate a root of p");
    }
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / Rational(2);
        int sm = work.sign_at(mid);
        if (sm == 0) return exact_root(mid);
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    RootEnclosure out;
    out.interval = RatInterval(lo, hi);
    out.sign_left = slo;
    out.sign_right = shi;
    return out;
}

bool vanishes_at_root(const UniPoly& q, const UniPoly& p, const RootEnclosure& enc) {
    if (q.is_zero()) return true;
    if (enc.is_exact) return q.eval(enc.interval.lo()).is_zero();
    UniPoly g = gcd(squarefree_part(p), q);
    if (g.degree() <= 0) return false;
    // roots(g) is a subset of roots(sf(p)); the enclosure isolates exactly one
    // of those, so either that root belongs to g or no root of g lies inside
    if (g.sign_at(enc.interval.lo()) == 0 || g.sign_at(enc.interval.hi()) == 0) return true;
    return count_roots(g, enc.interval) == 1;
}

namespace {

// highest-priority variable occurring in the monomial; arity when none
std::size_t leading_variable(const Monomial& m) {
    for (std::size_t v = 0; v < m.arity(); ++v)
        if (m[v]) return v;
    return m.arity();
}

}  // namespace

SolutionEnclosure back_substitute(const GroebnerBasis& basis, const RootEnclosure& omega,
                                  const Rational& eps) {
    if (basis.generators.empty()) throw InconsistentBranch("empty basis");
    const std::size_t arity = basis.generators[0].arity();
    const std::size_t wvar = arity - 1;
    UniPoly g1 = eliminate_univariate(basis);

    // one assignment step per non-frequency variable, lowest priority first;
    // prefer a generator linear in that variable (shape position)
    struct Step {
        std::size_t var;
        const MultiPoly* gen;
        bool linear;
    };
    std::vector<Step> steps;
    for (const auto& g : basis.generators) {
        const Monomial& lm = g.leading_term(lex_order()).mono;
        std::size_t v = leading_variable(lm);
        if (v == wvar || v == arity) continue;
        bool linear = g.degree_in(v) == 1;
        auto it = std::find_if(steps.begin(), steps.end(),
                               [v](const Step& s) { return s.var == v; });
        if (it == steps.end()) steps.push_back({v, &g, linear});
        else if (!it->linear && linear) *it = {v, &g, linear};
    }
    std::sort(steps.begin(), steps.end(),
              [](const Step& a, const Step& b) { return a.var > b.var; });

    RootEnclosure om = omega;
    Rational target = eps;
    for (int attempt = 0; attempt < 200; ++attempt) {
        om = refine(om, g1, target);
        std::vector<RatInterval> box(arity, RatInterval::point(Rational(0)));
        box[wvar] = om.interval;
        bool ok = true;
        for (const auto& st : steps) {
            const MultiPoly& g = *st.gen;
            if (st.linear) {
                // g = c * v + d with c, d free of v
                std::vector<MultiPoly::Term> cterms, dterms;
                for (const auto& t : g.terms()) {
                    if (t.mono[st.var] == 1) {
                        Monomial rest = t.mono;
                        rest[st.var] = 0;
                        cterms.push_back({rest, t.coeff});
                    } else {
                        dterms.push_back({t.mono, t.coeff});
                    }
                }
                RatInterval ci = MultiPoly::from_terms(g.vars(), std::move(cterms)).eval(box);
                if (ci.contains_zero()) { ok = false; break; }
                RatInterval di = MultiPoly::from_terms(g.vars(), std::move(dterms)).eval(box);
                box[st.var] = -(di / ci);
            } else {
                // non-shape fallback: isolate candidate values at the box
                // midpoint, then keep the branch consistent with the basis
                std::vector<Rational> point(arity);
                for (std::size_t v = 0; v < arity; ++v) point[v] = box[v].mid();
                MultiPoly at_mid = g;
                for (std::size_t v = arity; v-- > 0;) {
                    if (v == st.var || !at_mid.uses_var(v)) continue;
                    at_mid = at_mid.substitute(v, MultiPoly::constant(g.vars(), point[v]));
                }
                UniPoly uni = UniPoly::from_multipoly(at_mid, st.var);
                if (uni.degree() < 1) { ok = false; break; }
                std::vector<RootEnclosure> cands = isolate_positive_roots(uni);
                {
                    std::vector<Rational> mirrored = uni.coeffs();
                    for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
                    for (const auto& r : isolate_positive_roots(UniPoly(std::move(mirrored)))) {
                        RootEnclosure neg;
                        neg.interval = RatInterval(-r.interval.hi(), -r.interval.lo());
                        neg.is_exact = r.is_exact;
                        cands.push_back(neg);
                    }
                }
                if (uni.eval(Rational(0)).is_zero()) cands.push_back(exact_root(Rational(0)));
                Rational pad = target * Rational(16);
                bool assigned = false;
                for (const auto& cand : cands) {
                    RootEnclosure rr = refine(cand, uni, target);
                    RatInterval trial(rr.interval.lo() - pad, rr.interval.hi() + pad);
                    std::vector<RatInterval> probe = box;
                    probe[st.var] = trial;
                    bool consistent = true;
                    for (const auto& gg : basis.generators)
                        if (!gg.eval(probe).contains_zero()) { consistent = false; break; }
                    if (consistent) {
                        box[st.var] = trial;
                        assigned = true;
                        break;
                    }
                }
                if (!assigned) { ok = false; break; }
            }
        }
        if (ok) {
            bool narrow = true;
            for (const auto& st : steps)
                if (box[st.var].width() > eps) { narrow = false; break; }
            bool consistent = true;
            for (const auto& g : basis.generators)
                if (!g.eval(box).contains_zero()) { consistent = false; break; }
            if (narrow && consistent) {
                SolutionEnclosure sol;
                sol.omega = om;
                sol.coefficients.assign(box.begin(), box.begin() + static_cast<long>(wvar));
                return sol;
            }
        }
        target /= Rational(4);
    }
    throw InconsistentBranch("no consistent assignment for this frequency root");
}

}  // namespace hbmosc
