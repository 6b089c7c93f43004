#include "hbmosc/groebner.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace hbmosc {

namespace {

struct OrdGreater {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.compare(a, b) > 0; }
};

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

using TermMap = std::map<Monomial, Rational, OrdGreater>;

std::uint64_t poly_bits(const MultiPoly& p) {
    std::uint64_t b = 0;
    for (const auto& t : p.terms()) b += t.coeff.bit_size();
    return b;
}

struct Ctx {
    MonomialOrder ord;
    GroebnerBudget budget;
    GroebnerStats stats;
    std::uint64_t stored_bits = 0;

    void note_poly(const MultiPoly& p) {
        for (const auto& t : p.terms())
            stats.max_coeff_bits = std::max<std::uint64_t>(stats.max_coeff_bits, t.coeff.bit_size());
    }
    void add_stored(const MultiPoly& p) {
        stored_bits += poly_bits(p);
        stats.peak_total_bits = std::max(stats.peak_total_bits, stored_bits);
        if (stored_bits > budget.max_total_coeff_bits)
            throw BudgetExhausted("groebner coefficient budget exhausted", stats);
    }
    void check_working(std::uint64_t working_bits) {
        std::uint64_t total = stored_bits + working_bits;
        stats.peak_total_bits = std::max(stats.peak_total_bits, total);
        if (total > budget.max_total_coeff_bits)
            throw BudgetExhausted("groebner coefficient budget exhausted", stats);
    }
};

// Divide out the rational content only and make the leading coefficient
// positive. Unlike content_primitive this keeps monomial factors, so the
// generated ideal is untouched.
MultiPoly scalar_primitive(const MultiPoly& p, const MonomialOrder& ord) {
    ContentDecomposition cp = content_primitive(p);
    MultiPoly out = p.scaled(cp.content.abs().inverse());
    if (out.leading_term(ord).coeff.sign() < 0) out = -out;
    return out;
}

struct BasisElem {
    MultiPoly poly;  // integer coprime coefficients, positive leading one
    Monomial lm;
    Rational lc;
};

BasisElem make_elem(const MultiPoly& p, const MonomialOrder& ord) {
    MultiPoly prim = scalar_primitive(p, ord);
    const auto& lt = prim.leading_term(ord);
    return {prim, lt.mono, lt.coeff};
}

// Full normal form of p against `basis` (all of it, or a subset via `skip`).
MultiPoly reduce_full(const MultiPoly& p, const std::vector<BasisElem>& basis,
                      const MonomialOrder& ord, Ctx* ctx, std::size_t skip = SIZE_MAX) {
    if (p.is_zero()) return p;
    TermMap work{OrdGreater{ord}};
    for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);
    std::vector<MultiPoly::Term> done;
    std::uint64_t steps = 0;
    while (!work.empty()) {
        auto head = work.begin();
        const Monomial hm = head->first;
        const Rational hc = head->second;
        const BasisElem* hit = nullptr;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == skip) continue;
            if (basis[i].lm.divides(hm)) { hit = &basis[i]; break; }
        }
        if (!hit) {
            done.push_back({hm, hc});
            work.erase(head);
            continue;
        }
        Monomial q = hm.divide_by(hit->lm);
        Rational f = hc / hit->lc;
        for (const auto& t : hit->poly.terms()) {
            Monomial m = t.mono * q;
            Rational delta = t.coeff * f;
            auto it = work.find(m);
            if (it == work.end()) {
                if (!delta.is_zero()) work.emplace(std::move(m), -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        if (ctx && (++steps & 1023) == 0) {
            std::uint64_t wb = 0;
            for (const auto& [m, c] : work) wb += c.bit_size();
            ctx->check_working(wb);
        }
    }
    std::vector<MultiPoly::Term> terms = std::move(done);
    return MultiPoly::from_terms(p.vars(), std::move(terms));
}

MultiPoly spoly(const BasisElem& a, const BasisElem& b) {
    Monomial L = Monomial::lcm(a.lm, b.lm);
    MultiPoly left = a.poly.times_monomial(L.divide_by(a.lm), a.lc.inverse());
    MultiPoly right = b.poly.times_monomial(L.divide_by(b.lm), b.lc.inverse());
    return left - right;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
};

struct PairCmp {
    MonomialOrder ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.compare(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using PairQueue = std::set<Pair, PairCmp>;

// Gebauer-Moeller pair update for the element just appended at index t.
void gm_update(const std::vector<BasisElem>& G, PairQueue& P, std::size_t t) {
    const Monomial& m = G[t].lm;
    const std::size_t n = t;
    std::vector<Monomial> l(n);
    std::vector<char> drop(n, 0);
    for (std::size_t i = 0; i < n; ++i) l[i] = Monomial::lcm(G[i].lm, m);

    // M: candidate whose lcm is properly divided by another candidate's lcm
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && !drop[i]; ++j) {
            if (j == i) continue;
            if (l[j] != l[i] && l[j].divides(l[i])) drop[i] = 1;
        }
    }
    // F: equal-lcm classes; if the class holds a coprime pair the whole class
    // dies, otherwise exactly one representative survives
    std::map<Monomial, std::vector<std::size_t>, LexLess> classes;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) classes[l[i]].push_back(i);
    for (auto& [lcm_val, members] : classes) {
        bool coprime = false;
        for (std::size_t i : members)
            if (G[i].lm.coprime(m)) coprime = true;
        if (coprime) {
            for (std::size_t i : members) drop[i] = 1;
        } else {
            for (std::size_t k = 1; k < members.size(); ++k) drop[members[k]] = 1;
        }
    }
    // B: coprime leading monomials
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i] && G[i].lm.coprime(m)) drop[i] = 1;

    // chain rule on old pairs
    for (auto it = P.begin(); it != P.end();) {
        const Pair& pr = *it;
        if (m.divides(pr.lcm) && Monomial::lcm(G[pr.i].lm, m) != pr.lcm &&
            Monomial::lcm(G[pr.j].lm, m) != pr.lcm) {
            it = P.erase(it);
        } else {
            ++it;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) P.insert({i, t, l[i], l[i].total_degree()});
}

std::vector<MultiPoly> core_buchberger(const std::vector<MultiPoly>& gens,
                                       const MonomialOrder& ord, Ctx& ctx) {
    std::vector<BasisElem> G;
    PairQueue P{PairCmp{ord}};
    auto add = [&](const MultiPoly& p) {
        BasisElem e = make_elem(p, ord);
        ctx.note_poly(e.poly);
        ctx.add_stored(e.poly);
        G.push_back(std::move(e));
        gm_update(G, P, G.size() - 1);
    };
    for (const auto& g : gens) add(g);
    while (!P.empty()) {
        Pair pr = *P.begin();
        P.erase(P.begin());
        if (++ctx.stats.spairs_processed > ctx.budget.max_spairs)
            throw BudgetExhausted("groebner S-pair budget exhausted", ctx.stats);
        MultiPoly s = spoly(G[pr.i], G[pr.j]);
        MultiPoly r = reduce_full(s, G, ord, &ctx);
        if (r.is_zero()) {
            ++ctx.stats.reductions_to_zero;
            continue;
        }
        ctx.note_poly(r);
        add(r);
    }
    std::vector<MultiPoly> out;
    out.reserve(G.size());
    for (auto& e : G) out.push_back(std::move(e.poly));
    return out;
}

// Minimalize + tail-reduce a generating set that is already a Groebner basis.
std::vector<MultiPoly> interreduce(std::vector<MultiPoly> polys, const MonomialOrder& ord,
                                   Ctx& ctx) {
    std::vector<MultiPoly> nonzero;
    for (auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(scalar_primitive(p, ord));
    std::sort(nonzero.begin(), nonzero.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.compare(a.leading_term(ord).mono, b.leading_term(ord).mono) < 0;
    });
    // minimal: drop any generator whose LM another generator's LM divides
    std::vector<BasisElem> kept;
    for (auto& p : nonzero) {
        const Monomial& lm = p.leading_term(ord).mono;
        bool redundant = false;
        for (const auto& k : kept)
            if (k.lm.divides(lm)) { redundant = true; break; }
        if (!redundant) kept.push_back(make_elem(p, ord));
    }
    // reduced: replace each tail by its normal form against the others
    for (std::size_t i = 0; i < kept.size(); ++i) {
        MultiPoly r = reduce_full(kept[i].poly, kept, ord, &ctx, i);
        kept[i] = make_elem(r, ord);
    }
    std::vector<MultiPoly> out;
    out.reserve(kept.size());
    for (auto& k : kept) out.push_back(std::move(k.poly));
    return out;
}

struct Prepared {
    std::vector<MultiPoly> core;   // generators free of eliminated variables
    std::vector<MultiPoly> stash;  // eliminated linear generators
    bool unit_ideal = false;
    std::vector<std::size_t> live;  // variable indices untouched by elimination
};

// Pull out generators that are linear (unit coefficient) in their leading
// variable and substitute them away. Shrinks every HBM run by the
// normalization variable.
Prepared eliminate_linear(std::vector<MultiPoly> work, const MonomialOrder& ord) {
    Prepared out;
    std::size_t arity = work.empty() ? 0 : work[0].arity();
    std::vector<char> dead(arity, 0);
    for (auto& w : work) w = scalar_primitive(w, ord);
    while (true) {
        std::size_t pick = work.size();
        std::size_t var = 0;
        for (std::size_t k = 0; k < work.size() && pick == work.size(); ++k) {
            const auto& lt = work[k].leading_term(ord);
            if (lt.mono.total_degree() != 1) continue;
            for (std::size_t v = 0; v < arity; ++v)
                if (lt.mono[v] == 1) { var = v; break; }
            pick = k;
        }
        if (pick == work.size()) break;
        MultiPoly f = work[pick];
        const auto& lt = f.leading_term(ord);
        MultiPoly tail = f - MultiPoly::from_terms(f.vars(), {{lt.mono, lt.coeff}});
        MultiPoly repl = tail.scaled(-lt.coeff.inverse());
        dead[var] = 1;
        out.stash.push_back(f);
        work.erase(work.begin() + static_cast<long>(pick));
        std::vector<MultiPoly> next;
        for (auto& g : work) {
            MultiPoly h = g.uses_var(var) ? g.substitute(var, repl) : g;
            if (h.is_zero()) continue;
            if (h.is_constant()) { out.unit_ideal = true; }
            next.push_back(scalar_primitive(h, ord));
        }
        work = std::move(next);
        if (out.unit_ideal) break;
    }
    out.core = std::move(work);
    for (std::size_t v = 0; v < arity; ++v)
        if (!dead[v]) out.live.push_back(v);
    return out;
}

GroebnerBasis finalize(std::vector<MultiPoly> all, const MonomialOrder& ord, Ctx& ctx) {
    GroebnerBasis basis;
    basis.generators = interreduce(std::move(all), ord, ctx);
    basis.order = ord;
    basis.stats = ctx.stats;
    for (const auto& g : basis.generators) ctx.note_poly(g);
    basis.stats = ctx.stats;
    return basis;
}

void validate_gens(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!(g.vars() == gens[0].vars()) && !(*g.vars() == *gens[0].vars()))
            throw std::invalid_argument("mismatched ambient variable lists");
    }
}

// ---------------------------------------------------------------------------
// FGLM: reduced lex basis of a zero-dimensional ideal from any Groebner basis.

std::vector<MultiPoly> fglm_to_lex(const std::vector<MultiPoly>& gb, const MonomialOrder& ord,
                                   const std::vector<std::size_t>& live, VarListPtr vars) {
    const std::size_t arity = vars->size();
    std::vector<BasisElem> G;
    for (const auto& g : gb) G.push_back(make_elem(g, ord));

    for (const auto& e : G)
        if (e.lm.is_one()) return {MultiPoly::constant(vars, Rational(1))};

    // zero-dimensionality: every live variable needs a pure power among LMs
    for (std::size_t v : live) {
        bool found = false;
        for (const auto& e : G) {
            bool pure = e.lm[v] > 0;
            for (std::size_t u = 0; u < arity && pure; ++u)
                if (u != v && e.lm[u]) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) throw std::runtime_error("ideal not zero-dimensional or wrong order");
    }

    // staircase (standard monomials) of the source basis
    auto is_standard = [&](const Monomial& m) {
        for (const auto& e : G)
            if (e.lm.divides(m)) return false;
        return true;
    };
    std::set<Monomial, LexLess> staircase;
    {
        std::vector<Monomial> todo{Monomial::one(arity)};
        while (!todo.empty()) {
            Monomial m = todo.back();
            todo.pop_back();
            if (staircase.count(m) || !is_standard(m)) continue;
            staircase.insert(m);
            for (std::size_t v : live) {
                Monomial next = m;
                next[v] += 1;
                todo.push_back(next);
            }
        }
    }
    std::vector<Monomial> B(staircase.begin(), staircase.end());
    const std::size_t D = B.size();
    std::map<Monomial, std::size_t, LexLess> b_index;
    for (std::size_t i = 0; i < D; ++i) b_index[B[i]] = i;

    using Vec = std::vector<Rational>;
    auto nf_vector = [&](const Monomial& m) {
        auto it = b_index.find(m);
        Vec v(D, Rational(0));
        if (it != b_index.end()) {
            v[it->second] = 1;
            return v;
        }
        MultiPoly nf = reduce_full(MultiPoly::from_terms(vars, {{m, Rational(1)}}), G, ord, nullptr);
        for (const auto& t : nf.terms()) v[b_index.at(t.mono)] = t.coeff;
        return v;
    };

    // multiplication tables: column i of table[v] is NF(x_v * B[i])
    std::map<std::size_t, std::vector<Vec>> table;
    for (std::size_t v : live) {
        std::vector<Vec> cols(D);
        for (std::size_t i = 0; i < D; ++i) {
            Monomial m = B[i];
            m[v] += 1;
            cols[i] = nf_vector(m);
        }
        table[v] = std::move(cols);
    }

    // lex staircase walk
    struct PivotRow {
        std::size_t col;
        Vec row;
        std::map<Monomial, Rational, LexLess> combo;  // row as combination of accepted monomials
    };
    std::vector<PivotRow> pivots;
    std::vector<Monomial> accepted;
    std::vector<Vec> accepted_vec;
    std::vector<Monomial> lex_lms;
    std::vector<MultiPoly> lex_basis;

    struct Cand {
        long parent;  // index into accepted, -1 for the unit monomial
        std::size_t var;
    };
    std::map<Monomial, Cand, LexLess> queue;
    queue.emplace(Monomial::one(arity), Cand{-1, 0});

    while (!queue.empty()) {
        auto front = queue.begin();
        Monomial m = front->first;
        Cand cand = front->second;
        queue.erase(front);
        bool redundant = false;
        for (const auto& lm : lex_lms)
            if (lm.divides(m)) { redundant = true; break; }
        if (redundant) continue;

        Vec u;
        if (cand.parent < 0) {
            u = nf_vector(m);
        } else {
            const Vec& pv = accepted_vec[static_cast<std::size_t>(cand.parent)];
            const auto& cols = table.at(cand.var);
            u.assign(D, Rational(0));
            for (std::size_t i = 0; i < D; ++i) {
                if (pv[i].is_zero()) continue;
                const Vec& col = cols[i];
                for (std::size_t r = 0; r < D; ++r)
                    if (!col[r].is_zero()) u[r] += pv[i] * col[r];
            }
        }

        Vec r = u;
        std::map<Monomial, Rational, LexLess> combo;
        combo[m] = Rational(1);
        for (const auto& piv : pivots) {
            if (r[piv.col].is_zero()) continue;
            Rational f = r[piv.col] / piv.row[piv.col];
            for (std::size_t i = 0; i < D; ++i)
                if (!piv.row[i].is_zero()) r[i] -= f * piv.row[i];
            for (const auto& [mono, c] : piv.combo) {
                combo[mono] -= f * c;
                if (combo[mono].is_zero()) combo.erase(mono);
            }
        }
        bool zero = true;
        std::size_t col = 0;
        for (std::size_t i = 0; i < D; ++i)
            if (!r[i].is_zero()) { zero = false; col = i; break; }

        if (zero) {
            std::vector<MultiPoly::Term> terms;
            for (const auto& [mono, c] : combo) terms.push_back({mono, c});
            MultiPoly g = MultiPoly::from_terms(vars, std::move(terms));
            lex_basis.push_back(scalar_primitive(g, lex_order()));
            lex_lms.push_back(m);
        } else {
            pivots.push_back({col, std::move(r), std::move(combo)});
            accepted.push_back(m);
            accepted_vec.push_back(std::move(u));
            long idx = static_cast<long>(accepted.size()) - 1;
            for (std::size_t v : live) {
                Monomial next = m;
                next[v] += 1;
                queue.emplace(next, Cand{idx, v});
            }
            if (accepted.size() > D)
                throw std::logic_error("fglm: staircase dimension overrun");
        }
    }
    return lex_basis;
}

}  // namespace

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero polynomial");
    BasisElem a{f, f.leading_term(ord).mono, f.leading_term(ord).coeff};
    BasisElem b{g, g.leading_term(ord).mono, g.leading_term(ord).coeff};
    return spoly(a, b);
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord,
                         const GroebnerBudget& budget) {
    validate_gens(gens);
    Ctx ctx{ord, budget, {}, 0};
    Prepared prep = eliminate_linear(gens, ord);
    if (prep.unit_ideal)
        return finalize({MultiPoly::constant(gens[0].vars(), Rational(1))}, ord, ctx);
    std::vector<MultiPoly> all =
        prep.core.empty() ? std::vector<MultiPoly>{} : core_buchberger(prep.core, ord, ctx);
    for (auto& s : prep.stash) all.push_back(std::move(s));
    return finalize(std::move(all), ord, ctx);
}

GroebnerBasis lex_via_grevlex(const std::vector<MultiPoly>& gens, const GroebnerBudget& budget) {
    validate_gens(gens);
    MonomialOrder lex = lex_order();
    MonomialOrder grev = grevlex_order();
    Ctx ctx{lex, budget, {}, 0};
    Prepared prep = eliminate_linear(gens, lex);
    if (prep.unit_ideal)
        return finalize({MultiPoly::constant(gens[0].vars(), Rational(1))}, lex, ctx);
    std::vector<MultiPoly> all;
    if (!prep.core.empty()) {
        Ctx gctx{grev, budget, {}, 0};
        std::vector<MultiPoly> grev_gb = core_buchberger(prep.core, grev, gctx);
        grev_gb = interreduce(std::move(grev_gb), grev, gctx);
        ctx.stats = gctx.stats;
        all = fglm_to_lex(grev_gb, grev, prep.live, gens[0].vars());
    }
    for (auto& s : prep.stash) all.push_back(std::move(s));
    return finalize(std::move(all), lex, ctx);
}

UniPoly eliminate_univariate(const GroebnerBasis& basis) {
    const std::size_t arity = basis.generators.empty() ? 0 : basis.generators[0].arity();
    if (arity == 0) throw std::runtime_error("ideal not zero-dimensional or wrong order");
    const std::size_t last = arity - 1;
    for (const auto& g : basis.generators) {
        if (g.is_univariate_in(last)) {
            UniPoly u = UniPoly::from_multipoly(g, last);
            return u.content_primitive().second;
        }
    }
    throw std::runtime_error("ideal not zero-dimensional or wrong order");
}

std::string GroebnerBasis::render() const {
    std::string out;
    for (const auto& g : generators) {
        out += g.render();
        out += "\n";
    }
    return out;
}

std::string GroebnerBasis::to_json_string() const {
    nlohmann::json j;
    j["order"] = order.kind == OrderKind::Lex ? "lex" : "grevlex";
    if (!generators.empty()) j["variables"] = *generators[0].vars();
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : g.terms()) {
            nlohmann::json term;
            term["exponents"] = t.mono.exponents();
            term["coefficient"] = t.coeff.to_string();
            terms.push_back(term);
        }
        gens.push_back(terms);
    }
    j["generators"] = gens;
    return j.dump(2);
}

}  // namespace hbmosc
