#include "adic/poly.hpp"

#include "adic/error.hpp"

namespace adic {

Poly poly_zero() { return Poly{}; }

Poly poly_const(const PolyCtx& cx, const mpq_class& c) {
    mpq_class cc = cx.dom.canon(c);
    Poly p;
    if (cc != 0) p.terms.push_back(Term{Monomial(cx.nvars, 0), cc});
    return p;
}

Poly poly_term(const PolyCtx& cx, const Monomial& m, const mpq_class& c) {
    mpq_class cc = cx.dom.canon(c);
    Poly p;
    if (cc != 0) p.terms.push_back(Term{m, cc});
    return p;
}

Poly poly_var(const PolyCtx& cx, std::size_t i, int32_t exp) {
    Monomial m(cx.nvars, 0);
    m.at(i) = exp;
    return poly_term(cx, m, 1);
}

Poly poly_add(const PolyCtx& cx, const Poly& a, const Poly& b) {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mono_cmp(a.terms[i].mono, b.terms[j].mono, cx.order);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            mpq_class s = cx.dom.add(a.terms[i].coeff, b.terms[j].coeff);
            if (s != 0) r.terms.push_back(Term{a.terms[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

Poly poly_neg(const PolyCtx& cx, const Poly& a) {
    Poly r = a;
    for (Term& t : r.terms) t.coeff = cx.dom.neg(t.coeff);
    return r;
}

Poly poly_sub(const PolyCtx& cx, const Poly& a, const Poly& b) {
    return poly_add(cx, a, poly_neg(cx, b));
}

Poly poly_mul_term(const PolyCtx& cx, const Poly& a, const Monomial& m, const mpq_class& c) {
    mpq_class cc = cx.dom.canon(c);
    Poly r;
    if (cc == 0) return r;
    r.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) {
        mpq_class p = cx.dom.mul(t.coeff, cc);
        if (p != 0) r.terms.push_back(Term{mono_mul(t.mono, m), p});
    }
    return r;
}

Poly poly_scale(const PolyCtx& cx, const Poly& a, const mpq_class& c) {
    return poly_mul_term(cx, a, Monomial(cx.nvars, 0), c);
}

Poly poly_mul(const PolyCtx& cx, const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    // accumulate by repeated merging; fine at desk scale
    for (const Term& t : a.terms)
        r = poly_add(cx, r, poly_mul_term(cx, b, t.mono, t.coeff));
    return r;
}

Poly poly_pow(const PolyCtx& cx, const Poly& a, unsigned n) {
    Poly r = poly_const(cx, 1);
    for (unsigned i = 0; i < n; ++i) r = poly_mul(cx, r, a);
    return r;
}

bool poly_equal(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].mono != b.terms[i].mono || a.terms[i].coeff != b.terms[i].coeff)
            return false;
    return true;
}

Poly poly_extend_vars(const Poly& a, std::size_t new_nvars) {
    Poly r = a;
    for (Term& t : r.terms) {
        if (t.mono.size() > new_nvars)
            throw Error("poly_extend_vars: shrinking");
        t.mono.resize(new_nvars, 0);
    }
    return r;
}

Poly poly_restrict_vars(const Poly& a, std::size_t new_nvars) {
    Poly r = a;
    for (Term& t : r.terms) {
        for (std::size_t i = new_nvars; i < t.mono.size(); ++i)
            if (t.mono[i] != 0)
                throw Error("poly_restrict_vars: nonzero exponent in dropped variable");
        t.mono.resize(new_nvars);
    }
    return r;
}

Poly poly_reduce(const PolyCtx& cx, const Poly& f, const std::vector<Poly>& reducers) {
    Poly rem;          // accumulated normal form (irreducible terms)
    Poly work = f;
    while (!work.is_zero()) {
        const Term& lt = work.lt();
        bool reduced = false;
        for (const Poly& g : reducers) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lt().mono, lt.mono)) {
                mpq_class c = cx.dom.div(lt.coeff, g.lt().coeff);
                Monomial q = mono_div(lt.mono, g.lt().mono);
                work = poly_sub(cx, work, poly_mul_term(cx, g, q, c));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(lt);
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

bool poly_is_homogeneous(const Poly& a, const std::vector<unsigned>& weights, long* degree_out) {
    if (a.is_zero()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    long d = weighted_degree(a.terms.front().mono, weights);
    for (const Term& t : a.terms)
        if (weighted_degree(t.mono, weights) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

} // namespace adic
