#pragma once

#include <gmpxx.h>

#include <vector>

#include "adic/coeff.hpp"
#include "adic/monomial.hpp"

namespace adic {

struct Term {
    Monomial mono;
    mpq_class coeff;
};

// Arithmetic context: everything polynomial arithmetic needs to know
// about the ambient free polynomial ring.
struct PolyCtx {
    CoeffDomain dom;
    MonomialOrder order;
    std::size_t nvars;
};

// Sparse polynomial; terms sorted strictly descending in the ring order,
// no zero coefficients stored.
class Poly {
public:
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    std::size_t size() const { return terms.size(); }
};

Poly poly_zero();
Poly poly_const(const PolyCtx& cx, const mpq_class& c);
Poly poly_term(const PolyCtx& cx, const Monomial& m, const mpq_class& c);
Poly poly_var(const PolyCtx& cx, std::size_t i, int32_t exp = 1);

Poly poly_add(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_sub(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_neg(const PolyCtx& cx, const Poly& a);
Poly poly_mul(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_scale(const PolyCtx& cx, const Poly& a, const mpq_class& c);
// a * (c * x^m)
Poly poly_mul_term(const PolyCtx& cx, const Poly& a, const Monomial& m, const mpq_class& c);
Poly poly_pow(const PolyCtx& cx, const Poly& a, unsigned n);

bool poly_equal(const Poly& a, const Poly& b);

// Extends the exponent vectors to a ring with extra trailing variables.
Poly poly_extend_vars(const Poly& a, std::size_t new_nvars);
// Drops trailing variables; all dropped exponents must be zero.
Poly poly_restrict_vars(const Poly& a, std::size_t new_nvars);

// Full normal form of f against reducers (leading terms assumed invertible;
// field coefficients). Deterministic: always reduces the largest reducible
// monomial, picking the first reducer in list order.
Poly poly_reduce(const PolyCtx& cx, const Poly& f, const std::vector<Poly>& reducers);

bool poly_is_homogeneous(const Poly& a, const std::vector<unsigned>& weights, long* degree_out);

} // namespace adic
