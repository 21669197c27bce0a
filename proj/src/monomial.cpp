#include "adic/monomial.hpp"

#include "adic/error.hpp"

namespace adic {

MonomialOrder order_from_string(const std::string& s) {
    if (s == "grevlex") return MonomialOrder::Grevlex;
    if (s == "lex") return MonomialOrder::Lex;
    if (s == "grlex") return MonomialOrder::Grlex;
    throw ParseError("unknown monomial order: " + s);
}

std::string order_to_string(MonomialOrder o) {
    switch (o) {
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::Grlex: return "grlex";
    }
    return "?";
}

long weighted_degree(const Monomial& m, const std::vector<unsigned>& weights) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += static_cast<long>(m[i]) * static_cast<long>(i < weights.size() ? weights[i] : 1u);
    return d;
}

static int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder o) {
    switch (o) {
    case MonomialOrder::Lex:
        return lex_cmp(a, b);
    case MonomialOrder::Grlex: {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db ? 1 : -1;
        return lex_cmp(a, b);
    }
    case MonomialOrder::Grevlex: {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db ? 1 : -1;
        // last nonzero entry of a-b negative => a greater
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    }
    return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

static void enumerate_rec(std::size_t var, std::size_t nvars,
                          const std::vector<unsigned>& w, long remaining,
                          Monomial& cur, std::vector<Monomial>& out) {
    if (var == nvars) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    unsigned wi = var < w.size() ? w[var] : 1u;
    if (wi == 0) return;
    for (long e = 0; e * static_cast<long>(wi) <= remaining; ++e) {
        cur[var] = static_cast<int32_t>(e);
        enumerate_rec(var + 1, nvars, w, remaining - e * static_cast<long>(wi), cur, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> monomials_of_weighted_degree(std::size_t nvars,
                                                   const std::vector<unsigned>& weights,
                                                   long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial cur(nvars, 0);
    enumerate_rec(0, nvars, weights, d, cur, out);
    return out;
}

} // namespace adic
