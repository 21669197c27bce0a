#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace adic {

// Exponent vector; length = number of ring variables.
using Monomial = std::vector<int32_t>;

enum class MonomialOrder { Grevlex, Lex, Grlex };

MonomialOrder order_from_string(const std::string& s);
std::string order_to_string(MonomialOrder o);

inline long total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0L);
}

long weighted_degree(const Monomial& m, const std::vector<unsigned>& weights);

// Returns <0, 0, >0 like a three-way comparison; "greater" means larger in
// the monomial order. Ties between orders broken by declaration order of
// the variables (earlier variable wins in lex-style comparisons).
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder o);

bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

inline bool mono_is_one(const Monomial& m) {
    for (int32_t e : m)
        if (e != 0) return false;
    return true;
}

// Enumerates all monomials in `nvars` variables of exact weighted degree d.
std::vector<Monomial> monomials_of_weighted_degree(std::size_t nvars,
                                                   const std::vector<unsigned>& weights,
                                                   long d);

} // namespace adic
