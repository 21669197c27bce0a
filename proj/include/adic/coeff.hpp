#pragma once

#include <gmpxx.h>

#include <string>

#include "adic/error.hpp"

namespace adic {

// Coefficient domain of a ring: the integers, the rationals, or a prime
// field F_p. Coefficient values are stored as canonical mpq_class; the
// domain drives canonicalization and inversion.
//
// Invariants: rationals reduced with positive denominator (mpq_class
// canonical form); F_p values are integers in [0, p); p is prime.
class CoeffDomain {
public:
    enum class Kind { ZZ, QQ, Fp };

    static CoeffDomain zz() { return CoeffDomain(Kind::ZZ, 0); }
    static CoeffDomain qq() { return CoeffDomain(Kind::QQ, 0); }
    static CoeffDomain fp(unsigned long p);

    Kind kind() const { return kind_; }
    unsigned long modulus() const { return p_; }
    bool is_field() const { return kind_ != Kind::ZZ; }

    bool operator==(const CoeffDomain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoeffDomain& o) const { return !(*this == o); }

    // Brings a value into canonical form for this domain.
    mpq_class canon(const mpq_class& a) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
    mpq_class neg(const mpq_class& a) const { return canon(-a); }

    // Multiplicative inverse; throws UnsupportedBase over ZZ for non-units.
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    std::string to_string() const;
    static CoeffDomain parse(const std::string& spec); // "QQ" | "ZZ" | "Fp:<p>"

private:
    CoeffDomain(Kind k, unsigned long p) : kind_(k), p_(p) {}

    Kind kind_;
    unsigned long p_;
};

std::string coeff_to_string(const mpq_class& c);

} // namespace adic
