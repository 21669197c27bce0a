#include "adic/coeff.hpp"

namespace adic {

CoeffDomain CoeffDomain::fp(unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw NonPrimeModulus(std::to_string(p));
    return CoeffDomain(Kind::Fp, p);
}

mpq_class CoeffDomain::canon(const mpq_class& a) const {
    mpq_class r = a;
    r.canonicalize();
    switch (kind_) {
    case Kind::QQ:
        return r;
    case Kind::ZZ:
        if (r.get_den() != 1)
            throw UnsupportedBase("non-integer coefficient over ZZ: " + r.get_str());
        return r;
    case Kind::Fp: {
        mpz_class p(p_);
        mpz_class num = r.get_num() % p;
        if (num < 0) num += p;
        if (r.get_den() != 1) {
            mpz_class den = r.get_den() % p;
            mpz_class deninv;
            if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw Error("division by zero in F_" + std::to_string(p_));
            num = (num * deninv) % p;
            if (num < 0) num += p;
        }
        return mpq_class(num);
    }
    }
    return r;
}

mpq_class CoeffDomain::inv(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (c == 0)
        throw Error("division by zero");
    switch (kind_) {
    case Kind::QQ:
        return mpq_class(1) / c;
    case Kind::ZZ:
        if (c == 1 || c == -1) return c;
        throw UnsupportedBase("non-unit inverse over ZZ: " + c.get_str());
    case Kind::Fp: {
        mpz_class p(p_), v = c.get_num(), r;
        if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error("division by zero in F_" + std::to_string(p_));
        return mpq_class(r);
    }
    }
    throw Error("unreachable");
}

std::string CoeffDomain::to_string() const {
    switch (kind_) {
    case Kind::ZZ: return "ZZ";
    case Kind::QQ: return "QQ";
    case Kind::Fp: return "Fp:" + std::to_string(p_);
    }
    return "?";
}

CoeffDomain CoeffDomain::parse(const std::string& spec) {
    if (spec == "QQ") return qq();
    if (spec == "ZZ") return zz();
    if (spec.rfind("Fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(spec.substr(3));
            return fp(p);
        } catch (const NonPrimeModulus&) {
            throw;
        } catch (...) {
            throw ParseError("bad coefficient spec: " + spec);
        }
    }
    throw ParseError("bad coefficient spec: " + spec);
}

std::string coeff_to_string(const mpq_class& c) {
    return c.get_str();
}

} // namespace adic
