#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adic/poly.hpp"

namespace adic {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class RingElement;

// A commutative ring the engine can compute in: a free polynomial ring over
// ZZ, QQ or F_p (zero variables gives the base ring itself), or a quotient
// of a field-coefficient polynomial ring by an ideal with a reduced Groebner
// basis. Immutable after construction.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr poly(CoeffDomain dom, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::Grevlex,
                        std::optional<std::vector<unsigned>> grading = std::nullopt);
    static RingPtr integers();  // ZZ as the zero-variable polynomial ring
    static RingPtr rationals();

    bool is_quotient() const { return !modulus_gb_.empty() || forced_quotient_; }
    const CoeffDomain& domain() const { return dom_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    MonomialOrder order() const { return order_; }
    const std::optional<std::vector<unsigned>>& custom_grading() const { return grading_; }

    // Weight-1 default grading unless a custom one was supplied.
    std::vector<unsigned> weights() const;

    // ZZ with no variables: the integers, handled by the SNF engine.
    bool is_zz() const { return dom_.kind() == CoeffDomain::Kind::ZZ && vars_.empty() && !is_quotient(); }
    bool is_field_coeff() const { return dom_.is_field(); }

    PolyCtx ctx() const { return PolyCtx{dom_, order_, vars_.size()}; }

    // For quotient rings: the reduced Groebner basis of the defining ideal.
    const std::vector<Poly>& modulus() const { return modulus_gb_; }
    // The free polynomial ring this quotient was built from (self for free rings).
    RingPtr ambient_free() const;

    // Whether all graded machinery applies: field coefficients and a
    // homogeneous modulus (trivially true for free rings over a field).
    bool is_graded() const;

    int var_index(const std::string& name) const; // -1 if absent

    RingElement element(const Poly& p) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement constant(const mpq_class& c) const;
    RingElement var(std::size_t i) const;
    RingElement parse(const std::string& text) const;

    // Canonical representative: Groebner normal form mod the modulus
    // (identity for free rings).
    Poly nf(const Poly& p) const;

    std::string poly_str(const Poly& p) const;
    std::string describe() const;

private:
    friend RingPtr make_quotient_ring(RingPtr ambient, std::vector<Poly> reduced_gb);
    Ring() : dom_(CoeffDomain::qq()) {}

    CoeffDomain dom_;
    std::vector<std::string> vars_;
    MonomialOrder order_ = MonomialOrder::Grevlex;
    std::optional<std::vector<unsigned>> grading_;
    std::vector<Poly> modulus_gb_;
    bool forced_quotient_ = false;
    RingPtr ambient_;
};

bool ring_equal(const Ring& a, const Ring& b);
inline bool ring_equal(const RingPtr& a, const RingPtr& b) { return ring_equal(*a, *b); }

// Elements carry their owning ring; in quotient rings they are stored in
// Groebner normal form.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, Poly p) : ring_(std::move(ring)), p_(ring_->nf(std::move(p))) {}

    const RingPtr& ring() const { return ring_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement pow(unsigned n) const;
    bool operator==(const RingElement& o) const;

    std::string str() const { return ring_->poly_str(p_); }

private:
    void check(const RingElement& o) const;
    RingPtr ring_;
    Poly p_;
};

// Parses the ASCII polynomial grammar: terms joined by + and -, monomials
// as coefficient*var^exp products, implicit exponent 1, implicit
// coefficient 1; rational coefficients as a/b.
Poly parse_poly(const Ring& ring, const std::string& text);

} // namespace adic
