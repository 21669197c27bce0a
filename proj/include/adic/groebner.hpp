#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "adic/ring.hpp"

namespace adic {

// A vector of polynomials: an element of a free module R^rank.
using VecPoly = std::vector<Poly>;

struct Budget {
    std::size_t pairs = 50000; // Buchberger S-pairs processed per basis
};

VecPoly vec_zero(std::size_t rank);
bool vec_is_zero(const VecPoly& v);
VecPoly vec_add(const PolyCtx& cx, const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const PolyCtx& cx, const VecPoly& a, const VecPoly& b);
VecPoly vec_neg(const PolyCtx& cx, const VecPoly& a);
VecPoly vec_mul_term(const PolyCtx& cx, const VecPoly& a, const Monomial& m, const mpq_class& c);
VecPoly vec_scale_poly(const PolyCtx& cx, const VecPoly& a, const Poly& p);
bool vec_equal(const VecPoly& a, const VecPoly& b);

// Leading term of a vector under the position-over-term order (smaller
// position wins; ties broken by the ring monomial order).
struct VecLT {
    std::size_t pos;
    Monomial mono;
    mpq_class coeff;
};
std::optional<VecLT> vec_leading(const VecPoly& v, MonomialOrder order);

// Reduced Groebner basis of a submodule of R^rank, with an optional tag
// block tracking how basis elements are expressed in the input generators.
// Over quotient rings the defining ideal is folded in automatically: normal
// forms, membership, and syzygies are all relative to the quotient.
class SubmoduleGB {
public:
    SubmoduleGB(RingPtr ring, std::size_t rank, std::vector<VecPoly> gens,
                bool with_tags, Budget budget = {});

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    std::size_t ngens() const { return ngens_; }

    // Canonical representative of v modulo the submodule.
    VecPoly nf(const VecPoly& v) const;
    bool contains(const VecPoly& v) const { return vec_is_zero(nf(v)); }

    // (normal form, coefficients c) with v = nf + sum c_i * gens_i in
    // (R/J)^rank. Requires tags.
    std::pair<VecPoly, std::vector<Poly>> divide(const VecPoly& v) const;

    // Membership certificate: coefficients expressing v in the generators,
    // or nullopt. Requires tags.
    std::optional<std::vector<Poly>> solve(const VecPoly& v) const;

    // Groebner basis of the submodule itself (normal forms of the tracked
    // generators' span mod the quotient modulus); excludes rows coming
    // purely from the modulus block.
    const std::vector<VecPoly>& reduced_basis() const { return basis_; }

    // Generators of the syzygy module of the input generators over the
    // visible (possibly quotient) ring. Requires tags.
    std::vector<std::vector<Poly>> syzygies() const;

    // True when R^rank / (this submodule) is a finite-dimensional vector
    // space over the coefficient field (staircase finite in each position).
    bool finite_cokernel() const;

    // Leading (pos, mono) pairs of the full reducer set (submodule rows and
    // modulus rows).
    const std::vector<std::pair<std::size_t, Monomial>>& leading_terms() const { return lts_; }

private:
    VecPoly reduce_full(const VecPoly& augmented) const;

    RingPtr ring_;          // visible ring (may be a quotient)
    RingPtr free_ring_;     // ambient free ring used for arithmetic
    std::size_t rank_ = 0;
    std::size_t ngens_ = 0;
    bool tags_ = false;
    // rows of the reduced augmented basis, each of length rank_ (+ ngens_ if tags)
    std::vector<VecPoly> rows_;
    std::vector<VecPoly> basis_;   // visible-block parts, nonzero, modulus rows removed
    std::vector<std::pair<std::size_t, Monomial>> lts_;
};

// ---- ideal layer -------------------------------------------------------

// Finitely generated ideal with a lazily computed reduced Groebner basis.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<RingElement> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElement>& gens() const { return gens_; }
    bool is_zero() const;

    const SubmoduleGB& gb(Budget budget = {}) const; // cached, write-once

    // Reduced Groebner basis as ring elements (the nonzero images in the
    // visible ring). Idempotent and order-deterministic.
    std::vector<RingElement> groebner_basis(Budget budget = {}) const;

    RingElement normal_form(const RingElement& f, Budget budget = {}) const;
    bool contains(const RingElement& f, Budget budget = {}) const;

private:
    RingPtr ring_;
    std::vector<RingElement> gens_;
    mutable std::shared_ptr<SubmoduleGB> gb_;
    mutable std::shared_ptr<std::mutex> lock_ = std::make_shared<std::mutex>();
};

// f in sqrt(I), via the Rabinowitsch trick in a one-variable extension.
bool radical_membership(const RingElement& f, const Ideal& ideal, Budget budget = {});

// Quotient of a free polynomial ring over a field by an ideal; the defining
// ideal is stored as its reduced Groebner basis.
RingPtr quotient_ring(RingPtr ambient, const std::vector<RingElement>& gens, Budget budget = {});

// Product ideal I*J (generator products) and I^n.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);

} // namespace adic
