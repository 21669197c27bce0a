#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "adic/groebner.hpp"
#include "adic/snf.hpp"

namespace adic {

// Exact vector-space dimensions of graded pieces over the coefficient field.
struct GradedDims {
    std::map<long, unsigned long> dims; // degree -> dimension (absent = 0)
    unsigned long at(long d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0ul : it->second;
    }
    bool operator==(const GradedDims& o) const { return dims == o.dims; }
};

// Finitely presented module over a supported ring: cokernel of the map
// R^r -> R^g given by the relation columns. Value type; the presentation
// data is shared and immutable, caches are write-once.
class FPModule {
public:
    FPModule() = default;
    FPModule(RingPtr ring, std::size_t gens, std::vector<VecPoly> relations,
             std::optional<std::vector<long>> degrees = std::nullopt);

    static FPModule free_module(RingPtr ring, std::size_t rank,
                                std::optional<std::vector<long>> degrees = std::nullopt);
    static FPModule zero_module(RingPtr ring);
    // R/I as a module on one generator
    static FPModule cyclic(RingPtr ring, const std::vector<RingElement>& ideal_gens);

    const RingPtr& ring() const;
    std::size_t gens() const;
    const std::vector<VecPoly>& relations() const;
    const std::optional<std::vector<long>>& degrees() const;
    FPModule with_degrees(std::optional<std::vector<long>> degrees) const;

    // Canonical representative of an element given by a coefficient vector.
    VecPoly nf(const VecPoly& v) const;
    bool element_is_zero(const VecPoly& v) const;
    VecPoly gen(std::size_t i) const;

    bool is_zero() const;
    bool is_free_presentation() const { return relations().empty(); }

    // Finite length: finite-dimensional over the coefficient field / finite
    // abelian group over ZZ.
    bool is_finite_length() const;

    // ZZ path only: (torsion invariant factors > 1, free rank).
    std::pair<IntVec, std::size_t> zz_invariants() const;

    // Shared relation solver (tagged Groebner basis of the relation columns
    // for field rings); built on demand, write-once.
    const SubmoduleGB& relation_gb() const;

    // ZZ path: relation matrix as integers (gens x ncols) and its Hermite form.
    IntMat zz_relation_matrix() const;
    const IntMat& zz_relation_hermite() const;

    std::string describe() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// Morphism of finitely presented modules, stored as a matrix between the
// free covers (target gens x source gens). Construction verifies the
// well-definedness certificate: every source relation lands in the target
// relation submodule.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FPModule source, FPModule target, std::vector<std::vector<Poly>> matrix);

    static ModuleMap zero(FPModule source, FPModule target);
    static ModuleMap identity(FPModule m);
    // 1x1-style scalar multiplication M -> M by a ring element
    static ModuleMap scalar(FPModule m, const RingElement& s);

    const FPModule& source() const { return src_; }
    const FPModule& target() const { return tgt_; }
    const std::vector<std::vector<Poly>>& matrix() const { return mat_; }
    VecPoly column(std::size_t j) const;
    std::vector<VecPoly> columns() const;

    VecPoly apply(const VecPoly& v) const; // canonical form in the target

    bool is_zero_map() const;
    bool is_surjective() const;
    bool is_injective() const;
    // Constructs a two-sided inverse if the map is an isomorphism.
    std::optional<ModuleMap> inverse() const;

    // Degree shift d with f(M_e) in N_{e+d} for all e, when both sides are
    // graded and the matrix is homogeneous; 0 for degree-preserving maps.
    std::optional<long> homogeneous_degree() const;

private:
    FPModule src_, tgt_;
    std::vector<std::vector<Poly>> mat_;
};

ModuleMap compose(const ModuleMap& f, const ModuleMap& g); // f after g
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_sub(const ModuleMap& f, const ModuleMap& g);

struct SubWithInclusion {
    FPModule module;
    ModuleMap inclusion;
};
struct QuotWithProjection {
    FPModule module;
    ModuleMap projection;
};

SubWithInclusion kernel(const ModuleMap& f);
QuotWithProjection cokernel(const ModuleMap& f);
// Image of f: presented on the source generators; inclusion into the target
// and projection from the source.
struct ImageData {
    FPModule module;
    ModuleMap inclusion;  // image -> target
    ModuleMap projection; // source -> image
};
ImageData image(const ModuleMap& f);

FPModule tensor(const FPModule& a, const FPModule& b);
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g);
// Hom(M, N) as an FPModule; an element (tuple of target elements indexed by
// source generators) can be decoded into an actual map.
SubWithInclusion hom_module(const FPModule& m, const FPModule& n);
ModuleMap hom_element_to_map(const SubWithInclusion& hom, const FPModule& m,
                             const FPModule& n, const VecPoly& h);

struct DirectSum {
    FPModule module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<FPModule>& parts);

struct FreeResolution {
    FPModule base;                 // the resolved module
    std::vector<FPModule> frees;   // P_0, P_1, ..., P_L (may stop early)
    std::vector<ModuleMap> diffs;  // d_k : P_k -> P_{k-1}, k >= 1
    ModuleMap augmentation;        // P_0 -> base
};
FreeResolution free_resolution(const FPModule& m, std::size_t length, Budget budget = {});

FPModule ext_module(const FPModule& m, const FPModule& n, std::size_t k, Budget budget = {});
FPModule tor_module(const FPModule& m, const FPModule& n, std::size_t k, Budget budget = {});

Ideal annihilator(const FPModule& m, Budget budget = {});
Ideal annihilator_element(const FPModule& m, const VecPoly& x, Budget budget = {});
bool is_ideal_torsion(const FPModule& m, const Ideal& ideal, Budget budget = {});

// Graded machinery (field coefficients, homogeneous presentations).
bool module_is_graded(const FPModule& m);
GradedDims graded_piece_dims(const FPModule& m, long lo, long hi);
// Standard-monomial basis of the degree-d piece: (generator index, monomial).
std::vector<std::pair<std::size_t, Monomial>> graded_component_basis(const FPModule& m, long d);
// Dense matrix of the degree-d component of a degree-0 homogeneous map
// (rows: target basis, cols: source basis).
std::vector<std::vector<mpq_class>> graded_map_component(const ModuleMap& f, long d);
std::size_t field_matrix_rank(const CoeffDomain& dom, std::vector<std::vector<mpq_class>> m);

// ---- submodule helpers (used by towers and functors) --------------------

// Generators c with sum c_i cols_i = 0 in the module T.
std::vector<VecPoly> syzygies_mod(const FPModule& t, const std::vector<VecPoly>& cols,
                                  Budget budget = {});
// Coefficients expressing target in the given columns modulo T's relations.
std::optional<std::vector<Poly>> solve_mod(const FPModule& t, const std::vector<VecPoly>& cols,
                                           const VecPoly& target, Budget budget = {});
// Containment / equality of spans inside T.
bool span_contains(const FPModule& t, const std::vector<VecPoly>& outer,
                   const std::vector<VecPoly>& inner, Budget budget = {});
bool span_equal(const FPModule& t, const std::vector<VecPoly>& a,
                const std::vector<VecPoly>& b, Budget budget = {});
bool span_is_zero(const FPModule& t, const std::vector<VecPoly>& cols);

// Subquotient ker(from)/im(into) at a fixed module, bundled with the data
// needed to classify ambient elements (used for cohomology and induced maps).
class Subquotient {
public:
    // into: X -> Y, from: Y -> Z with from∘into = 0; pass zero maps to get
    // plain kernels / full quotients.
    Subquotient(const ModuleMap& into, const ModuleMap& from, Budget budget = {});

    const FPModule& module() const { return h_; }
    const FPModule& ambient() const { return y_; }
    // Representative in the ambient free cover of the i-th generator of H.
    VecPoly representative(std::size_t i) const;
    // Coordinates in H of an ambient element known to lie in ker(from).
    VecPoly classify(const VecPoly& y) const;

private:
    FPModule h_, y_;
    std::vector<VecPoly> ugens_;                  // kernel generators in R^{g_Y}
    std::shared_ptr<SubmoduleGB> solver_;         // tagged GB of [U | rel_Y] (field path)
    IntMat zz_cols_;                              // [U | rel_Y] (ZZ path)
};

// Map H(a) -> H(b) induced by phi on ambients (phi maps ker/im compatibly).
ModuleMap induced_map(const Subquotient& a, const Subquotient& b, const ModuleMap& phi);

// SNF/graded-dimension invariants agree (the downgraded "isomorphic" check).
bool invariants_match(const FPModule& a, const FPModule& b, long lo, long hi);

} // namespace adic
