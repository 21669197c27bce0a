#include "adic/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "adic/error.hpp"

namespace adic {

VecPoly vec_zero(std::size_t rank) { return VecPoly(rank); }

bool vec_is_zero(const VecPoly& v) {
    for (const Poly& p : v)
        if (!p.is_zero()) return false;
    return true;
}

VecPoly vec_add(const PolyCtx& cx, const VecPoly& a, const VecPoly& b) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_add(cx, a[i], b[i]);
    return r;
}

VecPoly vec_sub(const PolyCtx& cx, const VecPoly& a, const VecPoly& b) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(cx, a[i], b[i]);
    return r;
}

VecPoly vec_neg(const PolyCtx& cx, const VecPoly& a) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_neg(cx, a[i]);
    return r;
}

VecPoly vec_mul_term(const PolyCtx& cx, const VecPoly& a, const Monomial& m, const mpq_class& c) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_mul_term(cx, a[i], m, c);
    return r;
}

VecPoly vec_scale_poly(const PolyCtx& cx, const VecPoly& a, const Poly& p) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_mul(cx, a[i], p);
    return r;
}

bool vec_equal(const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!poly_equal(a[i], b[i])) return false;
    return true;
}

std::optional<VecLT> vec_leading(const VecPoly& v, MonomialOrder) {
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero())
            return VecLT{p, v[p].lt().mono, v[p].lt().coeff};
    return std::nullopt;
}

namespace {

// position-over-term: smaller position wins, then the ring order
int pot_cmp(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb,
            MonomialOrder o) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return mono_cmp(ma, mb, o);
}

struct SPair {
    std::size_t i, j;     // row indices, i < j
    std::size_t pos;      // shared leading position
    Monomial lcm;
};

} // namespace

VecPoly SubmoduleGB::reduce_full(const VecPoly& v_in) const {
    const PolyCtx cx = free_ring_->ctx();
    VecPoly work = v_in;
    VecPoly rem(v_in.size());
    while (true) {
        auto lt = vec_leading(work, cx.order);
        if (!lt) break;
        bool reduced = false;
        for (const VecPoly& row : rows_) {
            auto rlt = vec_leading(row, cx.order);
            if (!rlt || rlt->pos != lt->pos) continue;
            if (!mono_divides(rlt->mono, lt->mono)) continue;
            mpq_class c = cx.dom.div(lt->coeff, rlt->coeff);
            Monomial q = mono_div(lt->mono, rlt->mono);
            work = vec_sub(cx, work, vec_mul_term(cx, row, q, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lt->pos].terms.push_back(Term{lt->mono, lt->coeff});
            work[lt->pos].terms.erase(work[lt->pos].terms.begin());
        }
    }
    return rem;
}

SubmoduleGB::SubmoduleGB(RingPtr ring, std::size_t rank, std::vector<VecPoly> gens,
                         bool with_tags, Budget budget) {
    if (!ring->domain().is_field())
        throw UnsupportedBase("Groebner path requires field coefficients (ring "
                              + ring->describe() + ")");
    ring_ = ring;
    free_ring_ = ring->ambient_free();
    rank_ = rank;
    ngens_ = gens.size();
    tags_ = with_tags;
    const PolyCtx cx = free_ring_->ctx();
    const std::size_t width = rank_ + (tags_ ? ngens_ : 0);

    std::vector<VecPoly> g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != rank_)
            throw Error("submodule generator has wrong rank");
        VecPoly row(width);
        for (std::size_t p = 0; p < rank_; ++p) row[p] = ring_->nf(gens[i][p]);
        if (tags_) row[rank_ + i] = poly_const(cx, 1);
        if (!vec_is_zero(row)) g.push_back(std::move(row));
    }
    // fold in the quotient modulus, one block per visible position
    for (std::size_t p = 0; p < rank_; ++p)
        for (const Poly& w : ring_->modulus()) {
            VecPoly row(width);
            row[p] = w;
            g.push_back(std::move(row));
        }

    // make rows monic up front
    for (VecPoly& row : g) {
        auto lt = vec_leading(row, cx.order);
        row = vec_mul_term(cx, row, Monomial(cx.nvars, 0), cx.dom.inv(lt->coeff));
    }

    const bool product_criterion_ok = (width == 1);

    auto sp_less = [&](const SPair& a, const SPair& b) {
        // normal strategy: smallest lcm first
        int c = pot_cmp(a.pos, a.lcm, b.pos, b.lcm, cx.order);
        if (c != 0) return c > 0; // "greater" in POT sorts later => smallest first means reversed
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    rows_ = std::move(g); // working basis; rows_ used by reduce_full
    std::vector<SPair> queue;
    auto push_pairs = [&](std::size_t jnew) {
        auto ltj = vec_leading(rows_[jnew], cx.order);
        for (std::size_t i = 0; i < jnew; ++i) {
            auto lti = vec_leading(rows_[i], cx.order);
            if (!lti || lti->pos != ltj->pos) continue;
            queue.push_back(SPair{i, jnew, ltj->pos, mono_lcm(lti->mono, ltj->mono)});
        }
    };
    for (std::size_t j = 0; j < rows_.size(); ++j) push_pairs(j);

    std::set<std::pair<std::size_t, std::size_t>> treated;
    std::size_t processed = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), sp_less);
        SPair sp = *it;
        queue.erase(it);
        treated.insert({sp.i, sp.j});

        auto lti = vec_leading(rows_[sp.i], cx.order);
        auto ltj = vec_leading(rows_[sp.j], cx.order);

        if (product_criterion_ok && mono_coprime(lti->mono, ltj->mono))
            continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < rows_.size() && !skip; ++k) {
            if (k == sp.i || k == sp.j) continue;
            auto ltk = vec_leading(rows_[k], cx.order);
            if (!ltk || ltk->pos != sp.pos || !mono_divides(ltk->mono, sp.lcm)) continue;
            auto p1 = std::minmax(sp.i, k);
            auto p2 = std::minmax(sp.j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        if (++processed > budget.pairs)
            throw BudgetExceeded("Groebner pair budget (" + std::to_string(budget.pairs) + ")");

        VecPoly a = vec_mul_term(cx, rows_[sp.i], mono_div(sp.lcm, lti->mono), 1);
        VecPoly b = vec_mul_term(cx, rows_[sp.j], mono_div(sp.lcm, ltj->mono), 1);
        VecPoly s = reduce_full(vec_sub(cx, a, b));
        if (vec_is_zero(s)) continue;
        auto slt = vec_leading(s, cx.order);
        s = vec_mul_term(cx, s, Monomial(cx.nvars, 0), cx.dom.inv(slt->coeff));
        rows_.push_back(std::move(s));
        push_pairs(rows_.size() - 1);
    }

    // minimalize: drop rows whose leading term is divisible by another row's
    std::vector<VecPoly> minimal;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto lti = vec_leading(rows_[i], cx.order);
        bool redundant = false;
        for (std::size_t j = 0; j < rows_.size() && !redundant; ++j) {
            if (i == j) continue;
            auto ltj = vec_leading(rows_[j], cx.order);
            if (ltj->pos != lti->pos || !mono_divides(ltj->mono, lti->mono)) continue;
            if (mono_divides(lti->mono, ltj->mono)) {
                // equal leading monomials: keep the earlier row
                redundant = j < i;
            } else {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(rows_[i]);
    }
    rows_ = std::move(minimal);

    // tail-reduce each row against the others (reduced Groebner basis)
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        VecPoly self = rows_[i];
        rows_[i] = vec_zero(self.size()); // blank out so reduce_full skips it
        auto lt = vec_leading(self, cx.order);
        VecPoly tail = self;
        tail[lt->pos].terms.erase(tail[lt->pos].terms.begin());
        VecPoly tr = reduce_full(tail);
        tr[lt->pos].terms.insert(tr[lt->pos].terms.begin(), Term{lt->mono, lt->coeff});
        rows_[i] = std::move(tr);
    }

    // deterministic ordering: descending by leading term
    std::sort(rows_.begin(), rows_.end(), [&](const VecPoly& x, const VecPoly& y) {
        auto lx = vec_leading(x, cx.order);
        auto ly = vec_leading(y, cx.order);
        return pot_cmp(lx->pos, lx->mono, ly->pos, ly->mono, cx.order) > 0;
    });

    // visible basis and leading terms
    for (const VecPoly& row : rows_) {
        VecPoly vis(rank_);
        bool nonzero = false;
        for (std::size_t p = 0; p < rank_; ++p) {
            vis[p] = row[p];
            if (!row[p].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        auto lt = vec_leading(vis, cx.order);
        lts_.push_back({lt->pos, lt->mono});
        // rows lying entirely in the modulus block are not part of the
        // visible submodule basis
        bool in_modulus = ring_->is_quotient();
        if (in_modulus) {
            for (std::size_t p = 0; p < rank_ && in_modulus; ++p)
                if (!ring_->nf(vis[p]).is_zero()) in_modulus = false;
        }
        if (!in_modulus) basis_.push_back(std::move(vis));
    }
}

VecPoly SubmoduleGB::nf(const VecPoly& v) const {
    if (v.size() != rank_) throw Error("nf: wrong rank");
    const std::size_t width = rank_ + (tags_ ? ngens_ : 0);
    VecPoly aug(width);
    for (std::size_t p = 0; p < rank_; ++p) aug[p] = v[p];
    VecPoly r = reduce_full(aug);
    r.resize(rank_);
    return r;
}

std::pair<VecPoly, std::vector<Poly>> SubmoduleGB::divide(const VecPoly& v) const {
    if (!tags_) throw Error("divide: basis computed without tags");
    if (v.size() != rank_) throw Error("divide: wrong rank");
    const PolyCtx cx = free_ring_->ctx();
    VecPoly aug(rank_ + ngens_);
    for (std::size_t p = 0; p < rank_; ++p) aug[p] = v[p];
    VecPoly r = reduce_full(aug);
    // r = (nf ; a) with v = nf - sum a_i g_i mod modulus block
    VecPoly nfv(rank_);
    for (std::size_t p = 0; p < rank_; ++p) nfv[p] = r[p];
    std::vector<Poly> coeffs(ngens_);
    for (std::size_t i = 0; i < ngens_; ++i)
        coeffs[i] = ring_->nf(poly_neg(cx, r[rank_ + i]));
    return {nfv, coeffs};
}

std::optional<std::vector<Poly>> SubmoduleGB::solve(const VecPoly& v) const {
    auto [r, c] = divide(v);
    if (!vec_is_zero(r)) return std::nullopt;
    return c;
}

std::vector<std::vector<Poly>> SubmoduleGB::syzygies() const {
    if (!tags_) throw Error("syzygies: basis computed without tags");
    std::vector<std::vector<Poly>> out;
    for (const VecPoly& row : rows_) {
        bool vis_zero = true;
        for (std::size_t p = 0; p < rank_ && vis_zero; ++p)
            if (!row[p].is_zero()) vis_zero = false;
        if (!vis_zero) continue;
        std::vector<Poly> s(ngens_);
        bool nonzero = false;
        for (std::size_t i = 0; i < ngens_; ++i) {
            s[i] = ring_->nf(row[rank_ + i]);
            if (!s[i].is_zero()) nonzero = true;
        }
        if (nonzero) out.push_back(std::move(s));
    }
    return out;
}

bool SubmoduleGB::finite_cokernel() const {
    const std::size_t nv = free_ring_->nvars();
    for (std::size_t p = 0; p < rank_; ++p) {
        for (std::size_t var = 0; var < nv; ++var) {
            bool covered = false;
            for (const auto& [pos, mono] : lts_) {
                if (pos != p) continue;
                bool pure = true;
                for (std::size_t k = 0; k < nv && pure; ++k)
                    if (k != var && mono[k] != 0) pure = false;
                if (pure) { covered = true; break; }
            }
            if (!covered) return false;
        }
        if (nv == 0) {
            // over the base field the quotient at position p is finite
            // dimensional automatically
            continue;
        }
    }
    return true;
}

// ---- Ideal -------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<RingElement> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (!ring_equal(g.ring(), ring_))
            throw RingMismatch("ideal generator from another ring");
}

bool Ideal::is_zero() const {
    for (const auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

const SubmoduleGB& Ideal::gb(Budget budget) const {
    std::lock_guard<std::mutex> hold(*lock_);
    if (!gb_) {
        std::vector<VecPoly> cols;
        for (const auto& g : gens_)
            cols.push_back(VecPoly{g.poly()});
        gb_ = std::make_shared<SubmoduleGB>(ring_, 1, std::move(cols), false, budget);
    }
    return *gb_;
}

std::vector<RingElement> Ideal::groebner_basis(Budget budget) const {
    const SubmoduleGB& g = gb(budget);
    std::vector<RingElement> out;
    for (const VecPoly& row : g.reduced_basis())
        out.push_back(RingElement(ring_, row[0]));
    return out;
}

RingElement Ideal::normal_form(const RingElement& f, Budget budget) const {
    if (!ring_equal(f.ring(), ring_)) throw RingMismatch("normal_form: element not in the ideal's ring");
    VecPoly r = gb(budget).nf(VecPoly{f.poly()});
    return RingElement(ring_, r[0]);
}

bool Ideal::contains(const RingElement& f, Budget budget) const {
    return normal_form(f, budget).is_zero();
}

bool radical_membership(const RingElement& f, const Ideal& ideal, Budget budget) {
    RingPtr ring = ideal.ring();
    if (!ring->domain().is_field())
        throw UnsupportedBase("radical membership requires field coefficients");
    if (f.is_zero()) {
        // 0 lies in every radical
        return true;
    }
    // Rabinowitsch: 1 in I + J + (1 - w*f) inside R_free[w]
    RingPtr free_ring = ring->ambient_free();
    std::vector<std::string> vars = free_ring->vars();
    std::string w = "_rab_w";
    while (free_ring->var_index(w) >= 0) w += "_";
    vars.push_back(w);
    RingPtr ext = Ring::poly(free_ring->domain(), vars, free_ring->order());
    const PolyCtx excx = ext->ctx();
    std::vector<RingElement> gens;
    for (const auto& g : ideal.gens())
        gens.push_back(ext->element(poly_extend_vars(g.poly(), excx.nvars)));
    for (const Poly& m : ring->modulus())
        gens.push_back(ext->element(poly_extend_vars(m, excx.nvars)));
    Poly wf = poly_mul(excx, poly_var(excx, excx.nvars - 1),
                       poly_extend_vars(f.poly(), excx.nvars));
    gens.push_back(ext->element(poly_sub(excx, poly_const(excx, 1), wf)));
    Ideal ext_ideal(ext, gens);
    return ext_ideal.contains(ext->one(), budget);
}

RingPtr quotient_ring(RingPtr ambient, const std::vector<RingElement>& gens, Budget budget) {
    if (ambient->is_quotient())
        throw UnsupportedBase("quotient of a quotient ring");
    Ideal ideal(ambient, gens);
    std::vector<Poly> gb;
    for (const auto& g : ideal.groebner_basis(budget))
        gb.push_back(g.poly());
    return make_quotient_ring(ambient, std::move(gb));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<RingElement> gens;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens())
            gens.push_back(x * y);
    return Ideal(a.ring(), gens);
}

Ideal ideal_power(const Ideal& a, unsigned n) {
    if (n == 0)
        return Ideal(a.ring(), {a.ring()->one()});
    Ideal r = a;
    for (unsigned i = 1; i < n; ++i) r = ideal_product(r, a);
    return r;
}

} // namespace adic
