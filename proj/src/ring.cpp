#include "adic/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "adic/error.hpp"

namespace adic {

RingPtr Ring::poly(CoeffDomain dom, std::vector<std::string> vars,
                   MonomialOrder order, std::optional<std::vector<unsigned>> grading) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ParseError("empty variable name");
        if (!seen.insert(v).second) throw DuplicateVariable(v);
    }
    if (grading) {
        if (grading->size() != vars.size())
            throw ParseError("grading length != variable count");
        for (unsigned w : *grading)
            if (w == 0) throw ParseError("grading degrees must be positive");
    }
    auto r = std::shared_ptr<Ring>(new Ring());
    r->dom_ = dom;
    r->vars_ = std::move(vars);
    r->order_ = order;
    r->grading_ = std::move(grading);
    return r;
}

RingPtr Ring::integers() {
    static RingPtr zz = poly(CoeffDomain::zz(), {});
    return zz;
}

RingPtr Ring::rationals() {
    static RingPtr qq = poly(CoeffDomain::qq(), {});
    return qq;
}

RingPtr make_quotient_ring(RingPtr ambient, std::vector<Poly> reduced_gb) {
    if (!ambient->domain().is_field())
        throw UnsupportedBase("quotient rings require field coefficients");
    if (ambient->is_quotient())
        throw UnsupportedBase("iterated quotients: quotient the free ring instead");
    auto r = std::shared_ptr<Ring>(new Ring(*ambient));
    r->modulus_gb_ = std::move(reduced_gb);
    r->forced_quotient_ = true;
    r->ambient_ = ambient;
    return r;
}

std::vector<unsigned> Ring::weights() const {
    if (grading_) return *grading_;
    return std::vector<unsigned>(vars_.size(), 1u);
}

RingPtr Ring::ambient_free() const {
    if (ambient_) return ambient_;
    return shared_from_this();
}

bool Ring::is_graded() const {
    if (!dom_.is_field()) return false;
    auto w = weights();
    for (const Poly& g : modulus_gb_)
        if (!poly_is_homogeneous(g, w, nullptr)) return false;
    return true;
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Poly Ring::nf(const Poly& p) const {
    if (modulus_gb_.empty()) return p;
    return poly_reduce(ctx(), p, modulus_gb_);
}

RingElement Ring::element(const Poly& p) const {
    return RingElement(shared_from_this(), p);
}
RingElement Ring::zero() const { return element(poly_zero()); }
RingElement Ring::one() const { return element(poly_const(ctx(), 1)); }
RingElement Ring::constant(const mpq_class& c) const { return element(poly_const(ctx(), c)); }
RingElement Ring::var(std::size_t i) const { return element(poly_var(ctx(), i)); }
RingElement Ring::parse(const std::string& text) const {
    return element(parse_poly(*this, text));
}

std::string Ring::poly_str(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : p.terms) {
        mpq_class c = t.coeff;
        bool neg = c < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        mpq_class a = neg ? mpq_class(-c) : c;
        bool unit_mono = mono_is_one(t.mono);
        if (a != 1 || unit_mono) {
            os << a.get_str();
            if (!unit_mono) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << vars_[i];
            if (t.mono[i] != 1) os << "^" << t.mono[i];
        }
    }
    return os.str();
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << dom_.to_string() << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i)
        os << (i ? "," : "") << vars_[i];
    os << "]";
    if (is_quotient()) {
        os << "/(";
        for (std::size_t i = 0; i < modulus_gb_.size(); ++i)
            os << (i ? ", " : "") << poly_str(modulus_gb_[i]);
        os << ")";
    }
    return os.str();
}

bool ring_equal(const Ring& a, const Ring& b) {
    if (&a == &b) return true;
    if (a.domain() != b.domain() || a.vars() != b.vars() || a.order() != b.order())
        return false;
    if (a.custom_grading() != b.custom_grading()) return false;
    const auto& ma = a.modulus();
    const auto& mb = b.modulus();
    if (ma.size() != mb.size()) return false;
    for (std::size_t i = 0; i < ma.size(); ++i)
        if (!poly_equal(ma[i], mb[i])) return false;
    return a.is_quotient() == b.is_quotient();
}

void RingElement::check(const RingElement& o) const {
    if (!ring_ || !o.ring_ || !ring_equal(ring_, o.ring_))
        throw RingMismatch("elements of different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check(o);
    return RingElement(ring_, poly_add(ring_->ctx(), p_, o.p_));
}
RingElement RingElement::operator-(const RingElement& o) const {
    check(o);
    return RingElement(ring_, poly_sub(ring_->ctx(), p_, o.p_));
}
RingElement RingElement::operator*(const RingElement& o) const {
    check(o);
    return RingElement(ring_, poly_mul(ring_->ctx(), p_, o.p_));
}
RingElement RingElement::operator-() const {
    return RingElement(ring_, poly_neg(ring_->ctx(), p_));
}
RingElement RingElement::pow(unsigned n) const {
    return RingElement(ring_, poly_pow(ring_->ctx(), p_, n));
}
bool RingElement::operator==(const RingElement& o) const {
    check(o);
    return poly_equal(p_, o.p_);
}

// ---- polynomial parser ------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
};

mpz_class lex_integer(Lexer& lx) {
    std::string digits;
    while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek())))
        digits += lx.get();
    if (digits.empty()) throw ParseError("expected integer in '" + lx.s + "'");
    return mpz_class(digits);
}

std::string lex_ident(Lexer& lx) {
    std::string id;
    char c = lx.peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
        throw ParseError("expected identifier in '" + lx.s + "'");
    while (!lx.eof()) {
        c = lx.peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') id += lx.get();
        else break;
    }
    return id;
}

// monomial := factor ('*' factor)* ; factor := number['/'number] | var['^'exp]
Poly parse_term(const Ring& ring, Lexer& lx) {
    const PolyCtx cx = ring.ctx();
    mpq_class coeff = 1;
    Monomial mono(cx.nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = lex_integer(lx);
            if (lx.peek() == '/') {
                lx.get();
                mpz_class den = lex_integer(lx);
                if (den == 0) throw ParseError("zero denominator");
                coeff *= mpq_class(num, den);
            } else {
                coeff *= mpq_class(num);
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = lex_ident(lx);
            int vi = ring.var_index(id);
            if (vi < 0) throw ParseError("unknown variable '" + id + "' in ring " + ring.describe());
            long exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = lex_integer(lx).get_si();
                if (exp < 0) throw ParseError("negative exponent");
            }
            mono[static_cast<std::size_t>(vi)] += static_cast<int32_t>(exp);
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + lx.s + "'");
        }
        if (lx.peek() == '*') {
            lx.get();
            expect_factor = true;
        } else {
            expect_factor = false;
        }
    }
    coeff.canonicalize();
    return poly_term(cx, mono, coeff);
}

} // namespace

Poly parse_poly(const Ring& ring, const std::string& text) {
    const PolyCtx cx = ring.ctx();
    Lexer lx{text};
    Poly acc = poly_zero();
    if (lx.eof()) throw ParseError("empty polynomial");
    bool neg = false;
    // optional leading sign
    if (lx.peek() == '-') { lx.get(); neg = true; }
    else if (lx.peek() == '+') { lx.get(); }
    while (true) {
        Poly t = parse_term(ring, lx);
        acc = neg ? poly_sub(cx, acc, t) : poly_add(cx, acc, t);
        if (lx.eof()) break;
        char c = lx.get();
        if (c == '+') neg = false;
        else if (c == '-') neg = true;
        else throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + text + "'");
        if (lx.eof()) throw ParseError("trailing operator in '" + text + "'");
    }
    return acc;
}

} // namespace adic
