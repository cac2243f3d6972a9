#include "qtate/tate_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtate {

namespace {

int floordiv(int a, int n) { return (a >= 0) ? a / n : -(((-a) + n - 1) / n); }
int floormod(int a, int n) { return a - n * floordiv(a, n); }

/* Products of B monomials, coefficients all 1.  mul_b[v][b1][b2] lists the
 * B indices of b1*b2; monomials of degree > 3 vanish in both variants. */
const std::vector<int>& mul_b(Variant v, int b1, int b2) {
    using L = std::vector<int>;
    static const L t2[6][6] = {
        /* 1   */ {L{B_ONE}, L{B_X}, L{B_Y}, L{B_X2}, L{B_Y2}, L{B_X2Y}},
        /* x   */ {L{B_X}, L{B_X2}, L{B_X2, B_Y2}, L{}, L{B_X2Y}, L{}},
        /* y   */ {L{B_Y}, L{B_X2, B_Y2}, L{B_Y2}, L{B_X2Y}, L{}, L{}},
        /* x^2 */ {L{B_X2}, L{}, L{B_X2Y}, L{}, L{}, L{}},
        /* y^2 */ {L{B_Y2}, L{B_X2Y}, L{}, L{}, L{}, L{}},
        /* x^2y*/ {L{B_X2Y}, L{}, L{}, L{}, L{}, L{}},
    };
    static const L t4[6][6] = {
        /* 1   */ {L{B_ONE}, L{B_X}, L{B_Y}, L{B_X2}, L{B_Y2}, L{B_X2Y}},
        /* x   */ {L{B_X}, L{B_X2}, L{B_X2}, L{B_X2Y}, L{B_X2Y}, L{}},
        /* y   */ {L{B_Y}, L{B_X2}, L{B_Y2}, L{B_X2Y}, L{}, L{}},
        /* x^2 */ {L{B_X2}, L{B_X2Y}, L{B_X2Y}, L{}, L{}, L{}},
        /* y^2 */ {L{B_Y2}, L{B_X2Y}, L{}, L{}, L{}, L{}},
        /* x^2y*/ {L{B_X2Y}, L{}, L{}, L{}, L{}, L{}},
    };
    return (v == Variant::T2 ? t2 : t4)[b1][b2];
}

}  // namespace

Gf RingElement::coeff(Mono m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return Gf::zero();
}

void RingElement::add_term(Mono m, Gf c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& p, const Mono& mm) { return p.first < mm; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

RingElement operator+(const RingElement& u, const RingElement& v) {
    RingElement r = u;
    r += v;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& v) {
    if (var_ != v.var_) throw std::invalid_argument("RingElement: variant mismatch");
    for (const auto& [m, c] : v.terms_) add_term(m, c);
    return *this;
}

RingElement operator*(const RingElement& u, const RingElement& v) {
    if (u.var_ != v.var_) throw std::invalid_argument("RingElement: variant mismatch");
    RingElement r(u.var_);
    for (const auto& [m1, c1] : u.terms_)
        for (const auto& [m2, c2] : v.terms_) {
            const Gf c = c1 * c2;
            for (int b : mul_b(u.var_, m1.b, m2.b))
                r.add_term(Mono{m1.s + m2.s, b}, c);
        }
    return r;
}

RingElement RingElement::operator*(Gf c) const {
    RingElement r(var_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

RingElement RingElement::s_shift(int i) const {
    RingElement r(var_);
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_) m.s += i;
    return r;
}

std::optional<int> RingElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string parts;
        if (c == Gf::alpha()) parts = "a";
        else if (c == Gf(3)) parts = "(a+1)";
        auto push = [&parts](const std::string& p) {
            if (!parts.empty()) parts += "*";
            parts += p;
        };
        if (m.s != 0) push("s^" + std::to_string(m.s));
        switch (m.b) {
            case B_ONE: break;
            case B_X: push("x"); break;
            case B_Y: push("y"); break;
            case B_X2: push("x^2"); break;
            case B_Y2: push("y^2"); break;
            case B_X2Y: push("x^2"); parts += "*y"; break;
        }
        if (parts.empty()) parts = "1";
        os << parts;
    }
    return os.str();
}

RingElement ring_x(Variant v) { return RingElement(v, Mono{0, B_X}); }
RingElement ring_y(Variant v) { return RingElement(v, Mono{0, B_Y}); }
RingElement ring_z(Variant v) { return ring_x(v) + ring_y(v); }
RingElement ring_s(Variant v, int power) { return RingElement(v, Mono{power, B_ONE}); }
RingElement ring_mono(Variant v, int s, int b, Gf c) { return RingElement(v, Mono{s, b}, c); }

std::vector<Mono> piece_monomials(int degree) {
    const int q = floordiv(degree, 4);
    switch (floormod(degree, 4)) {
        case 0: return {Mono{q, B_ONE}};
        case 1: return {Mono{q, B_X}, Mono{q, B_Y}};
        case 2: return {Mono{q, B_X2}, Mono{q, B_Y2}};
        default: return {Mono{q, B_X2Y}};
    }
}

RingElement xy_alias(Variant v) {
    if (v == Variant::T2) return ring_mono(v, 0, B_X2) + ring_mono(v, 0, B_Y2);
    return ring_mono(v, 0, B_X2);
}

std::vector<RingElement> basis(int degree, Variant v) {
    const int q = floordiv(degree, 4);
    const RingElement sq = ring_s(v, q);
    switch (floormod(degree, 4)) {
        case 0: return {sq};
        case 1: return {ring_x(v) * sq, ring_y(v) * sq};
        case 2: return {ring_mono(v, q, B_Y2), xy_alias(v) * sq};
        default: return {ring_mono(v, q, B_X2Y)};
    }
}

std::vector<Gf> piece_coords(const RingElement& e, int degree) {
    const auto monos = piece_monomials(degree);
    std::vector<Gf> out(monos.size(), Gf::zero());
    for (const auto& [m, c] : e.terms()) {
        bool found = false;
        for (size_t k = 0; k < monos.size(); ++k)
            if (monos[k] == m) {
                out[k] = c;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("piece_coords: element not homogeneous of degree " +
                                                std::to_string(degree));
    }
    return out;
}

RingElement from_piece_coords(Variant v, int degree, const std::vector<Gf>& coords) {
    const auto monos = piece_monomials(degree);
    if (coords.size() != monos.size())
        throw std::invalid_argument("from_piece_coords: wrong coordinate count");
    RingElement r(v);
    for (size_t k = 0; k < monos.size(); ++k) r.add_term(monos[k], coords[k]);
    return r;
}

void ZElement::add_term(ZMono m, Gf c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& p, const ZMono& mm) { return p.first < mm; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

std::string ZElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string parts;
        if (c == Gf::alpha()) parts = "a";
        else if (c == Gf(3)) parts = "(a+1)";
        auto push = [&parts](const std::string& p) {
            if (!parts.empty()) parts += "*";
            parts += p;
        };
        if (m.s != 0) push("s^" + std::to_string(m.s));
        if (m.zb != Z_ONE) push(kZName[m.zb]);
        if (parts.empty()) parts = "1";
        os << parts;
    }
    return os.str();
}

ZElement to_z_form(const RingElement& u) {
    if (u.variant() != Variant::T4)
        throw std::invalid_argument("to_z_form: defined for the t >= 4 variant only");
    ZElement r;
    for (const auto& [m, c] : u.terms()) {
        // 1->1, x->x, y->x+z, x^2->x^2, y^2->x^2+z^2, x^2y->x^3
        switch (m.b) {
            case B_ONE: r.add_term(ZMono{m.s, Z_ONE}, c); break;
            case B_X: r.add_term(ZMono{m.s, Z_X}, c); break;
            case B_Y:
                r.add_term(ZMono{m.s, Z_X}, c);
                r.add_term(ZMono{m.s, Z_Z}, c);
                break;
            case B_X2: r.add_term(ZMono{m.s, Z_X2}, c); break;
            case B_Y2:
                r.add_term(ZMono{m.s, Z_X2}, c);
                r.add_term(ZMono{m.s, Z_Z2}, c);
                break;
            case B_X2Y: r.add_term(ZMono{m.s, Z_X3}, c); break;
        }
    }
    return r;
}

RingElement from_z_form(Variant v, const ZElement& u) {
    if (v != Variant::T4)
        throw std::invalid_argument("from_z_form: defined for the t >= 4 variant only");
    RingElement r(v);
    for (const auto& [m, c] : u.terms()) {
        switch (m.zb) {
            case Z_ONE: r.add_term(Mono{m.s, B_ONE}, c); break;
            case Z_X: r.add_term(Mono{m.s, B_X}, c); break;
            case Z_Z:
                r.add_term(Mono{m.s, B_X}, c);
                r.add_term(Mono{m.s, B_Y}, c);
                break;
            case Z_X2: r.add_term(Mono{m.s, B_X2}, c); break;
            case Z_Z2:
                r.add_term(Mono{m.s, B_X2}, c);
                r.add_term(Mono{m.s, B_Y2}, c);
                break;
            case Z_X3: r.add_term(Mono{m.s, B_X2Y}, c); break;
        }
    }
    return r;
}

namespace {

// one monomial factor: "s^-2", "x", "x^2", "y", "y^2", coefficient "a"/"(a+1)"/"1"/"0"
struct Factor {
    enum Kind { COEF, S, X, Y } kind;
    Gf coef;
    int exp;
};

Factor parse_factor(const std::string& f) {
    if (f.empty()) throw std::invalid_argument("empty factor in ring element");
    if (f == "0") return {Factor::COEF, Gf::zero(), 0};
    if (f == "1") return {Factor::COEF, Gf::one(), 0};
    if (f == "a") return {Factor::COEF, Gf::alpha(), 0};
    if (f == "(a+1)" || f == "a+1") return {Factor::COEF, Gf(3), 0};
    char v = f[0];
    int exp = 1;
    if (f.size() > 1) {
        if (f[1] != '^') throw std::invalid_argument("bad factor: " + f);
        exp = std::stoi(f.substr(2));
    }
    if (v == 's') return {Factor::S, Gf::one(), exp};
    if (v == 'x') return {Factor::X, Gf::one(), exp};
    if (v == 'y') return {Factor::Y, Gf::one(), exp};
    throw std::invalid_argument("bad factor: " + f);
}

}  // namespace

RingElement parse_ring_element(Variant var, const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty ring element");
    // split on '+' at paren depth 0, but keep "a+1" inside parens together
    std::vector<std::string> monos;
    std::string cur;
    int depth = 0;
    for (char ch : t) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            monos.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    monos.push_back(cur);

    RingElement out(var);
    for (const auto& mono : monos) {
        if (mono.empty()) throw std::invalid_argument("empty monomial in: " + s);
        std::vector<std::string> factors;
        std::string f;
        depth = 0;
        for (char ch : mono) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == '*' && depth == 0) {
                factors.push_back(f);
                f.clear();
            } else {
                f += ch;
            }
        }
        factors.push_back(f);

        Gf coef = Gf::one();
        int se = 0, xe = 0, ye = 0;
        for (const auto& fs : factors) {
            const Factor fac = parse_factor(fs);
            switch (fac.kind) {
                case Factor::COEF: coef *= fac.coef; break;
                case Factor::S: se += fac.exp; break;
                case Factor::X: xe += fac.exp; break;
                case Factor::Y: ye += fac.exp; break;
            }
        }
        // assemble via ring multiplication so x^3 etc. reduce correctly
        RingElement term = ring_s(var, se) * coef;
        for (int k = 0; k < xe; ++k) term = term * ring_x(var);
        for (int k = 0; k < ye; ++k) term = term * ring_y(var);
        out += term;
    }
    return out;
}

}  // namespace qtate
