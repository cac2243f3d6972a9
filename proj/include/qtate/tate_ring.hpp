#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtate/gf.hpp"

namespace qtate {

/* The graded ring k[x,y,s^{+-1}] modulo
 *     t = 2 :  x^2 + y^2 = xy,  y^3 = 0
 *     t >= 4:  x^2 = xy,        y^3 = 0
 * with |x| = |y| = 1, |s| = 4.  Elements are stored on the monomial frame
 * B = {1, x, y, x^2, y^2, x^2y} twisted by powers of s; in both variants all
 * monomials in x,y of degree > 3 vanish. */
enum class Variant { T2, T4 };

inline Variant variant_for_t(int t) { return t == 2 ? Variant::T2 : Variant::T4; }
inline std::string variant_name(Variant v) { return v == Variant::T2 ? "t=2" : "t>=4"; }

// indices into B
enum BIdx : int { B_ONE = 0, B_X = 1, B_Y = 2, B_X2 = 3, B_Y2 = 4, B_X2Y = 5 };
inline constexpr int kBDeg[6] = {0, 1, 1, 2, 2, 3};
inline constexpr const char* kBName[6] = {"1", "x", "y", "x^2", "y^2", "x^2*y"};

struct Mono {
    int s = 0;  // power of s
    int b = B_ONE;

    int degree() const { return 4 * s + kBDeg[b]; }
    bool operator==(const Mono& o) const { return s == o.s && b == o.b; }
    bool operator<(const Mono& o) const { return s != o.s ? s < o.s : b < o.b; }
};

class RingElement {
public:
    RingElement() : var_(Variant::T2) {}
    explicit RingElement(Variant v) : var_(v) {}
    RingElement(Variant v, Mono m, Gf c = Gf::one()) : var_(v) {
        if (!c.is_zero()) terms_.push_back({m, c});
    }

    static RingElement zero(Variant v) { return RingElement(v); }
    static RingElement one(Variant v) { return RingElement(v, Mono{0, B_ONE}); }

    Variant variant() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Mono, Gf>>& terms() const { return terms_; }

    Gf coeff(Mono m) const;
    void add_term(Mono m, Gf c);

    friend RingElement operator+(const RingElement& u, const RingElement& v);
    friend RingElement operator*(const RingElement& u, const RingElement& v);
    RingElement& operator+=(const RingElement& v);
    RingElement operator*(Gf c) const;
    bool operator==(const RingElement& v) const { return var_ == v.var_ && terms_ == v.terms_; }
    bool operator!=(const RingElement& v) const { return !(*this == v); }

    RingElement s_shift(int i) const;  // multiply by s^i

    // degree of a homogeneous element; nullopt for 0 or inhomogeneous
    std::optional<int> degree() const;
    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    std::string str() const;

private:
    Variant var_;
    std::vector<std::pair<Mono, Gf>> terms_;  // sorted by Mono, nonzero coefficients
};

// generators
RingElement ring_x(Variant v);
RingElement ring_y(Variant v);
RingElement ring_z(Variant v);  // z = x + y
RingElement ring_s(Variant v, int power = 1);
RingElement ring_mono(Variant v, int s, int b, Gf c = Gf::one());

/* Monomial k-basis of the graded piece of the given degree (dimension pattern
 * 1,2,2,1).  Used as the coordinate frame for all linear algebra. */
std::vector<Mono> piece_monomials(int degree);

/* The basis enumeration of the interface: degree d |-> s^{floor(d/4)} times
 * {1} / {x,y} / {y^2, xy} / {x^2y}; the xy slot is stored in the B frame
 * (t=2: x^2+y^2, t>=4: x^2). */
std::vector<RingElement> basis(int degree, Variant v);

RingElement xy_alias(Variant v);  // xy rewritten into the B frame

// coordinates of a homogeneous element w.r.t. piece_monomials(degree)
std::vector<Gf> piece_coords(const RingElement& e, int degree);
RingElement from_piece_coords(Variant v, int degree, const std::vector<Gf>& coords);

/* z-frame view for t >= 4: k[x,z,s^{+-1}]/(xz, x^3+z^3) with monomial frame
 * {1, x, z, x^2, z^2, x^3}. */
enum ZIdx : int { Z_ONE = 0, Z_X = 1, Z_Z = 2, Z_X2 = 3, Z_Z2 = 4, Z_X3 = 5 };
inline constexpr int kZDeg[6] = {0, 1, 1, 2, 2, 3};
inline constexpr const char* kZName[6] = {"1", "x", "z", "x^2", "z^2", "x^3"};

struct ZMono {
    int s = 0;
    int zb = Z_ONE;
    bool operator==(const ZMono& o) const { return s == o.s && zb == o.zb; }
    bool operator<(const ZMono& o) const { return s != o.s ? s < o.s : zb < o.zb; }
};

class ZElement {
public:
    ZElement() = default;
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<ZMono, Gf>>& terms() const { return terms_; }
    void add_term(ZMono m, Gf c);
    std::string str() const;

private:
    std::vector<std::pair<ZMono, Gf>> terms_;
};

ZElement to_z_form(const RingElement& u);            // t >= 4 only
RingElement from_z_form(Variant v, const ZElement& u);

RingElement parse_ring_element(Variant v, const std::string& s);

}  // namespace qtate
