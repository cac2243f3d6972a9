#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtate/resolution.hpp"
#include "qtate/tate_ring.hpp"

using namespace qtate;

namespace {

/* Exponent-reduction oracle: x^e y^d rewritten into the monomial frame by
 * the presentation relations, computed separately from the ring tables. */
RingElement reduce_oracle(Variant v, int e, int d) {
    RingElement r(v);
    if (e + d > 3) return r;
    if (v == Variant::T2) {
        // xy = x^2 + y^2, x^3 = y^3 = 0, xy^2 = x^2y
        if (e == 1 && d == 1) return ring_mono(v, 0, B_X2) + ring_mono(v, 0, B_Y2);
        if (e == 3 || d == 3) return r;
        if (e == 1 && d == 2) return ring_mono(v, 0, B_X2Y);
        if (e == 2 && d == 1) return ring_mono(v, 0, B_X2Y);
    } else {
        // xy = x^2, y^3 = 0, x^3 = x^2y, x y^2 = x^2 y
        if (e == 1 && d == 1) return ring_mono(v, 0, B_X2);
        if (e == 3 && d == 0) return ring_mono(v, 0, B_X2Y);
        if (d == 3) return r;
        if ((e == 1 && d == 2) || (e == 2 && d == 1)) return ring_mono(v, 0, B_X2Y);
    }
    static const int bidx[4][4] = {{B_ONE, B_Y, B_Y2, -1}, {B_X, -1, -1, -1},
                                   {B_X2, -1, -1, -1}, {-1, -1, -1, -1}};
    if (e <= 3 && d <= 3 && bidx[e][d] >= 0) return ring_mono(v, 0, bidx[e][d]);
    return r;
}

RingElement pow_xy(Variant v, int e, int d) {
    RingElement r = RingElement::one(v);
    for (int k = 0; k < e; ++k) r = r * ring_x(v);
    for (int k = 0; k < d; ++k) r = r * ring_y(v);
    return r;
}

}  // namespace

TEST_CASE("products reduce to the monomial frame") {
    for (Variant v : {Variant::T2, Variant::T4}) {
        for (int e = 0; e <= 4; ++e)
            for (int d = 0; d <= 4; ++d) {
                INFO(variant_name(v), " x^", e, " y^", d);
                CHECK(pow_xy(v, e, d) == reduce_oracle(v, std::min(e, 4), std::min(d, 4)));
            }
    }
    CHECK(ring_x(Variant::T2) * ring_y(Variant::T2) ==
          ring_mono(Variant::T2, 0, B_X2) + ring_mono(Variant::T2, 0, B_Y2));
    CHECK((ring_x(Variant::T4) * ring_z(Variant::T4)).is_zero());
    // x * x^2 * x = 0 in both variants (degree 4)
    for (Variant v : {Variant::T2, Variant::T4})
        CHECK((ring_x(v) * ring_mono(v, 0, B_X2) * ring_x(v)).is_zero());
}

TEST_CASE("ring axioms on twisted basis monomials") {
    for (Variant v : {Variant::T2, Variant::T4}) {
        std::vector<RingElement> monos;
        for (int s = -2; s <= 2; ++s)
            for (int b = 0; b < 6; ++b) monos.push_back(ring_mono(v, s, b));
        for (const auto& u : monos)
            for (const auto& w : monos) CHECK(u * w == w * u);
        // associativity on all basis-monomial triples with |s| <= 2
        for (const auto& u : monos)
            for (const auto& w : monos)
                for (const auto& q : monos) CHECK((u * w) * q == u * (w * q));
        // s is a central unit
        CHECK(ring_s(v, 1) * ring_s(v, -1) == RingElement::one(v));
    }
}

TEST_CASE("graded pieces have dimensions 1,2,2,1") {
    for (int d = -9; d <= 9; ++d) {
        const size_t dim = piece_monomials(d).size();
        const int r = ((d % 4) + 4) % 4;
        CHECK(dim == ((r == 0 || r == 3) ? 1u : 2u));
        CHECK(basis(d, Variant::T2).size() == dim);
    }
    CHECK(basis(1, Variant::T2)[0] == ring_x(Variant::T2));
    CHECK(basis(1, Variant::T2)[1] == ring_y(Variant::T2));
    CHECK(basis(4, Variant::T2)[0] == ring_s(Variant::T2, 1));
    CHECK(basis(-1, Variant::T2)[0] == ring_mono(Variant::T2, -1, B_X2Y));
}

TEST_CASE("ring product agrees with the chain-level product") {
    for (int t : {2, 4}) {
        const Variant var = variant_for_t(t);
        const auto P = build_resolution(GroupConfig{t, Field::GF2});
        const PeriodicMap chain[6] = {
            PeriodicMap::identity(P),
            standard_map(StdMap::X, P),
            standard_map(StdMap::Y, P),
            standard_map(StdMap::X, P) * standard_map(StdMap::X, P),
            standard_map(StdMap::Y, P) * standard_map(StdMap::Y, P),
            standard_map(StdMap::X, P) * standard_map(StdMap::X, P) * standard_map(StdMap::Y, P)};
        for (int i = -1; i <= 1; ++i)
            for (int a = 0; a < 6; ++a)
                for (int j = -1; j <= 1; ++j)
                    for (int b = 0; b < 6; ++b) {
                        const RingElement u = ring_mono(var, i, a), w = ring_mono(var, j, b);
                        const PeriodicMap fu = chain[a].s_compose(i), fw = chain[b].s_compose(j);
                        INFO(variant_name(var), ": ", u.str(), " * ", w.str());
                        CHECK(u * w == class_map(fu * fw));
                    }
    }
}

TEST_CASE("z-frame round trip (t >= 4)") {
    const Variant v = Variant::T4;
    CHECK(to_z_form(ring_y(v)).str() == "x + z");
    CHECK(from_z_form(v, to_z_form(ring_mono(v, 0, B_X2Y))).str() == "x^2*y");
    const RingElement z3 = ring_z(v) * ring_z(v) * ring_z(v);
    CHECK(z3 == ring_mono(v, 0, B_X2Y));  // z^3 = x^3
    for (int s = -2; s <= 2; ++s)
        for (int b = 0; b < 6; ++b) {
            const RingElement u = ring_mono(v, s, b);
            CHECK(from_z_form(v, to_z_form(u)) == u);
        }
    CHECK_THROWS(to_z_form(ring_x(Variant::T2)));
}

TEST_CASE("formatting and parsing round trip") {
    const Variant v = Variant::T2;
    const RingElement e = ring_mono(v, -1, B_X2Y) + ring_x(v);
    CHECK(e.str() == "s^-1*x^2*y + x");
    CHECK(parse_ring_element(v, e.str()) == e);
    CHECK(parse_ring_element(v, "x^3").is_zero());  // reduces in the t=2 ring
    CHECK(parse_ring_element(Variant::T4, "x^3") == ring_mono(Variant::T4, 0, B_X2Y));
    CHECK(parse_ring_element(v, "0").is_zero());
    CHECK(parse_ring_element(v, "y^2 + x*y") == xy_alias(v) + ring_mono(v, 0, B_Y2));
    // GF4 coefficients
    const RingElement a_x = parse_ring_element(v, "a*x");
    CHECK(a_x == ring_x(v) * Gf::alpha());
    CHECK(parse_ring_element(v, a_x.str()) == a_x);
    CHECK(parse_ring_element(v, "(a+1)*s^2*y").str() == "(a+1)*s^2*y");
}

TEST_CASE("parser rejects malformed input") {
    const Variant v = Variant::T2;
    CHECK_THROWS(parse_ring_element(v, ""));
    CHECK_THROWS(parse_ring_element(v, "x + "));
    CHECK_THROWS(parse_ring_element(v, "q"));
    CHECK_THROWS(parse_ring_element(v, "x^"));
    CHECK_THROWS(parse_ring_element(v, "s*x**y"));
}

TEST_CASE("piece coordinates round trip") {
    for (int d : {-3, 0, 1, 2, 5, 6}) {
        const auto monos = piece_monomials(d);
        RingElement e(Variant::T4);
        for (size_t k = 0; k < monos.size(); ++k) e.add_term(monos[k], Gf::one());
        const auto coords = piece_coords(e, d);
        CHECK(from_piece_coords(Variant::T4, d, coords) == e);
    }
    CHECK_THROWS(piece_coords(ring_x(Variant::T2), 2));
}
