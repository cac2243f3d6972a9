#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtate/secondary.hpp"

using namespace qtate;

namespace {
const GroupConfig cfg2{2, Field::GF2};
const GroupConfig cfg4{4, Field::GF2};
}

TEST_CASE("f1 is the stated cycle selection") {
    const SecondaryTables T(cfg2);
    const auto& P = T.complex();
    const auto x = standard_map(StdMap::X, P), y = standard_map(StdMap::Y, P);
    CHECK(T.f1_mono(Mono{0, B_X}) == x);
    CHECK(T.f1_mono(Mono{-1, B_X2Y}) == (x * x * y).s_compose(-1));
    for (int b = 0; b < 6; ++b) {
        CHECK(dga_differential(T.f1_mono(Mono{0, b})).is_zero());
        CHECK(class_map(T.f1_mono(Mono{0, b})) == ring_mono(T.variant(), 0, b));
        CHECK(class_map(T.f1_mono(Mono{-2, b})) == ring_mono(T.variant(), -2, b));
    }
}

TEST_CASE("f2 table entries match the stated expressions") {
    const SecondaryTables T2(cfg2);
    {
        const auto& P = T2.complex();
        const auto r = standard_map(StdMap::R, P), p = standard_map(StdMap::P, P);
        CHECK(T2.f2(B_X, B_Y) == r);
        CHECK(T2.f2(B_Y, B_X) == p + r);
        for (int c = 0; c < 6; ++c) {
            CHECK(T2.f2(B_ONE, c).is_zero());
            CHECK(T2.f2(c, B_ONE).is_zero());
        }
    }
    const SecondaryTables T4(cfg4);
    {
        const auto& P = T4.complex();
        const auto v = standard_map(StdMap::V, P), p = standard_map(StdMap::P, P);
        CHECK(T4.f2(B_X, B_Y) == v);
        CHECK(T4.f2(B_Y, B_X) == p + v);
    }
}

TEST_CASE("f2 satisfies both defining identities on all 36 pairs") {
    for (const auto* cfg : {&cfg2, &cfg4}) {
        const SecondaryTables T(*cfg);
        for (const auto& st : verify_f2(T)) {
            INFO("t=", cfg->t, " pair (", kBName[st.b], ", ", kBName[st.c], ")");
            CHECK(st.d_identity);
            CHECK(st.class_vanishes);
        }
    }
}

TEST_CASE("class-of-h values") {
    /* The class of h(b,c) = s f2(b,c) s^{-1} + f2(b,c) is independent of the
     * admissible choice of f2, so these are invariants of the pair (b,c).
     * Over t=2 the values come out x / x^2 at the r-dependent cells (the
     * conjugation defect of x^2+xy+y^2 has class x, not x+y). */
    const SecondaryTables T2(cfg2), T4(cfg4);
    const Variant v2 = T2.variant(), v4 = T4.variant();
    CHECK(T2.h_class(B_X, B_Y) == ring_x(v2));
    CHECK(T4.h_class(B_X, B_Y) == ring_x(v4));
    for (int c = 0; c < 6; ++c) {
        CHECK(T2.h_class(B_ONE, c).is_zero());
        CHECK(T4.h_class(B_ONE, c).is_zero());
    }
    CHECK(T2.h_class(B_Y, B_X) == ring_x(v2));
    CHECK(T2.h_class(B_Y2, B_X) == ring_mono(v2, 0, B_X2));
    CHECK(T2.h_class(B_Y, B_Y2) == ring_mono(v2, 0, B_Y2));
    CHECK(T4.h_class(B_Y2, B_X) == ring_mono(v4, 0, B_X2));
}

TEST_CASE("the three non-zero m values on the monomial cube") {
    const SecondaryTables T2(cfg2), T4(cfg4);
    CHECK(T2.m_base(B_X, B_Y, B_X) == xy_alias(Variant::T2));
    CHECK(T2.m_base(B_X, B_Y, B_X2) == ring_mono(Variant::T2, 0, B_X2Y));
    CHECK(T2.m_base(B_X2, B_Y, B_X) == ring_mono(Variant::T2, 0, B_X2Y));
    CHECK(T4.m_base(B_X, B_Y, B_X) == ring_mono(Variant::T4, 0, B_X2));
    CHECK(T4.m_base(B_X, B_Y, B_X2) == ring_mono(Variant::T4, 0, B_X2Y));
    CHECK(T4.m_base(B_X2, B_Y, B_X) == ring_mono(Variant::T4, 0, B_X2Y));
    // everything else on B^3 vanishes
    int nonzero = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                if (!T2.m_base(a, b, c).is_zero()) ++nonzero;
    CHECK(nonzero == 3);
}

TEST_CASE("m vanishes whenever a slot is the monomial 1") {
    for (const auto* cfg : {&cfg2, &cfg4}) {
        const SecondaryTables T(*cfg);
        for (int i = 0; i <= 1; ++i)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    CHECK(T.m_eval(MKind::M, Mono{0, B_ONE}, Mono{0, b}, Mono{0, c}).is_zero());
                    CHECK(T.m_eval(MKind::M, Mono{i, b}, Mono{0, B_ONE}, Mono{0, c}).is_zero());
                    CHECK(T.m_eval(MKind::M, Mono{i, b}, Mono{0, c}, Mono{0, B_ONE}).is_zero());
                }
    }
}

TEST_CASE("odd-s rule: m(as,b,c) = s(m(a,b,c) + a class_h(b,c))") {
    for (const auto* cfg : {&cfg2, &cfg4}) {
        const SecondaryTables T(*cfg);
        const Variant var = T.variant();
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    const RingElement rule =
                        (T.m_base(a, b, c) + ring_mono(var, 0, a) * T.h_class(b, c)).s_shift(1);
                    INFO("t=", cfg->t, " (", kBName[a], "s, ", kBName[b], ", ", kBName[c], ")");
                    CHECK(T.m_base(a + 6, b, c) == rule);
                }
    }
}

TEST_CASE("derived example: m(sx, y, x) over t=2") {
    const SecondaryTables T(cfg2);
    const Variant var = T.variant();
    // x . class_h(y,x) s + m(x,y,x) s = (x.x + x^2 + y^2) s = y^2 s
    CHECK(T.m_eval(MKind::M, Mono{1, B_X}, Mono{0, B_Y}, Mono{0, B_X}) ==
          ring_mono(var, 1, B_Y2));
}

TEST_CASE("the unshifted variant of the odd-s rule is inhomogeneous") {
    // s m(a,b,c) + a class_h(b,c) mixes degrees |abc|+3 and |abc|-1; the
    // implemented rule multiplies the second term by s as well
    const SecondaryTables T(cfg2);
    const Variant var = T.variant();
    const RingElement literal =
        T.m_base(B_X, B_Y, B_X).s_shift(1) + ring_x(var) * T.h_class(B_Y, B_X);
    CHECK(!literal.is_homogeneous());
}

TEST_CASE("periodicity in the even slot and the outer slots") {
    const SecondaryTables T(cfg4);
    for (int i : {-2, 0, 2})
        for (int j : {-1, 0, 2})
            for (int l : {-1, 1}) {
                const RingElement lhs =
                    T.m_eval(MKind::M, Mono{i, B_X}, Mono{j, B_Y}, Mono{l, B_X});
                const RingElement rhs =
                    T.m_eval(MKind::M, Mono{0, B_X}, Mono{0, B_Y}, Mono{0, B_X})
                        .s_shift(i + j + l);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("cocycle law on a small window for every kind") {
    for (const auto* cfg : {&cfg2, &cfg4}) {
        const SecondaryTables T(*cfg);
        std::vector<MKind> kinds = {MKind::M, MKind::MPrime, MKind::MDoublePrime};
        if (cfg->t >= 4) kinds.push_back(MKind::MTilde);
        for (MKind k : kinds) {
            const auto rep = verify_cocycle(T, k, 1);
            INFO("t=", cfg->t, " kind ", mkind_name(k));
            CHECK(rep.failures == 0);
        }
    }
    CHECK_THROWS(SecondaryTables(cfg2).m_eval(MKind::MTilde, Mono{0, B_X}, Mono{0, B_X}, Mono{0, B_X}));
}

TEST_CASE("m = m' + m'' pointwise") {
    const SecondaryTables T(cfg4);
    for (int s = -1; s <= 1; ++s)
        for (int a = 0; a < 6; ++a) {
            const Mono ma{s, a}, mb{0, B_Y}, mc{1, B_X};
            CHECK(T.m_eval(MKind::M, ma, mb, mc) ==
                  T.m_eval(MKind::MPrime, ma, mb, mc) + T.m_eval(MKind::MDoublePrime, ma, mb, mc));
        }
}

TEST_CASE("m~ vanishing patterns (t >= 4)") {
    const SecondaryTables T(cfg4);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j) {
                        CHECK(T.m_eval(MKind::MTilde, Mono{0, a}, Mono{i, b}, Mono{j, c}).is_zero());
                        if (kBDeg[a] >= 2 && kBDeg[b] >= 1 && kBDeg[c] >= 1)
                            CHECK(T.m_eval(MKind::MTilde, Mono{-1, a}, Mono{i, b}, Mono{j, c})
                                      .is_zero());
                    }
}

TEST_CASE("g cochain of the modified representative") {
    const SecondaryTables T(cfg4);
    const Variant var = T.variant();
    const RingElement sm1x2 = ring_mono(var, -1, B_X2);
    const RingElement x = ring_x(var), z = ring_z(var);
    // g(s^{-1}x^2, s^i x) = s^{i-1} z^2 and g(s^{-1}x^2, s^i z) = s^{i-1} x^2
    const RingElement z2 = ring_mono(var, 0, B_X2) + ring_mono(var, 0, B_Y2);
    CHECK(T.g_cochain(sm1x2, x.s_shift(2)) == z2.s_shift(1));
    CHECK(T.g_cochain(sm1x2, z.s_shift(2)) == ring_mono(var, 1, B_X2));
    CHECK(T.g_cochain(x, z).is_zero());
    CHECK(T.g_cochain(sm1x2, ring_mono(var, 0, B_Y2)).is_zero());
}

TEST_CASE("solver-completed entries do not influence the m table") {
    const SecondaryTables base(cfg2);
    const SecondaryTables varied(cfg2, 1);
    bool some_star_differs = false;
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
            if (base.f2_completed_by_solver(b, c) && base.f2(b, c) != varied.f2(b, c))
                some_star_differs = true;
    CHECK(some_star_differs);  // the variation really changed the completion
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) CHECK(base.m_base(a, b, c) == varied.m_base(a, b, c));
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) CHECK(base.h_class(b, c) == varied.h_class(b, c));
}

TEST_CASE("the t >= 4 tables do not depend on t") {
    const SecondaryTables T4(cfg4), T8(GroupConfig{8, Field::GF2});
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) CHECK(T4.m_base(a, b, c) == T8.m_base(a, b, c));
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) CHECK(T4.h_class(b, c) == T8.h_class(b, c));
}

TEST_CASE("gamma certificate: infeasible for m, inconclusive for m' (t=4)") {
    {
        const SecondaryTables T(cfg2);
        const auto cert = gamma_certificate(T);
        CHECK(cert.infeasible);
        CHECK(!cert.obstruction_triples.empty());
    }
    {
        const SecondaryTables T(cfg4);
        CHECK(gamma_certificate(T).infeasible);
        /* On the zero-s-exponent window m' coincides with m, so its
         * restricted system is the same contradiction: the class of m' is
         * non-trivial even though it acts trivially on every module. */
        CHECK(gamma_certificate(T, MKind::MPrime).infeasible);
        /* m'' vanishes on that window, so g = 0 solves the restriction and
         * the certificate is inconclusive. */
        const auto dbl = gamma_certificate(T, MKind::MDoublePrime);
        CHECK(!dbl.infeasible);
        CHECK(dbl.witness.empty());
    }
}
