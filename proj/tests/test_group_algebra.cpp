#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtate/group_algebra.hpp"

using namespace qtate;

namespace {
const GroupConfig q8{2, Field::GF2};
const GroupConfig q16{4, Field::GF2};
}

TEST_CASE("group normal forms and defining relations") {
    // g * g = g^2
    CHECK(group_mul(q8, {1, 0}, {1, 0}) == GroupElement{2, 0});
    // (gh)(gh) = h^2 = g^t
    CHECK(group_mul(q8, {1, 1}, {1, 1}) == GroupElement{2, 0});
    CHECK(group_mul(q16, {1, 1}, {1, 1}) == GroupElement{4, 0});
    // h g = g^{-1} h
    CHECK(group_mul(q8, {0, 1}, {1, 0}) == GroupElement{3, 1});
    CHECK(group_mul(q16, {0, 1}, {1, 0}) == GroupElement{7, 1});
    // g^{2t} = 1, h^4 = 1
    GroupElement e{0, 0};
    for (int k = 0; k < 2 * q8.t; ++k) e = group_mul(q8, e, {1, 0});
    CHECK(e == GroupElement{0, 0});
    e = {0, 0};
    for (int k = 0; k < 4; ++k) e = group_mul(q8, e, {0, 1});
    CHECK(e == GroupElement{0, 0});
}

TEST_CASE("group associativity and inverses (full table)") {
    for (const auto& cfg : {q8, q16}) {
        const int n = cfg.order();
        AlgebraElement probe(cfg);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                const auto eu = probe.element_at(u), ev = probe.element_at(v);
                for (int w = 0; w < n; ++w) {
                    const auto ew = probe.element_at(w);
                    CHECK(group_mul(cfg, group_mul(cfg, eu, ev), ew) ==
                          group_mul(cfg, eu, group_mul(cfg, ev, ew)));
                }
                CHECK(group_mul(cfg, eu, group_inv(cfg, eu)) == GroupElement{0, 0});
            }
    }
}

TEST_CASE("algebra products and unit") {
    const AlgebraElement a = special("a", q8), b = special("b", q8), c = special("c", q8),
                         one = AlgebraElement::one(q8);
    CHECK(one * a == a);
    CHECK(a * one == a);
    CHECK(b * a == a + b + c);
    CHECK(a.pow(2 * q8.t).is_zero());
    CHECK((a + a).is_zero());
}

TEST_CASE("augmentation is a ring homomorphism") {
    const AlgebraElement a = special("a", q8), N = special("N", q8);
    CHECK(a.augmentation() == Gf::zero());
    CHECK(N.augmentation() == Gf::zero());
    const AlgebraElement p = gen_g(q8, 2) + gen_g(q8, 0, 1) + AlgebraElement::one(q8);
    CHECK(p.augmentation() == Gf::one());
    const AlgebraElement q = gen_g(q8, 3) + gen_g(q8, 1, 1);
    CHECK((p * q).augmentation() == p.augmentation() * q.augmentation());
    // N spans a two-sided ideal: Nv = eps(v) N = vN, for every group element
    AlgebraElement probe(q8);
    for (size_t k = 0; k < probe.size(); ++k) {
        const AlgebraElement v = AlgebraElement::from_group(q8, probe.element_at(k));
        CHECK(N * v == N);
        CHECK(v * N == N);
    }
    CHECK(N * p == N * p.augmentation());
    CHECK(p * N == N * p.augmentation());
    CHECK((N * q).is_zero());
}

TEST_CASE("algebra associativity on sampled elements") {
    const AlgebraElement a = special("a", q8), b = special("b", q8), c = special("c", q8),
                         N = special("N", q8);
    const std::vector<AlgebraElement> pool = {a, b, c, N, a * b + c, gen_g(q8, 3, 1) + a};
    for (const auto& p : pool)
        for (const auto& q : pool)
            for (const auto& r : pool) CHECK((p * q) * r == p * (q * r));
}

TEST_CASE("special element u and its domain") {
    CHECK_THROWS(special("u", q8));
    const AlgebraElement u = special("u", q16);
    const AlgebraElement c = special("c", q16), b = special("b", q16), a = special("a", q16);
    CHECK(u == c * a.pow(6) + b * a.pow(5));
}

TEST_CASE("identity suite passes for supported t") {
    for (int t : {2, 4, 8, 16}) {
        const GroupConfig cfg{t, Field::GF2};
        for (const auto& r : verify_identities(cfg)) {
            INFO("t=", t, " identity: ", r.name);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("identity suite over GF4 coefficients") {
    for (const auto& r : verify_identities(GroupConfig{2, Field::GF4})) CHECK(r.pass);
}

TEST_CASE("element formatting") {
    CHECK(special("a", q8).str() == "g + 1");
    CHECK((gen_g(q8, 3, 1) + gen_g(q8, 2)).str() == "g^3*h + g^2");
    CHECK(AlgebraElement::zero(q8).str() == "0");
    CHECK(AlgebraElement::one(q8).str() == "1");
}

TEST_CASE("config validation") {
    CHECK_THROWS(GroupConfig{3, Field::GF2}.validate());
    CHECK_THROWS(GroupConfig{1, Field::GF2}.validate());
    CHECK_THROWS(GroupConfig{32, Field::GF2}.validate(16));
    CHECK_NOTHROW(GroupConfig{16, Field::GF2}.validate(16));
}
