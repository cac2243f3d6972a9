#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtate/gf.hpp"
#include "qtate/linalg.hpp"

using namespace qtate;

TEST_CASE("GF(4) field axioms") {
    const auto elems = field_elements(Field::GF4);
    const Gf alpha = Gf::alpha();
    CHECK(alpha * alpha + alpha + Gf::one() == Gf::zero());
    for (Gf x : elems) {
        CHECK(x + x == Gf::zero());
        CHECK(x * Gf::one() == x);
        if (!x.is_zero()) CHECK(x * x.inv() == Gf::one());
        for (Gf y : elems) {
            CHECK(x * y == y * x);
            for (Gf z : elems) {
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
}

TEST_CASE("packed row operations match scalar arithmetic") {
    PackedMatrix M(2, 100);
    for (size_t c = 0; c < 100; ++c) {
        M.set(0, c, Gf(static_cast<uint8_t>((c * 7 + 1) % 4)));
        M.set(1, c, Gf(static_cast<uint8_t>((c * 5 + 2) % 4)));
    }
    std::vector<Gf> expect(100);
    const Gf lam = Gf(3);
    for (size_t c = 0; c < 100; ++c) expect[c] = M.get(0, c) + lam * M.get(1, c);
    M.add_scaled_row(0, 1, lam);
    for (size_t c = 0; c < 100; ++c) CHECK(M.get(0, c) == expect[c]);
}

TEST_CASE("solve: unique, underdetermined, inconsistent") {
    {
        LinearSystem sys(2);
        sys.add_equation({{0, Gf::one()}, {1, Gf::one()}}, Gf::one());
        sys.add_equation({{1, Gf::one()}}, Gf::one());
        auto r = sys.solve();
        REQUIRE(r.feasible);
        CHECK(r.solution[0] == Gf::zero());
        CHECK(r.solution[1] == Gf::one());
    }
    {
        LinearSystem sys(3);
        sys.add_equation({{0, Gf::one()}, {2, Gf::alpha()}}, Gf::one());
        auto r = sys.solve(true);
        REQUIRE(r.feasible);
        CHECK(r.kernel.size() == 2);
        // every kernel vector solves the homogeneous system
        for (const auto& v : r.kernel) CHECK(v[0] + Gf::alpha() * v[2] == Gf::zero());
    }
    {
        LinearSystem sys(1);
        sys.add_equation({{0, Gf::one()}}, Gf::zero());
        sys.add_equation({{0, Gf::one()}}, Gf::one());
        auto r = sys.solve(false, true);
        REQUIRE(!r.feasible);
        REQUIRE(r.certificate.size() == 2);
        // certificate is a left null vector with nonzero rhs pairing
        CHECK(r.certificate[0] + r.certificate[1] == Gf::zero());
        CHECK(!(r.certificate[0].is_zero() && r.certificate[1].is_zero()));
    }
}

TEST_CASE("span rank and membership") {
    Span sp(3);
    CHECK(sp.add({Gf(1), Gf(2), Gf(0)}));
    CHECK(sp.add({Gf(0), Gf(1), Gf(1)}));
    CHECK(!sp.add({Gf(1), Gf(3), Gf(1)}));  // sum of the first two
    CHECK(sp.rank() == 2);
    CHECK(sp.contains({Gf(1), Gf(0), Gf(2)}));  // row1 + a*row2
    CHECK(!sp.contains({Gf(0), Gf(0), Gf(1)}));
}
