#include <doctest.h>

#include <random>

#include "latfact/errors.hpp"
#include "latfact/geometry.hpp"

#include "support/fixtures.hpp"
#include "support/naive_oracle.hpp"

using namespace latfact;
using fixtures::iv;

namespace {
bool slope_less(const IntVec& a, const IntVec& b)
{
    return latfact::slope_less(slope_of(a), slope_of(b));
}
} // namespace

TEST_SUITE("geometry")
{

TEST_CASE("det2 is the plane determinant")
{
    CHECK(det2(iv({1, 0}), iv({0, 1})) == 1);
    CHECK(det2(iv({0, 1}), iv({1, 0})) == -1);
    CHECK(det2(iv({2, 3}), iv({4, 6})) == 0);
    CHECK(det2(iv({3, 1}), iv({1, 3})) == 8);
    CHECK(det2(iv({5, 2}), iv({7, 3})) == 1);
}

TEST_CASE("slope comparison orders by y/x")
{
    IntVec flat = iv({2, 1});   // slope 1/2
    IntVec diag = iv({1, 1});
    IntVec steep = iv({1, 2});
    CHECK(slope_less(flat, diag));
    CHECK(slope_less(diag, steep));
    CHECK(slope_less(flat, steep));
    CHECK_FALSE(slope_less(steep, flat));
    CHECK_FALSE(slope_less(iv({1, 2}), iv({2, 4})));   // equal slopes
    CHECK_FALSE(slope_less(iv({2, 4}), iv({1, 2})));
    CHECK(slope_string(slope_of(iv({2, 1}))) == "1/2");
    CHECK(slope_string(slope_of(iv({3, 6}))) == "2/1");
}

TEST_CASE("cramer_decompose returns the determinant coefficients")
{
    IntVec x = iv({3, 1}), a = iv({1, 1}), y = iv({1, 3});
    CramerCoefficients c = cramer_decompose(x, a, y);
    CHECK(c.c_x == 2);
    CHECK(c.c_y == 2);
    CHECK(c.c_a == 8);
    // identity: c_x * x + c_y * y == c_a * a
    CHECK(c.c_x * x.c[0] + c.c_y * y.c[0] == c.c_a * a.c[0]);
    CHECK(c.c_x * x.c[1] + c.c_y * y.c[1] == c.c_a * a.c[1]);
}

TEST_CASE("cramer_decompose identity holds on random slope-ordered triples")
{
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> d(1, 50);
    int done = 0;
    while (done < 200) {
        IntVec x = iv({d(rng), d(rng)});
        IntVec a = iv({d(rng), d(rng)});
        IntVec y = iv({d(rng), d(rng)});
        if (!slope_less(x, a) || !slope_less(a, y))
            continue;
        CramerCoefficients c = cramer_decompose(x, a, y);
        REQUIRE(c.c_x > 0);
        REQUIRE(c.c_y > 0);
        REQUIRE(c.c_a > 0);
        REQUIRE(c.c_x * x.c[0] + c.c_y * y.c[0] == c.c_a * a.c[0]);
        REQUIRE(c.c_x * x.c[1] + c.c_y * y.c[1] == c.c_a * a.c[1]);
        ++done;
    }
}

TEST_CASE("cramer_decompose rejects unordered triples")
{
    CHECK_THROWS_AS(cramer_decompose(iv({1, 3}), iv({1, 1}), iv({3, 1})), ContractError);
    CHECK_THROWS_AS(cramer_decompose(iv({1, 1}), iv({2, 2}), iv({1, 3})), ContractError);
}

TEST_CASE("projection_weight is the absolute determinant against the direction")
{
    CHECK(projection_weight(iv({1, 1}), iv({2, 1})) == 1);
    CHECK(projection_weight(iv({3, 3}), iv({1, 1})) == 0);
    CHECK(projection_weight(iv({2, 5}), iv({1, 1})) == 3);
    CHECK(projection_weight(iv({5, 2}), iv({1, 1})) == 3);
}

TEST_CASE("hilbert_basis_2d lists the basis in slope order")
{
    std::vector<IntVec> hb = hilbert_basis_2d(iv({1, 0}), iv({1, 3}));
    REQUIRE(hb.size() == 4);
    CHECK(hb[0].c == std::vector<Int>{1, 0});
    CHECK(hb[1].c == std::vector<Int>{1, 1});
    CHECK(hb[2].c == std::vector<Int>{1, 2});
    CHECK(hb[3].c == std::vector<Int>{1, 3});

    hb = hilbert_basis_2d(iv({2, 1}), iv({1, 2}));
    REQUIRE(hb.size() == 3);
    CHECK(hb[0].c == std::vector<Int>{2, 1});
    CHECK(hb[1].c == std::vector<Int>{1, 1});
    CHECK(hb[2].c == std::vector<Int>{1, 2});

    hb = hilbert_basis_2d(iv({1, 0}), iv({0, 1}));
    REQUIRE(hb.size() == 2);
}

TEST_CASE("hilbert basis matches the exhaustive oracle")
{
    auto check_rays = [](long long r1x, long long r1y, long long r2x, long long r2y) {
        std::vector<IntVec> hb = hilbert_basis_2d(iv({Int(r1x), Int(r1y)}), iv({Int(r2x), Int(r2y)}));
        std::vector<oracle::Vec> got;
        for (const IntVec& v : hb)
            got.push_back({v.c[0].convert_to<long long>(), v.c[1].convert_to<long long>()});
        std::vector<oracle::Vec> want = oracle::naive_hilbert({r1x, r1y}, {r2x, r2y}, 40);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        REQUIRE(got == want);
        // generation half: every cone point in a small box is reachable
        for (long long px = 0; px <= 12; ++px)
            for (long long py = 0; py <= 12; ++py) {
                if (px == 0 && py == 0)
                    continue;
                if (oracle::in_cone({r1x, r1y}, {r2x, r2y}, {px, py}))
                    REQUIRE(oracle::naive_generates(got, {px, py}));
            }
    };
    check_rays(1, 0, 1, 3);
    check_rays(2, 1, 1, 2);
    check_rays(3, 1, 1, 4);
    check_rays(5, 2, 2, 5);
    check_rays(1, 0, 0, 1);
}

TEST_CASE("hilbert_basis_2d rejects degenerate ray pairs")
{
    CHECK_THROWS_AS(hilbert_basis_2d(iv({1, 1}), iv({2, 2})), ContractError);
    CHECK_THROWS_AS(hilbert_basis_2d(iv({0, 0}), iv({1, 2})), ContractError);
}

TEST_CASE("integer parsing accepts signs and rejects junk")
{
    CHECK(parse_int("42") == 42);
    CHECK(parse_int("-7") == -7);
    CHECK(parse_int("+13") == 13);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), ContractError);
    CHECK_THROWS_AS(parse_int("12a"), ContractError);
    CHECK_THROWS_AS(parse_int("+"), ContractError);
}

TEST_CASE("rational parsing handles plain integers and fractions")
{
    CHECK(parse_rat("10") == Rat(10));
    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("-5/10") == Rat(-1, 2));
    CHECK(rat_string(Rat(3, 2)) == "3/2");
    CHECK(rat_string(Rat(4)) == "4/1");
    CHECK_THROWS_AS(parse_rat("1/0"), ContractError);
    CHECK_THROWS_AS(parse_rat("x"), ContractError);
}

TEST_CASE("json integers widen to strings beyond 64 bits")
{
    CHECK(int_json(Int(7)).is_number_integer());
    Int big = Int(1) << 80;
    Json j = int_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(int_from_json(int_json(Int(-3))) == -3);
}

}
