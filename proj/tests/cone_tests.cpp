#include <doctest.h>

#include "hkmod/cone.hpp"
#include "hkmod/errors.hpp"
#include "oracles.hpp"

using namespace hkmod;

namespace {

LatticeVector hv(const RankTwoCone& cone, long x, long y) {
    return cone_vector(cone, Rational(x), Rational(y));
}

}  // namespace

TEST_CASE("cone construction and the positive component") {
    auto cone = make_cone(1, -2);
    CHECK(square(cone_f(cone)) == 0);
    CHECK(square(cone_g(cone)) == -2);
    CHECK(pairing(cone_f(cone), cone_g(cone)) == 1);
    CHECK_THROWS_AS(make_cone(0, 1), Error);
    CHECK_THROWS_AS(make_cone(-3, 1), Error);

    CHECK(in_positive_component(cone, hv(cone, 3, 1)));
    CHECK_FALSE(in_positive_component(cone, hv(cone, 1, 1)));   // q = 0
    CHECK_FALSE(in_positive_component(cone, hv(cone, -3, -1))); // opposite cone
    CHECK_FALSE(in_positive_component(cone, cone_f(cone)));     // boundary
}

TEST_CASE("slope discrepancy and its signs") {
    auto cone = make_cone(1, -2);
    auto f = cone_f(cone);
    auto g = cone_g(cone);

    CHECK(slope_discrepancy(1, f, 1, g).lambda == f - g);
    CHECK(slope_discrepancy(2, f + g, 3, g).lambda ==
          Rational(3) * f + Rational(3) * g - Rational(2) * g);
    CHECK(slope_discrepancy(1, Rational(2) * f, 2, Rational(4) * f).lambda.is_zero());

    auto omega = f + g;  // not positive: q = 2 - 2 = 0
    CHECK_THROWS_AS(slope_sign(cone, {g - f}, omega), Error);

    auto omega2 = Rational(3) * f + g;  // q = 4
    CHECK(slope_sign(cone, {g - f}, omega2) == 0);  // q(g-f, omega2) = 3 - 2 - 1 = 0
    CHECK(slope_sign(cone, {Rational(-1) * f}, omega2) == -1);
    CHECK(slope_sign(cone, {zero_vector(cone.lattice)}, omega2) == 0);
    CHECK(slope_sign(cone, {f}, omega2) == 1);

    CHECK(fiber_slope_sign(cone, {g}) == 1);
    CHECK(fiber_slope_sign(cone, {f}) == 0);
    CHECK(fiber_slope_sign(cone, {-g}) == -1);
}

TEST_CASE("suitability: pinned small cases") {
    auto cone = make_cone(1, -2);

    auto ok = is_a_suitable(2, hv(cone, 3, 1), cone);
    CHECK(ok.suitable);
    CHECK_FALSE(ok.witness.has_value());

    auto through = is_a_suitable(2, hv(cone, 2, 1), cone);
    CHECK_FALSE(through.suitable);
    CHECK(through.violated == "wall_through_h");
    REQUIRE(through.witness.has_value());
    CHECK(through.witness->lambda == cone_g(cone));
    CHECK(through.witness->q_value == -2);

    auto mismatch = is_a_suitable(2, hv(cone, 3, 2), cone);
    CHECK_FALSE(mismatch.suitable);
    CHECK(mismatch.violated == "sign_mismatch");
    REQUIRE(mismatch.witness.has_value());
    CHECK(mismatch.witness->lambda == cone_g(cone));

    auto scen = make_cone(14, 6);
    CHECK(is_a_suitable(160, hv(scen, 1121, 1), scen).suitable);
    CHECK(is_a_suitable(160, hv(scen, 1120, 1), scen).suitable);

    CHECK_THROWS_AS(is_a_suitable(0, hv(cone, 3, 1), cone), Error);
    CHECK_THROWS_AS(is_a_suitable(2, hv(cone, 1, 1), cone), Error);
    CHECK_THROWS_AS(
        is_a_suitable(2, make_vector(cone.lattice, {make_rational(1, 2), Rational(1)}), cone),
        Error);
}

TEST_CASE("suitability agrees with brute force on random cones") {
    oracle::Rng rng(520031);
    for (int trial = 0; trial < 120; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone = make_cone(c, G);
        auto [u, v] = oracle::random_positive_class(rng, c, G);
        const Rational a(rng.range(1, 50));
        auto h = hv(cone, u, v);

        auto report = is_a_suitable(a, h, cone);
        auto brute = oracle::brute_violation(c, G, a, u, v, square(h));
        CHECK(report.suitable == !brute.has_value());
        if (!report.suitable && brute.has_value()) {
            REQUIRE(report.witness.has_value());
            CHECK(report.witness->lambda.coords[0] == brute->x);
            CHECK(report.witness->lambda.coords[1] == brute->y);
            CHECK(report.witness->q_value == brute->q);
        }
    }
}

TEST_CASE("sufficient criterion implies suitability") {
    auto scen = make_cone(14, 6);
    CHECK(suitif_sufficient(160, hv(scen, 1121, 1), scen));  // 31394 > 31360
    CHECK(suitif_sufficient(160, hv(scen, 1120, 1), scen));  // 31366 > 31360
    auto cone = make_cone(1, -2);
    CHECK(suitif_sufficient(2, hv(cone, 3, 1), cone));  // 4 > 2
    CHECK_FALSE(suitif_sufficient(2, hv(cone, 2, 1), cone));

    oracle::Rng rng(77401);
    for (int trial = 0; trial < 200; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone_r = make_cone(c, G);
        auto [u, v] = oracle::random_positive_class(rng, c, G);
        const Rational a(rng.range(1, 50));
        auto h = hv(cone_r, u, v);
        if (suitif_sufficient(a, h, cone_r)) CHECK(is_a_suitable(a, h, cone_r).suitable);
    }
}

TEST_CASE("friedman_N is minimal and lands in the suitable cone") {
    auto scen = make_cone(14, 6);
    CHECK(friedman_N(160, hv(scen, 0, 1), scen) == 1121);

    auto cone = make_cone(1, 2);
    CHECK(friedman_N(2, hv(cone, 0, 1), cone) == 2);
    CHECK_THROWS_AS(friedman_N(0, hv(cone, 0, 1), cone), Error);
    CHECK_THROWS_AS(friedman_N(-1, hv(cone, 0, 1), cone), Error);

    oracle::Rng rng(660913);
    for (int trial = 0; trial < 150; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone_r = make_cone(c, G);
        auto [u, v] = oracle::random_positive_class(rng, c, G);
        const Rational a(rng.range(1, 50));
        auto h0 = hv(cone_r, u, v);
        const Integer n = friedman_N(a, h0, cone_r);
        CHECK(Rational(2 * n) > a * pairing(h0, cone_f(cone_r)));
        CHECK(Rational(2 * (n - 1)) <= a * pairing(h0, cone_f(cone_r)));
        auto shifted = h0 + Rational(n) * cone_f(cone_r);
        CHECK(is_a_suitable(a, shifted, cone_r).suitable);
    }
}

TEST_CASE("orthogonal-wall bound") {
    auto scen = make_cone(14, 6);
    CHECK(stimakota_bound(hv(scen, 1121, 1), scen) == make_rational(-31394, 196));

    auto cone = make_cone(1, -2);
    CHECK(stimakota_bound(hv(cone, 3, 1), cone) == -4);
    CHECK_THROWS_AS(stimakota_bound(cone_f(cone), cone), Error);

    oracle::Rng rng(88123);
    for (int trial = 0; trial < 60; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone_r = make_cone(c, G);
        auto [u, v] = oracle::random_positive_class(rng, c, G);
        auto h = hv(cone_r, u, v);
        const Rational bound = stimakota_bound(h, cone_r);
        for (long x = -25; x <= 25; ++x)
            for (long y = -25; y <= 25; ++y) {
                if (x == 0 && y == 0) continue;
                const Rational qlh = oracle::cone_pair(c, G, x, y, u, v);
                const Rational qlf = oracle::cone_pair(c, G, x, y, 1, 0);
                if (qlh == 0 && qlf != 0)
                    CHECK(oracle::cone_square(c, G, x, y) <= bound);
            }
    }
}

TEST_CASE("segment wall crossings: pinned small cases") {
    auto cone = make_cone(1, -2);

    CHECK(walls_on_segment(2, hv(cone, 3, 1), hv(cone, 10, 1), cone).empty());

    auto crossing = walls_on_segment(2, hv(cone, 3, 1), hv(cone, 3, 2), cone);
    REQUIRE(crossing.size() == 1);
    CHECK(crossing[0].t == make_rational(1, 2));
    CHECK(crossing[0].wall.lambda == cone_g(cone));
    CHECK(crossing[0].wall.q_value == -2);

    // Degenerate segment: walls through h0 count (t = 1), others do not.
    auto at_h = walls_on_segment(2, hv(cone, 2, 1), hv(cone, 2, 1), cone);
    REQUIRE(at_h.size() == 1);
    CHECK(at_h[0].t == 1);
    CHECK(at_h[0].wall.lambda == cone_g(cone));
    CHECK(walls_on_segment(2, hv(cone, 3, 1), hv(cone, 3, 1), cone).empty());

    // Wall exactly at the t = 1 endpoint is reported, at t = 0 is not.
    auto endpoint = walls_on_segment(2, hv(cone, 2, 1), hv(cone, 5, 1), cone);
    REQUIRE(endpoint.size() == 1);
    CHECK(endpoint[0].t == 1);
    CHECK(walls_on_segment(2, hv(cone, 5, 1), hv(cone, 2, 1), cone).empty());

    CHECK_THROWS_AS(walls_on_segment(2, hv(cone, 1, 1), hv(cone, 3, 1), cone), Error);
}

TEST_CASE("segment wall crossings agree with brute force") {
    oracle::Rng rng(910328);
    for (int trial = 0; trial < 120; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone_r = make_cone(c, G);
        auto [u0, v0] = oracle::random_positive_class(rng, c, G);
        auto [u1, v1] = oracle::random_positive_class(rng, c, G);
        const Rational a(rng.range(1, 40));

        auto impl = walls_on_segment(a, hv(cone_r, u0, v0), hv(cone_r, u1, v1), cone_r);
        auto brute = oracle::brute_segment_walls(c, G, a, u0, v0, u1, v1);
        REQUIRE(impl.size() == brute.size());
        for (std::size_t k = 0; k < impl.size(); ++k) {
            CHECK(impl[k].t == brute[k].t);
            CHECK(impl[k].wall.lambda.coords[0] == brute[k].x);
            CHECK(impl[k].wall.lambda.coords[1] == brute[k].y);
            CHECK(impl[k].wall.q_value == brute[k].q);
        }
    }
}

TEST_CASE("wall lists shrink as a decreases and stay canonical") {
    oracle::Rng rng(152099);
    for (int trial = 0; trial < 60; ++trial) {
        auto [c, G] = oracle::random_cone(rng);
        auto cone_r = make_cone(c, G);
        auto [u0, v0] = oracle::random_positive_class(rng, c, G);
        auto [u1, v1] = oracle::random_positive_class(rng, c, G);
        const long a = rng.range(2, 40);

        auto big = walls_on_segment(a, hv(cone_r, u0, v0), hv(cone_r, u1, v1), cone_r);
        auto small = walls_on_segment(a - 1, hv(cone_r, u0, v0), hv(cone_r, u1, v1), cone_r);
        CHECK(small.size() <= big.size());
        for (const auto& sw : big) {
            CHECK(sw.wall.lambda.coords[1] >= 1);
            CHECK(is_primitive(sw.wall.lambda));
            CHECK(-Rational(a) <= sw.wall.q_value);
            CHECK(sw.wall.q_value < 0);
            CHECK(0 < sw.t);
            CHECK(sw.t <= 1);
        }
    }
}

TEST_CASE("cone vector display puts the g part first") {
    auto cone = make_cone(14, 6);
    CHECK(format_cone_vector(hv(cone, 1121, 1)) == "g+1121f");
    CHECK(format_cone_vector(hv(cone, 0, 1)) == "g");
    CHECK(format_cone_vector(hv(cone, 3, 2)) == "2g+3f");
    CHECK(format_cone_vector(hv(cone, -2, 1)) == "g-2f");
    CHECK(format_cone_vector(hv(cone, 1, 0)) == "f");
    CHECK(format_cone_vector(hv(cone, 0, 0)) == "0");
}
