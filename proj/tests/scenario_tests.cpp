#include <doctest.h>

#include <algorithm>

#include "hkmod/errors.hpp"
#include "hkmod/reports.hpp"
#include "hkmod/scenario.hpp"
#include "oracles.hpp"

using namespace hkmod;

TEST_CASE("parameter validation separates hard conditions from advisory flags") {
    auto all_good = validate_params(make_params(1, 2, 1, 7));
    CHECK(all_good.hard_ok());
    CHECK(all_good.all_ok());

    auto even_branch = validate_params(make_params(2, 2, 3, 5));
    CHECK(even_branch.hard_ok());
    CHECK(even_branch.all_ok());

    auto bad = validate_params(make_params(3, 2, 5, 7));
    CHECK_FALSE(bad.hard_ok());
    CHECK(bad.first_hard_failure() == "r1_divides_2a");

    auto tiny = validate_params(make_params(1, 1, 1, 3));
    CHECK(tiny.hard_ok());
    CHECK_FALSE(tiny.all_ok());
    bool saw_a_flag = false;
    for (const auto& check : tiny.advisory)
        if (check.name == "a_ge_2") {
            saw_a_flag = true;
            CHECK_FALSE(check.pass);
        }
    CHECK(saw_a_flag);

    CHECK_FALSE(validate_params(make_params(0, 2, 1, 7)).hard_ok());
    CHECK_FALSE(validate_params(make_params(2, 2, 2, 5)).hard_ok());   // r1 | m0+1 fails
    CHECK_FALSE(validate_params(make_params(2, 2, 3, 6)).hard_ok());   // gcd(r1,d0) = 2
}

TEST_CASE("scenario construction: odd-rank reference tuple") {
    auto s = build_scenario(make_params(1, 2, 1, 7));
    CHECK(s.params.b == 4);
    CHECK(s.i == 1);
    CHECK(format_mukai(s.v1) == "(1, D, 2)");
    CHECK(format_mukai(s.v2) == "(2, 2D, 0)");
    CHECK(mukai_square(s.v1) == -2);
    CHECK(mukai_square(s.v2) == 8);
    CHECK(mukai_pairing(s.v1, s.v2) == 0);
    CHECK(format_mock(s.w0) == "(4, 4μ(D)-2δ, 4/3·c2)");
    CHECK(format_hilb2(s.g) == "2μ(D)-δ");
    CHECK(format_hilb2(s.f) == "μ(C)");
    CHECK(s.lambda_cone.c == 14);
    CHECK(s.lambda_cone.G == 6);
    CHECK(gram_determinant(*s.lambda_cone.lattice) == -196);
}

TEST_CASE("scenario construction: even-rank branch") {
    auto s = build_scenario(make_params(2, 2, 3, 5));
    CHECK(s.i == 2);
    CHECK(format_hilb2(s.g) == "μ(D)-δ");
    CHECK(s.lambda_cone.c == 5);
    CHECK(s.lambda_cone.G == 4);
    CHECK(bbf_square(s.g) == 4);
    CHECK(divisibility(s.g) == 1);

    auto fat = build_scenario(make_params(1, 3, 1, 11));
    CHECK(format_mock(fat.w0) == "(6, 6μ(D)-3δ, 3·c2)");

    CHECK_THROWS_AS(build_scenario(make_params(3, 2, 5, 7)), Error);
    try {
        build_scenario(make_params(3, 2, 5, 7));
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::InvalidParams);
        CHECK(e.which() == "r1_divides_2a");
    }
}

TEST_CASE("square and divisibility of g by parity branch") {
    auto odd = g_square_and_divisibility(build_scenario(make_params(1, 2, 1, 7)));
    CHECK(odd.q == 6);
    CHECK(odd.div == 2);

    auto even = g_square_and_divisibility(build_scenario(make_params(2, 2, 3, 5)));
    CHECK(even.q == 4);
    CHECK(even.div == 1);

    oracle::for_each_hard_valid(5, 4, 15, 8, [](long r1, long a, long m0, long d0, long) {
        auto s = build_scenario(make_params(r1, a, m0, d0));
        auto gd = g_square_and_divisibility(s);
        CHECK(gd.q == bbf_square(s.g));
        CHECK(gd.div == divisibility(s.g));
    });
}

TEST_CASE("congruence table per residue of r1 mod 4") {
    auto one = congruence_detail(build_scenario(make_params(1, 2, 1, 7)));
    CHECK(one.r1_mod_4 == 1);
    CHECK(one.modulus == 8);
    CHECK(one.q == 6);
    CHECK(one.pass());

    auto two = congruence_detail(build_scenario(make_params(2, 2, 3, 5)));
    CHECK(two.r1_mod_4 == 2);
    CHECK(two.modulus == 4);
    CHECK(two.residue_target == 0);
    CHECK(two.pass());

    auto three = congruence_detail(build_scenario(make_params(3, 3, 5, 7)));
    CHECK(three.r1_mod_4 == 3);
    CHECK(three.modulus == 24);
    CHECK(three.residue_target == 22);
    CHECK(three.q == 22);
    CHECK(three.pass());

    auto four = congruence_detail(build_scenario(make_params(4, 2, 3, 5)));
    CHECK(four.r1_mod_4 == 0);
    CHECK(four.modulus == 8);
    CHECK(four.residue_target == 6);
    CHECK(four.pass());

    oracle::for_each_hard_valid(6, 6, 20, 10, [](long r1, long a, long m0, long d0, long) {
        CHECK(congruence_check(build_scenario(make_params(r1, a, m0, d0))));
    });
}

TEST_CASE("theorem scan enumerates exactly the advisory-clean tuples") {
    auto rows = theorem_scan({2, 3, 3, 10});
    CHECK(rows.size() == 60);

    auto find = [&](long r1, long a, long m0, long d0) {
        return std::find_if(rows.begin(), rows.end(), [&](const ScanRow& row) {
            return row.params.r1 == r1 && row.params.a == a && row.params.m0 == m0 &&
                   row.params.d0 == d0;
        });
    };
    auto hit = find(1, 2, 1, 7);
    REQUIRE(hit != rows.end());
    CHECK(hit->dim == 10);
    CHECK(hit->div == 2);
    CHECK(hit->q_g == 6);

    auto hit2 = find(1, 3, 1, 7);
    REQUIRE(hit2 != rows.end());
    CHECK(hit2->dim == 20);

    CHECK(find(1, 1, 1, 7) == rows.end());   // a >= 2 advisory
    CHECK(find(2, 2, 1, 5) == rows.end());   // 4 m0 > r1^2 advisory
    CHECK(find(2, 2, 3, 6) == rows.end());   // gcd(r1, d0) = 1 hard

    for (const auto& row : rows) {
        CHECK(row.dim == 2 * row.params.a * row.params.a + 2);
        CHECK(congruence_check(build_scenario(row.params)));
    }
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const ScanRow& p, const ScanRow& q) {
        return std::tie(p.params.r1, p.params.a, p.params.m0, p.params.d0) <
               std::tie(q.params.r1, q.params.a, q.params.m0, q.params.d0);
    }));

    CHECK(theorem_scan({1, 1, 1, 1}).empty());

    auto parallel = theorem_scan({2, 3, 3, 10}, 4);
    REQUIRE(parallel.size() == rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(parallel[k].params.r1 == rows[k].params.r1);
        CHECK(parallel[k].params.a == rows[k].params.a);
        CHECK(parallel[k].params.m0 == rows[k].params.m0);
        CHECK(parallel[k].params.d0 == rows[k].params.d0);
        CHECK(parallel[k].q_g == rows[k].q_g);
    }
}

TEST_CASE("negative-square ceiling and the d0 threshold") {
    CHECK(negative_square_ceiling(build_scenario(make_params(1, 2, 1, 7))) == -28);
    CHECK_THROWS_AS(negative_square_ceiling(build_scenario(make_params(2, 2, 1, 5))), Error);

    CHECK(d0_threshold(1, 2, 1) == 17);
    CHECK(d0_threshold(1, 3, 1) == 38);
    CHECK(d0_threshold(2, 2, 3) == 453);

    // Threshold is exactly the tipping point of the ceiling-vs-a(w0) race:
    // smallest d0 with 4 d0^2 / (i^2 + 8 m0 - 2 r1^2) > 10 a^4 r1^8.
    for (long r1 : {1L, 2L, 3L}) {
        for (long a : {2L, 3L, 5L}) {
            for (long m0 : {1L, 3L, 7L}) {
                if (4 * m0 <= r1 * r1) continue;
                const long i = r1 % 2 == 0 ? 2 : 1;
                const Integer denom = i * i + 8 * m0 - 2 * r1 * r1;
                Rational a_w0 = 10;
                for (int k = 0; k < 4; ++k) a_w0 *= a;
                for (int k = 0; k < 8; ++k) a_w0 *= r1;
                const Integer t = d0_threshold(r1, a, m0);
                CHECK(Rational(4 * t * t) / Rational(denom) > a_w0);
                CHECK(Rational(4 * (t - 1) * (t - 1)) / Rational(denom) <= a_w0);
            }
        }
    }

    // a(w0) = 10 a^4 r1^8 via the modular-constants route.
    oracle::for_each_hard_valid(3, 4, 8, 6, [](long r1, long a, long m0, long d0, long) {
        auto s = build_scenario(make_params(r1, a, m0, d0));
        const Integer r1z = r1, az = a;
        CHECK(modular_constants(s.w0).a ==
              Rational(10 * az * az * az * az * r1z * r1z * r1z * r1z * r1z * r1z * r1z * r1z));
    });
}

TEST_CASE("relative-Jacobian lattice and the decomposition-class linear system") {
    auto jac = make_jacobian_ns();
    CHECK(gram_determinant(*jac.lattice) == -1);
    CHECK(square(basis_vector(jac.lattice, 0)) == -2);
    CHECK(square(basis_vector(jac.lattice, 1)) == 0);
    CHECK(pairing(basis_vector(jac.lattice, 0), basis_vector(jac.lattice, 1)) == 1);

    auto s = build_scenario(make_params(1, 2, 1, 7));
    auto cls = decomposition_class(s);
    CHECK(cls.m == 2);
    CHECK(cls.n == 4);
    auto dim = linear_system_dim(cls);
    CHECK(dim.self_intersection == 8);
    CHECK(dim.dim == 5);
    CHECK(lagrangian_base_dim(s) == 5);

    auto fat = build_scenario(make_params(1, 3, 1, 11));
    auto fat_dim = linear_system_dim(decomposition_class(fat));
    CHECK(fat_dim.dim == 10);
    CHECK(lagrangian_base_dim(fat) == 10);

    CHECK_THROWS_AS(linear_system_dim({2, 1}), Error);
    try {
        linear_system_dim({2, 1});
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::NotBigNef);
    }

    CHECK(lagrangian_base_dim(2, 0, 1) == -3);  // degenerate b = 0 helper value

    oracle::for_each_hard_valid(4, 4, 10, 6, [](long r1, long a, long m0, long d0, long b) {
        auto sc = build_scenario(make_params(r1, a, m0, d0));
        auto ld = linear_system_dim(decomposition_class(sc));
        CHECK(ld.dim == 1 + a * b * r1 - a * a);
        CHECK(ld.dim == Rational(1) + Rational(ld.self_intersection) / 2);
        CHECK(ld.dim == lagrangian_base_dim(sc));
        CHECK(Integer(2) * lagrangian_base_dim(sc) == mukai_square(sc.v2) + 2);
    });
}

TEST_CASE("general member trichotomy") {
    CHECK(general_member_kind(2, 4) == GeneralMemberKind::IntegralSmooth);
    CHECK(general_member_kind(1, 5) == GeneralMemberKind::HorizontalIntegral);
    CHECK(general_member_kind(3, 5) == GeneralMemberKind::NoClaim);
    CHECK(general_member_kind(1, 1) == GeneralMemberKind::NoClaim);
    CHECK(general_member_kind(2, 3) == GeneralMemberKind::NoClaim);
    CHECK(general_member_kind(3, 6) == GeneralMemberKind::IntegralSmooth);
    CHECK(general_member_kind_name(GeneralMemberKind::IntegralSmooth) ==
          std::string("integral_smooth"));
}

TEST_CASE("reference-tuple report") {
    auto rep = fatighenti_report();
    CHECK(rep.scenario.params.r1 == 1);
    CHECK(rep.scenario.params.a == 3);
    CHECK(rep.scenario.params.d0 == 11);
    CHECK(format_mock(rep.w) == "(6, 6μ(D)-3δ, 3·c2)");
    CHECK(format_hilb2(rep.h) == "2μ(D)-δ");
    CHECK(rep.q_h == 6);
    CHECK(rep.div_h == 2);
    CHECK(rep.dims.simple);
    CHECK(rep.dims.ext1 == 20);
    REQUIRE(rep.dims.ext2.has_value());
    CHECK(*rep.dims.ext2 == 2);
    CHECK(format_mukai(rep.v_F) == "(2, D, 1)");
    CHECK(format_mukai(rep.v_wedge2) == "(1, D, 2)");
    CHECK(format_mukai(rep.v_sym2) == "(3, 3D, 0)");
    CHECK(rep.v_wedge2 == rep.scenario.v1);
    CHECK(rep.v_sym2 == rep.scenario.v2);
    CHECK(rep.d0_odd);
    CHECK(rep.d0_gate == 9);
    CHECK(rep.d0_above_gate);

    auto at_gate = fatighenti_report(9);
    CHECK(at_gate.d0_odd);
    CHECK_FALSE(at_gate.d0_above_gate);
}

TEST_CASE("w0 equals the induced vector across the whole box") {
    oracle::for_each_hard_valid(5, 5, 20, 10, [](long r1, long a, long m0, long d0, long) {
        auto s = build_scenario(make_params(r1, a, m0, d0));
        auto induced = build_w_of_G(s.v1, s.v2);
        CHECK(s.w0.r == induced.r);
        CHECK(s.w0.c1 == induced.c1);
        CHECK(s.w0.disc_coef == induced.disc_coef);
    });
}

TEST_CASE("friedman shift of g is suitable for a(w0) on small scenarios") {
    for (const auto& row : theorem_scan({2, 2, 4, 8})) {
        auto s = build_scenario(row.params);
        const Rational a_w0 = modular_constants(s.w0).a;
        auto g = cone_vector(s.lambda_cone, 0, 1);
        const Integer n = friedman_N(a_w0, g, s.lambda_cone);
        auto shifted = cone_vector(s.lambda_cone, Rational(n), 1);
        CHECK(is_a_suitable(a_w0, shifted, s.lambda_cone).suitable);
    }
}

TEST_CASE("identity suite passes over a sample box") {
    auto counts = run_identity_suite({3, 3, 8, 6});
    CHECK(counts.total > 0);
    CHECK(counts.all_pass());
    CHECK(counts.s_two_routes == counts.total);
    CHECK(counts.ch3_two_routes == counts.total);
    CHECK(counts.atomicity_routes == counts.total);
    CHECK(counts.w0_match == counts.total);
    CHECK(counts.dim_match == counts.total);
    CHECK(counts.congruence == counts.total);
    CHECK(counts.cone_gram_integral == counts.total);
}
