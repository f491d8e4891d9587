#include "hkmod/scenario.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "hkmod/errors.hpp"

namespace hkmod {

namespace {

Integer mod_canonical(const Integer& x, const Integer& m) {
    Integer out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return out;
}

Integer pow_int(long base, unsigned exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), exp);
    return out;
}

void assert_consistent(bool ok, const char* which) {
    if (!ok) fail(ErrCode::HypothesesViolated, which, "internal consistency check failed");
}

}  // namespace

bool ValidationReport::hard_ok() const {
    return std::all_of(hard.begin(), hard.end(), [](const ValidationCheck& c) { return c.pass; });
}

bool ValidationReport::all_ok() const {
    return hard_ok() && std::all_of(advisory.begin(), advisory.end(),
                                    [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::first_hard_failure() const {
    for (const auto& check : hard)
        if (!check.pass) return check.name;
    return "";
}

ValidationReport validate_params(const ScenarioParams& p) {
    const Integer r1(p.r1), a(p.a), m0(p.m0), d0(p.d0), b(p.b);
    ValidationReport rep;
    const bool positive = r1 >= 1 && a >= 1 && m0 >= 1 && d0 >= 1;
    rep.hard.push_back({"positive", positive, "r1, a, m0, d0 >= 1"});
    rep.hard.push_back({"r1_divides_2a", positive && 2 * a % r1 == 0, "r1 | 2a"});
    rep.hard.push_back({"r1_divides_m0_plus_1", positive && (m0 + 1) % r1 == 0, "r1 | m0 + 1"});
    rep.hard.push_back({"r1_d0_coprime", positive && gcd_of(r1, d0) == 1, "gcd(r1, d0) = 1"});
    rep.hard.push_back({"b_positive", b >= 1, "b >= 1"});
    rep.advisory.push_back({"a_ge_2", a >= 2, "a >= 2"});
    rep.advisory.push_back({"d0_ge_2r1", d0 >= 2 * r1, "d0 >= 2 r1"});
    rep.advisory.push_back({"br1_ge_2a", b * r1 >= 2 * a, "b r1 >= 2a"});
    rep.advisory.push_back({"four_m0_gt_r1_sq", 4 * m0 > r1 * r1, "4 m0 > r1^2"});
    return rep;
}

ScenarioParams make_params(long r1, long a, long m0, long d0) {
    ScenarioParams p;
    p.r1 = r1;
    p.a = a;
    p.m0 = m0;
    p.d0 = d0;
    if (r1 >= 1) {
        const Integer twice_a = 2 * Integer(a);
        if (twice_a % r1 == 0) {
            const Integer b = twice_a / r1;
            if (b.fits_slong_p()) p.b = b.get_si();
        }
    }
    return p;
}

ScenarioParams make_params(long r1, long a, long m0, long d0, long b) {
    ScenarioParams p = make_params(r1, a, m0, d0);
    p.b = b;
    p.b_explicit = true;
    return p;
}

Scenario build_scenario(const ScenarioParams& p) {
    const auto rep = validate_params(p);
    if (!rep.hard_ok()) {
        const std::string which = rep.first_hard_failure();
        for (const auto& check : rep.hard)
            if (check.name == which) fail(ErrCode::InvalidParams, which, check.detail);
    }
    const Integer r1(p.r1), a(p.a), b(p.b);

    Scenario s;
    s.params = p;
    s.surface = make_k3(p.m0, p.d0);
    s.v1 = make_mukai(r1, class_D(s.surface), Rational(Integer(p.m0) + 1) / Rational(r1));
    s.v2 = a * s.v1 - b * point_class(s.surface);
    s.i = p.r1 % 2 == 0 ? 2 : 1;

    const Hilb2Class base{Rational(2) * class_D(s.surface), -Rational(r1)};
    s.g = make_rational(1, s.i) * base;
    s.f = mu_class(class_C(s.surface));
    s.lambda_cone = make_cone(Rational(2 * Integer(p.d0)) / s.i,
                              Rational(8 * Integer(p.m0) - 2 * r1 * r1) / (s.i * s.i));
    s.w0.r = 2 * a * r1 * r1;
    s.w0.c1 = Rational(a * r1) * base;
    s.w0.disc_coef = Rational(a * a * r1 * r1 * r1 * r1) / 3;

    assert_consistent(mukai_square(s.v1) == -2, "v1_square");
    assert_consistent(mukai_square(s.v2) == Rational(2 * a * b * r1 - 2 * a * a), "v2_square");
    assert_consistent(is_integral(s.lambda_cone.c) && is_integral(s.lambda_cone.G),
                      "cone_gram_integral");
    assert_consistent(s.g.is_integral(), "g_integral");
    if (b * r1 == 2 * a) {
        assert_consistent(mukai_pairing(s.v1, s.v2) == 0, "v1_v2_orthogonal");
        assert_consistent(s.w0 == build_w_of_G(s.v1, s.v2), "w0_route");
    }
    return s;
}

GSquareDiv g_square_and_divisibility(const Scenario& s) {
    const Integer r1(s.params.r1), m0(s.params.m0);
    GSquareDiv out;
    if (s.params.r1 % 2 == 0) {
        out.q = Rational(2 * m0) - Rational(r1 * r1) / 2;
        out.div = 1;
    } else {
        out.q = Rational(8 * m0 - 2 * r1 * r1);
        out.div = 2;
    }
    assert_consistent(out.q == bbf_square(s.g), "g_square_route");
    assert_consistent(out.div == divisibility(s.g), "g_divisibility_route");
    return out;
}

CongruenceDetail congruence_detail(const Scenario& s) {
    const Integer r1(s.params.r1);
    CongruenceDetail out;
    out.r1_mod_4 = static_cast<int>(s.params.r1 % 4);
    Integer target;
    switch (out.r1_mod_4) {
        case 0:
            out.expected_div = 1;
            out.modulus = 2 * r1;
            target = -2;
            break;
        case 1:
            out.expected_div = 2;
            out.modulus = 8 * r1;
            target = -2 * r1 - 8;
            break;
        case 2:
            out.expected_div = 1;
            out.modulus = 2 * r1;
            target = r1 - 2;
            break;
        default:
            out.expected_div = 2;
            out.modulus = 8 * r1;
            target = 2 * r1 - 8;
            break;
    }
    out.residue_target = mod_canonical(target, out.modulus);
    const auto gd = g_square_and_divisibility(s);
    out.q = gd.q;
    out.div = gd.div;
    out.div_ok = out.div == out.expected_div;
    assert_consistent(is_integral(out.q), "g_square_integral");
    out.q_ok = mod_canonical(out.q.get_num(), out.modulus) == out.residue_target;
    return out;
}

bool congruence_check(const Scenario& s) { return congruence_detail(s).pass(); }

std::vector<ScanRow> theorem_scan(const ScanRanges& ranges, unsigned threads) {
    std::vector<ScenarioParams> tuples;
    for (long r1 = 1; r1 <= ranges.r1max; ++r1)
        for (long a = 1; a <= ranges.amax; ++a)
            for (long m0 = 1; m0 <= ranges.m0max; ++m0)
                for (long d0 = 1; d0 <= ranges.d0max; ++d0) {
                    const auto p = make_params(r1, a, m0, d0);
                    if (validate_params(p).all_ok()) tuples.push_back(p);
                }

    std::vector<ScanRow> rows(tuples.size());
    std::vector<char> keep(tuples.size(), 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto s = build_scenario(tuples[k]);
            const auto det = congruence_detail(s);
            keep[k] = det.pass() ? 1 : 0;
            rows[k] = {tuples[k], det.div, det.q, moduli_dimension(s.v2)};
        }
    };
    if (threads <= 1 || tuples.size() < 2) {
        work(0, tuples.size());
    } else {
        const std::size_t n = tuples.size();
        const std::size_t chunk = (n + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (std::size_t begin = 0; begin < n; begin += chunk)
            pool.emplace_back(work, begin, std::min(begin + chunk, n));
        for (auto& t : pool) t.join();
    }

    std::vector<ScanRow> out;
    out.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (keep[k]) out.push_back(std::move(rows[k]));
    return out;
}

Rational negative_square_ceiling(const Scenario& s) {
    const Integer r1(s.params.r1), m0(s.params.m0), d0(s.params.d0);
    if (!(4 * m0 > r1 * r1))
        fail(ErrCode::HypothesesViolated, "four_m0_gt_r1_sq",
             "the positive cone is degenerate at the boundary");
    const Integer denom = Integer(s.i) * s.i + 8 * m0 - 2 * r1 * r1;
    return Rational(-4 * d0 * d0) / Rational(denom);
}

Integer d0_threshold(long r1, long a, long m0) {
    if (r1 < 1 || a < 1 || m0 < 1)
        fail(ErrCode::InvalidParams, "positive", "r1, a, m0 >= 1");
    const long i = r1 % 2 == 0 ? 2 : 1;
    const Integer denom = Integer(i) * i + 8 * Integer(m0) - 2 * Integer(r1) * r1;
    if (denom <= 0)
        fail(ErrCode::HypothesesViolated, "positive_form", "form denominator must be positive");
    const Rational a_w0 = Rational(10 * pow_int(a, 4) * pow_int(r1, 8));
    return isqrt_floor(a_w0 * Rational(denom) / 4) + 1;
}

JacobianNS make_jacobian_ns() {
    return {make_lattice({"Σ", "Γ"}, {{Rational(-2), Rational(1)},
                                      {Rational(1), Rational(0)}})};
}

DecompositionClass decomposition_class(const Scenario& s) {
    return {Integer(s.params.a), Integer(s.params.b) * s.params.r1};
}

LinearSystemDim linear_system_dim(const DecompositionClass& cls) {
    if (cls.m < 1) fail(ErrCode::NotBigNef, "m_positive", "need m >= 1");
    if (cls.n < 2 * cls.m)
        fail(ErrCode::NotBigNef, "n_ge_2m", "class is not big and nef");
    const auto jac = make_jacobian_ns();
    const auto v = make_vector(jac.lattice, {Rational(cls.m), Rational(cls.n)});
    LinearSystemDim out;
    out.self_intersection = square(v).get_num();
    out.dim = 1 + cls.m * cls.n - cls.m * cls.m;
    assert_consistent(Rational(out.dim) == 1 + Rational(out.self_intersection) / 2,
                      "riemann_roch");
    return out;
}

Integer lagrangian_base_dim(long a, long b, long r1) {
    return 1 + Integer(a) * Integer(b) * Integer(r1) - Integer(a) * Integer(a);
}

Integer lagrangian_base_dim(const Scenario& s) {
    const Rational dim = (2 + mukai_square(s.v2)) / 2;
    assert_consistent(is_integral(dim), "half_dimension_integral");
    return dim.get_num();
}

GeneralMemberKind general_member_kind(const Integer& m, const Integer& n) {
    if (m < 1 || n < 2 * m) return GeneralMemberKind::NoClaim;
    return m == 1 ? GeneralMemberKind::HorizontalIntegral : GeneralMemberKind::IntegralSmooth;
}

const char* general_member_kind_name(GeneralMemberKind kind) {
    switch (kind) {
        case GeneralMemberKind::HorizontalIntegral: return "horizontal_integral";
        case GeneralMemberKind::IntegralSmooth: return "integral_smooth";
        case GeneralMemberKind::NoClaim: return "no_claim";
    }
    return "no_claim";
}

FatighentiReport fatighenti_report(long d0) {
    FatighentiReport rep;
    rep.scenario = build_scenario(make_params(1, 3, 1, d0));
    rep.w = rep.scenario.w0;
    rep.h = primitive_part(rep.w.c1);
    rep.q_h = bbf_square(rep.h);
    rep.div_h = divisibility(rep.h);
    rep.table = ext_table_from_vectors(rep.scenario.v1, rep.scenario.v2);
    rep.dims = ext_dims_G(rep.table);
    rep.v_F = make_mukai(2, class_D(rep.scenario.surface),
                         Rational(Integer(rep.scenario.params.m0) + 1) / 2);
    rep.v_wedge2 = wedge2_mukai(rep.v_F);
    rep.v_sym2 = sym2_mukai(rep.v_F);
    assert_consistent(rep.v_wedge2 == rep.scenario.v1, "wedge2_matches_v1");
    assert_consistent(rep.v_sym2 == rep.scenario.v2, "sym2_matches_v2");
    rep.d0_odd = d0 % 2 != 0;
    rep.d0_gate = 3 * (2 * rep.scenario.params.m0 + 1);
    rep.d0_above_gate = d0 > rep.d0_gate;
    return rep;
}

FatighentiReport fatighenti_report() { return fatighenti_report(11); }

}  // namespace hkmod
