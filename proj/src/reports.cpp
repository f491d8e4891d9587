#include "hkmod/reports.hpp"

#include <cstdint>

#include "hkmod/errors.hpp"

namespace hkmod {

namespace {

Json params_json(const ScenarioParams& p) {
    Json j;
    j["r1"] = p.r1;
    j["a"] = p.a;
    j["m0"] = p.m0;
    j["d0"] = p.d0;
    j["b"] = p.b;
    return j;
}

Json checks_json(const std::vector<ValidationCheck>& checks) {
    Json arr = Json::array();
    for (const auto& check : checks) {
        Json j;
        j["name"] = check.name;
        j["pass"] = check.pass;
        arr.push_back(j);
    }
    return arr;
}

Json validation_json(const ValidationReport& rep) {
    Json j;
    j["hard_ok"] = rep.hard_ok();
    j["all_ok"] = rep.all_ok();
    j["hard"] = checks_json(rep.hard);
    j["advisory"] = checks_json(rep.advisory);
    return j;
}

Json congruence_json(const CongruenceDetail& det) {
    Json j;
    j["r1_mod_4"] = det.r1_mod_4;
    j["expected_div"] = json_integer(det.expected_div);
    j["modulus"] = json_integer(det.modulus);
    j["residue_target"] = json_integer(det.residue_target);
    j["q"] = json_rational(det.q);
    j["div"] = json_integer(det.div);
    j["div_ok"] = det.div_ok;
    j["q_ok"] = det.q_ok;
    j["pass"] = det.pass();
    return j;
}

Json integral_as_number(const Rational& q, const char* which) {
    if (!is_integral(q)) fail(ErrCode::NonIntegralInput, which, "expected an integer value");
    return json_integer(q.get_num());
}

const char* kind_name(PairClassification::Kind kind) {
    switch (kind) {
        case PairClassification::Kind::IsotropicProportional: return "isotropic_proportional";
        case PairClassification::Kind::SphericalPlus: return "spherical_plus";
        case PairClassification::Kind::Invalid: return "invalid";
    }
    return "invalid";
}

std::string format_extended(const ExtendedMukai& v) {
    return "(" + to_string(v.r) + ", " + format_hilb2(v.lambda) + ", " + to_string(v.s) + ")";
}

}  // namespace

Json json_rational(const Rational& q) { return Json(to_string(q)); }

Json json_integer(const Integer& n) {
    if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(to_string(n));
}

Json scenario_report(const Scenario& s) {
    const auto validation = validate_params(s.params);
    const auto mc = modular_constants(s.w0);
    const auto det = congruence_detail(s);
    Json j;
    j["params"] = params_json(s.params);
    j["validation"] = validation_json(validation);
    j["v1"] = format_mukai(s.v1);
    j["v1_square"] = json_rational(mukai_square(s.v1));
    j["v2"] = format_mukai(s.v2);
    j["v2_square"] = json_rational(mukai_square(s.v2));
    j["pairing_v1_v2"] = json_rational(mukai_pairing(s.v1, s.v2));
    j["w0"] = format_mock(s.w0);
    j["d_w0"] = json_rational(mc.d);
    j["a_w0"] = json_rational(mc.a);
    j["i"] = s.i;
    j["g"] = format_hilb2(s.g);
    j["q_g"] = json_rational(det.q);
    j["div_g"] = json_integer(det.div);
    j["f"] = format_hilb2(s.f);
    j["cone"]["c"] = integral_as_number(s.lambda_cone.c, "cone_c");
    j["cone"]["G"] = integral_as_number(s.lambda_cone.G, "cone_G");
    j["dim"] = json_integer(moduli_dimension(s.v2));
    j["congruence"] = congruence_json(det);
    return j;
}

Json wg_report(const Scenario& s) {
    const auto mc = modular_constants(s.w0);
    const auto det = congruence_detail(s);
    const Rational ceiling = negative_square_ceiling(s);
    Json j;
    j["w0"] = format_mock(s.w0);
    j["g"] = format_hilb2(s.g);
    j["f"] = format_hilb2(s.f);
    j["q_g"] = json_rational(det.q);
    j["div_g"] = json_integer(det.div);
    j["d_w0"] = json_rational(mc.d);
    j["a_w0"] = json_rational(mc.a);
    j["congruence_pass"] = det.pass();
    j["negative_square_ceiling"] = json_rational(ceiling);
    j["d0_threshold"] = to_string(d0_threshold(s.params.r1, s.params.a, s.params.m0));
    return j;
}

Json atomic_report(const Scenario& s) {
    const auto routes = atomicity_routes(s.v1, s.v2);
    if (!routes.agree())
        fail(ErrCode::HypothesesViolated, "atomicity_routes", "criteria disagree");
    Json j;
    j["atomic"] = routes.product_route;
    j["s1s2"] = json_rational(routes.s1s2);
    j["rbar_d2_over_4"] = json_rational(routes.rbar_d2_over_4);
    return j;
}

Json extended_report(const Scenario& s) {
    const auto gi = g_invariants(s.v1, s.v2);
    const MockMukai w{gi.rank, gi.c1, gi.disc_coef};
    Json j;
    j["rank"] = json_integer(gi.rank);
    j["c1"] = format_hilb2(gi.c1);
    j["disc_coef"] = json_rational(gi.disc_coef);
    j["d"] = json_rational(gi.d);
    j["s"] = json_rational(gi.s_ext);
    j["ch3_coef"] = json_rational(gi.ch3_coef);
    j["ch4_integral"] = json_rational(gi.ch4_integral);
    j["v4_integral"] = json_rational(gi.v4_integral);
    j["atomic"] = gi.atomic;
    j["extended_vector"] = format_extended(extended_vector(w));
    return j;
}

Json exts_report(const Scenario& s, const StabilityAssumptions& assume) {
    const auto cls = classify_pair(s.v1, s.v2);
    const auto table = ext_table_from_vectors(s.v1, s.v2, assume);
    const auto dims = ext_dims_G(table);
    Json j;
    j["classification"] = kind_name(cls.kind);
    j["hom12"] = json_integer(table.hom12);
    j["hom21"] = json_integer(table.hom21);
    j["ext1_11"] = json_integer(table.ext1_11);
    j["ext1_22"] = json_integer(table.ext1_22);
    j["ext1_12"] = json_integer(table.ext1_12);
    j["simple"] = dims.simple;
    j["ext1"] = json_integer(dims.ext1);
    j["ext2"] = dims.ext2 ? json_integer(*dims.ext2) : Json(nullptr);
    return j;
}

Json jacobian_report(const Scenario& s) {
    const auto cls = decomposition_class(s);
    const auto dim = linear_system_dim(cls);
    Json j;
    j["m"] = json_integer(cls.m);
    j["n"] = json_integer(cls.n);
    j["dim"] = json_integer(dim.dim);
    j["self_intersection"] = json_integer(dim.self_intersection);
    j["lagrangian_base_dim"] = json_integer(lagrangian_base_dim(s));
    j["general_member"] = general_member_kind_name(general_member_kind(cls.m, cls.n));
    return j;
}

Json fatighenti_json() {
    const auto rep = fatighenti_report();
    Json j;
    j["ext1"] = json_integer(rep.dims.ext1);
    j["ext2"] = rep.dims.ext2 ? json_integer(*rep.dims.ext2) : Json(nullptr);
    j["w"] = format_mock(rep.w);
    j["q_c1_primitive"] = integral_as_number(rep.q_h, "q_c1_primitive");
    j["div"] = json_integer(rep.div_h);
    return j;
}

Json suitable_report(const Rational& a, const LatticeVector& h, const RankTwoCone& cone) {
    const auto rep = is_a_suitable(a, h, cone);
    Json j;
    j["suitable"] = rep.suitable;
    j["h"] = format_cone_vector(h);
    j["y_bound"] = json_integer(rep.y_bound);
    if (rep.witness) {
        Json w;
        w["lambda"] = format_cone_vector(rep.witness->lambda);
        w["q_lambda"] = json_rational(rep.witness->q_value);
        w["violation"] = rep.violated;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json walls_report(const Rational& a, const LatticeVector& h0, const LatticeVector& h1,
                  const RankTwoCone& cone) {
    const auto walls = walls_on_segment(a, h0, h1, cone);
    Json j;
    j["h0"] = format_cone_vector(h0);
    j["h1"] = format_cone_vector(h1);
    j["count"] = static_cast<std::int64_t>(walls.size());
    j["walls"] = Json::array();
    for (const auto& sw : walls) {
        Json w;
        w["t"] = json_rational(sw.t);
        w["lambda"] = format_cone_vector(sw.wall.lambda);
        w["q"] = json_rational(sw.wall.q_value);
        j["walls"].push_back(w);
    }
    return j;
}

Json friedman_report(const Rational& a, const LatticeVector& h0, const RankTwoCone& cone) {
    const Integer N = friedman_N(a, h0, cone);
    const LatticeVector shifted = h0 + Rational(N) * cone_f(cone);
    Json j;
    j["N"] = json_integer(N);
    j["h_suitable"] = format_cone_vector(shifted);
    return j;
}

Json stimakota_report(const LatticeVector& h, const RankTwoCone& cone) {
    const Rational bound = stimakota_bound(h, cone);
    Json j;
    j["bound"] = json_rational(bound);
    j["q_h"] = json_rational(square(h));
    return j;
}

Json scan_row_json(const ScanRow& row) {
    Json j;
    j["r1"] = row.params.r1;
    j["a"] = row.params.a;
    j["m0"] = row.params.m0;
    j["d0"] = row.params.d0;
    j["b"] = row.params.b;
    j["div"] = json_integer(row.div);
    j["q_g"] = json_rational(row.q_g);
    j["dim"] = json_integer(row.dim);
    j["congruence"] = true;
    return j;
}

bool IdentityCounts::all_pass() const {
    return total > 0 && s_two_routes == total && ch3_two_routes == total &&
           atomicity_routes == total && w0_match == total && dim_match == total &&
           congruence == total && cone_gram_integral == total;
}

IdentityCounts run_identity_suite(const ScanRanges& ranges) {
    IdentityCounts counts;
    for (long r1 = 1; r1 <= ranges.r1max; ++r1)
        for (long a = 1; a <= ranges.amax; ++a)
            for (long m0 = 1; m0 <= ranges.m0max; ++m0)
                for (long d0 = 1; d0 <= ranges.d0max; ++d0) {
                    const auto p = make_params(r1, a, m0, d0);
                    if (!validate_params(p).hard_ok()) continue;
                    ++counts.total;

                    const auto s = build_scenario(p);
                    const auto gi = g_invariants(s.v1, s.v2);
                    const auto induced = build_w_of_G(s.v1, s.v2);

                    if (extended_s(induced) == gi.s_ext) ++counts.s_two_routes;
                    if (gi.ch3_coef == gi.s_ext / Rational(gi.rank) - Rational(5, 4))
                        ++counts.ch3_two_routes;
                    if (hkmod::atomicity_routes(s.v1, s.v2).agree()) ++counts.atomicity_routes;
                    if (s.w0 == induced) ++counts.w0_match;
                    if (moduli_dimension(s.v2) == 2 * Integer(a) * a + 2) ++counts.dim_match;
                    if (congruence_check(s)) ++counts.congruence;
                    if (is_integral(s.lambda_cone.c) && is_integral(s.lambda_cone.G))
                        ++counts.cone_gram_integral;
                }
    return counts;
}

Json identities_report(const ScanRanges& ranges) {
    const auto counts = run_identity_suite(ranges);
    Json j;
    j["all_pass"] = counts.all_pass();
    j["total"] = counts.total;
    Json checks;
    checks["s_two_routes"] = counts.s_two_routes;
    checks["ch3_two_routes"] = counts.ch3_two_routes;
    checks["atomicity_routes"] = counts.atomicity_routes;
    checks["w0_match"] = counts.w0_match;
    checks["dim_match"] = counts.dim_match;
    checks["congruence"] = counts.congruence;
    checks["cone_gram_integral"] = counts.cone_gram_integral;
    j["checks"] = checks;
    return j;
}

Json error_json(const std::string& code, const std::string& which, const std::string& detail) {
    Json j;
    j["error"] = code;
    j["which"] = which;
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

}  // namespace hkmod
