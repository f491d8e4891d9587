#include "hkmod/cone.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "format_terms.hpp"
#include "hkmod/errors.hpp"

namespace hkmod {

RankTwoCone make_cone(const Rational& c, const Rational& G) {
    if (c <= 0) fail(ErrCode::InvalidLattice, "q(f, g) must be positive");
    RankTwoCone cone;
    cone.lattice = make_lattice({"f", "g"}, {{Rational(0), c}, {c, G}});
    cone.c = c;
    cone.G = G;
    return cone;
}

LatticeVector cone_f(const RankTwoCone& cone) { return basis_vector(cone.lattice, 0); }

LatticeVector cone_g(const RankTwoCone& cone) { return basis_vector(cone.lattice, 1); }

LatticeVector cone_vector(const RankTwoCone& cone, const Rational& x, const Rational& y) {
    return make_vector(cone.lattice, {x, y});
}

bool in_positive_component(const RankTwoCone& cone, const LatticeVector& h) {
    return square(h) > 0 && pairing(h, cone_f(cone)) > 0;
}

SlopeDiscrepancy slope_discrepancy(const Integer& r_h, const LatticeVector& c1_h,
                                   const Integer& r_f, const LatticeVector& c1_f) {
    return {Rational(r_f) * c1_h - Rational(r_h) * c1_f};
}

int slope_sign(const RankTwoCone& cone, const SlopeDiscrepancy& lambda,
               const LatticeVector& omega) {
    if (!in_positive_component(cone, omega))
        fail(ErrCode::NotPositiveClass, "omega must lie in the positive component");
    return sign_of(pairing(lambda.lambda, omega));
}

int fiber_slope_sign(const RankTwoCone& cone, const SlopeDiscrepancy& lambda) {
    return sign_of(pairing(lambda.lambda, cone_f(cone)));
}

namespace {

void check_positive_integral(const RankTwoCone& cone, const LatticeVector& h) {
    if (!h.is_integral()) fail(ErrCode::NonIntegralVector, "integral class required");
    if (!in_positive_component(cone, h))
        fail(ErrCode::NotPositiveClass, "class must lie in the positive component");
}

void check_bound_positive(const Rational& a) {
    if (a <= 0) fail(ErrCode::DegenerateInput, "the square bound must be positive");
}

// Inclusive integer x-range of -a <= q(x f + y g) < 0 at fixed y >= 1:
//   -a - y^2 G <= 2xyc < -y^2 G.
std::pair<Integer, Integer> x_window(const Rational& c, const Rational& G, const Rational& a,
                                     const Integer& y) {
    const Rational y2G = Rational(y * y) * G;
    const Rational denom = 2 * Rational(y) * c;
    const Integer lo = ceil_of((-a - y2G) / denom);
    const Integer hi = ceil_of(-y2G / denom) - 1;
    return {lo, hi};
}

// Walks candidates in (y, x) order; stops at the first lambda on which
// `visit` returns true.
template <typename Visit>
void scan_candidates(const RankTwoCone& cone, const Rational& a, const Integer& y_max,
                     Visit&& visit) {
    for (Integer y = 1; y <= y_max; ++y) {
        const auto [lo, hi] = x_window(cone.c, cone.G, a, y);
        for (Integer x = lo; x <= hi; ++x) {
            if (gcd_of(x, y) != 1) continue;
            if (visit(x, y)) return;
        }
    }
}

}  // namespace

SuitabilityReport is_a_suitable(const Rational& a, const LatticeVector& h,
                                const RankTwoCone& cone) {
    check_bound_positive(a);
    check_positive_integral(cone, h);
    const Rational v = h.coords[1];
    const Rational q_h = square(h);

    SuitabilityReport report;
    report.y_bound = isqrt_floor(a * v * v / q_h);
    report.suitable = true;
    scan_candidates(cone, a, report.y_bound, [&](const Integer& x, const Integer& y) {
        auto lambda = cone_vector(cone, Rational(x), Rational(y));
        const int sign = sign_of(pairing(lambda, h));
        if (sign > 0) return false;
        report.suitable = false;
        report.witness = Wall{lambda, square(lambda)};
        report.violated = sign == 0 ? "wall_through_h" : "sign_mismatch";
        return true;
    });
    return report;
}

bool suitif_sufficient(const Rational& a, const LatticeVector& h, const RankTwoCone& cone) {
    check_bound_positive(a);
    check_positive_integral(cone, h);
    const Rational q_hf = pairing(h, cone_f(cone));
    return square(h) > a * q_hf * q_hf;
}

Integer friedman_N(const Rational& a, const LatticeVector& h0, const RankTwoCone& cone) {
    check_bound_positive(a);
    check_positive_integral(cone, h0);
    return floor_of(a * pairing(h0, cone_f(cone)) / 2) + 1;
}

Rational stimakota_bound(const LatticeVector& h, const RankTwoCone& cone) {
    const Rational q_h = square(h);
    if (q_h <= 0) fail(ErrCode::NotPositiveClass, "bound needs q(h) > 0");
    const Rational q_hf = pairing(h, cone_f(cone));
    if (q_hf == 0) fail(ErrCode::DegenerateInput, "h pairs to zero with the fiber class");
    return -q_h / (q_hf * q_hf);
}

std::vector<SegmentWall> walls_on_segment(const Rational& a, const LatticeVector& h0,
                                          const LatticeVector& h1, const RankTwoCone& cone) {
    check_bound_positive(a);
    check_positive_integral(cone, h0);
    check_positive_integral(cone, h1);
    const Integer y_max = std::max(isqrt_floor(a * h0.coords[1] * h0.coords[1] / square(h0)),
                                   isqrt_floor(a * h1.coords[1] * h1.coords[1] / square(h1)));

    std::vector<SegmentWall> out;
    scan_candidates(cone, a, y_max, [&](const Integer& x, const Integer& y) {
        auto lambda = cone_vector(cone, Rational(x), Rational(y));
        const Rational A = pairing(lambda, h0);
        const Rational B = pairing(lambda, h1);
        Rational t;
        if (A == B) {
            if (A != 0) return false;
            t = 1;
        } else {
            t = B / (B - A);
            if (!(0 < t && t <= 1)) return false;
        }
        const Rational q_lambda = square(lambda);
        out.push_back({t, Wall{std::move(lambda), q_lambda}});
        return false;
    });
    std::sort(out.begin(), out.end(), [](const SegmentWall& p, const SegmentWall& q) {
        return std::tie(p.t, p.wall.lambda.coords[1], p.wall.lambda.coords[0]) <
               std::tie(q.t, q.wall.lambda.coords[1], q.wall.lambda.coords[0]);
    });
    return out;
}

std::string format_cone_vector(const LatticeVector& v) {
    std::vector<std::pair<Rational, std::string>> terms;
    terms.emplace_back(v.coords[1], v.lattice->basis_labels[1]);
    terms.emplace_back(v.coords[0], v.lattice->basis_labels[0]);
    return detail::format_terms(terms);
}

}  // namespace hkmod
