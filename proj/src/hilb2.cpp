#include "hkmod/hilb2.hpp"

#include <utility>

#include "format_terms.hpp"
#include "hkmod/errors.hpp"

namespace hkmod {

const Rational kSqrtTdDeg4Coef = make_rational(5, 4);
const Rational kSqrtTdDeg8Coef = make_rational(25, 32);
const Integer kC2PerQ2 = 30;
const Integer kC2SquareIntegral = 828;

bool Hilb2Class::is_zero() const { return mu.is_zero() && d_coef == 0; }

bool Hilb2Class::is_integral() const { return mu.is_integral() && hkmod::is_integral(d_coef); }

Hilb2Class mu_class(const LatticeVector& l) { return {l, Rational(0)}; }

Hilb2Class delta_class(const K3Surface& s) { return {zero_vector(s.ns), Rational(1)}; }

Hilb2Class zero_hilb2(const K3Surface& s) { return {zero_vector(s.ns), Rational(0)}; }

Hilb2Class operator+(const Hilb2Class& x, const Hilb2Class& y) {
    return {x.mu + y.mu, x.d_coef + y.d_coef};
}

Hilb2Class operator-(const Hilb2Class& x, const Hilb2Class& y) {
    return {x.mu - y.mu, x.d_coef - y.d_coef};
}

Hilb2Class operator*(const Rational& k, const Hilb2Class& x) {
    return {k * x.mu, k * x.d_coef};
}

bool operator==(const Hilb2Class& x, const Hilb2Class& y) {
    return x.mu == y.mu && x.d_coef == y.d_coef;
}

Rational bbf_pairing(const Hilb2Class& x, const Hilb2Class& y) {
    return pairing(x.mu, y.mu) - 2 * x.d_coef * y.d_coef;
}

Rational bbf_square(const Hilb2Class& x) { return bbf_pairing(x, x); }

Integer hilb2_content(const Hilb2Class& x) {
    if (!x.is_integral()) fail(ErrCode::NonIntegralVector, "content needs integer coordinates");
    if (x.is_zero()) fail(ErrCode::ZeroClass, "content of the zero class");
    Integer g = 0;
    for (const auto& c : x.mu.coords) g = gcd_of(g, c.get_num());
    return gcd_of(g, x.d_coef.get_num());
}

Hilb2Class primitive_part(const Hilb2Class& x) {
    return make_rational(1, hilb2_content(x)) * x;
}

Integer divisibility(const Hilb2Class& x) {
    if (!x.is_integral()) fail(ErrCode::NonIntegralVector, "divisibility needs an integral class");
    if (x.is_zero()) fail(ErrCode::ZeroClass, "divisibility of the zero class");
    Integer g = 0;
    for (const auto& c : x.mu.coords) g = gcd_of(g, c.get_num());
    return gcd_of(g, 2 * x.d_coef.get_num());
}

bool operator==(const MockMukai& v, const MockMukai& w) {
    return v.r == w.r && v.c1 == w.c1 && v.disc_coef == w.disc_coef;
}

MockMukai build_w_of_G(const MukaiVector& v1, const MukaiVector& v2) {
    const auto cls = classify_pair(v1, v2);
    if (cls.kind == PairClassification::Kind::Invalid)
        fail(ErrCode::HypothesesViolated, cls.reason, "pair is not admissible");
    MockMukai w;
    w.r = 2 * v1.r * v2.r;
    w.c1 = {Rational(v2.r) * v1.l + Rational(v1.r) * v2.l, -Rational(v1.r * v2.r)};
    w.disc_coef = Rational(v1.r * v1.r * v2.r * v2.r) / 3;
    return w;
}

ModularConstants modular_constants(const MockMukai& w) {
    ModularConstants out;
    out.d = Rational(kC2PerQ2) * w.disc_coef;
    out.a = Rational(w.r * w.r) * out.d / 4;
    return out;
}

GeneralNInvariants general_n_invariants(const std::vector<MukaiVector>& vs, unsigned n) {
    return general_n_invariants(vs, n, Rational(1), Rational(6) * (Rational(n) + 3));
}

GeneralNInvariants general_n_invariants(const std::vector<MukaiVector>& vs, unsigned n,
                                        const Rational& c_x, const Rational& c_c2) {
    if (n < 1 || vs.size() != n)
        fail(ErrCode::InvalidParams, "count", "expected exactly n vectors");
    if (c_x == 0) fail(ErrCode::DegenerateInput, "c_x must be nonzero");
    for (const auto& v : vs)
        if (v.r < 1) fail(ErrCode::ZeroRank, "positive ranks required");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!(Rational(vs[j].r) * vs[i].l == Rational(vs[i].r) * vs[j].l))
                fail(ErrCode::HypothesesViolated, "equal_slopes",
                     "normalized first Chern classes differ");
    Rational balance = 0;
    for (const auto& v : vs) balance += mukai_square(v) / Rational(v.r * v.r);
    if (balance != 0)
        fail(ErrCode::HypothesesViolated, "square_balance", "squares do not cancel");

    Integer rbar = 1;
    for (const auto& v : vs) rbar *= v.r;
    const Integer nfact = factorial_of(n);
    const Integer nm1fact = factorial_of(n - 1);

    GeneralNInvariants out;
    out.rank = nfact * rbar;
    out.disc_coef = Rational(nfact * nfact) * Rational(rbar * rbar) / 12;
    out.d = c_c2 * out.disc_coef;
    out.a = Rational(out.rank * out.rank) * out.d / (4 * c_x);
    LatticeVector mu_total = zero_vector(vs[0].l.lattice);
    for (const auto& v : vs)
        mu_total = mu_total + (Rational(nm1fact * rbar) / Rational(v.r)) * v.l;
    out.mu_coefs = mu_total.coords;
    out.delta_coef = -Rational(nm1fact * rbar) * Rational(n) / 2;
    return out;
}

Rational extended_s(const MockMukai& w) {
    if (w.r < 1) fail(ErrCode::ZeroRank, "extended component needs rank >= 1");
    const Rational r(w.r);
    return (5 * r * r / 4 + bbf_square(w.c1) / 2 - 15 * w.disc_coef) / r;
}

ExtendedMukai extended_vector(const MockMukai& w) { return {w.r, w.c1, extended_s(w)}; }

namespace {

struct PairData {
    Rational r1;
    Rational r2;
    Rational rbar;
    Rational d;
};

PairData admissible_pair_data(const MukaiVector& v1, const MukaiVector& v2) {
    const auto cls = classify_pair(v1, v2);
    if (cls.kind == PairClassification::Kind::Invalid)
        fail(ErrCode::HypothesesViolated, cls.reason, "pair is not admissible");
    if (v1.r < 1 || v2.r < 1) fail(ErrCode::ZeroRank, "positive ranks required");
    PairData out;
    out.r1 = Rational(v1.r);
    out.r2 = Rational(v2.r);
    out.rbar = out.r1 * out.r2;
    out.d = square(v1.l) / (out.r1 * out.r1);
    return out;
}

}  // namespace

GInvariants g_invariants(const MukaiVector& v1, const MukaiVector& v2) {
    const auto pd = admissible_pair_data(v1, v2);
    if (v1.s / pd.r1 + v2.s / pd.r2 != pd.d)
        fail(ErrCode::HypothesesViolated, "s_ratio_sum",
             "s1/r1 + s2/r2 must equal the common slope square");

    const auto w = build_w_of_G(v1, v2);
    GInvariants out;
    out.rank = w.r;
    out.c1 = w.c1;
    out.disc_coef = w.disc_coef;
    out.d = pd.d;
    out.a_const = modular_constants(w).a;
    out.s_ext = extended_s(w);
    out.ch3_coef = (pd.d - 3) / 2;
    out.ch4_integral = v1.s * v2.s - pd.rbar * (3 * pd.d - 4) / 2;

    // Degree-8 assembly of v(G) = ch(G) sqrt(Td):
    //   int v4 = int ch4 + (5/4) int ch2 q2 + rank (25/32),
    // with int ch2 q2 resolved through c2(G) = (Delta + (r-1) c1^2)/(2r),
    // int Delta q2 = disc_coef int c2(X) q2 and int c2(X) q2 = 828/30.
    const Rational q_c1 = bbf_square(w.c1);
    const Rational c2x_q2 = Rational(kC2SquareIntegral) / Rational(kC2PerQ2);
    const Rational rk(w.r);
    const Rational c2g_q2 = (w.disc_coef * c2x_q2 + (rk - 1) * q_c1) / (2 * rk);
    const Rational ch2_q2 = (q_c1 - 2 * c2g_q2) / 2;
    out.v4_integral = out.ch4_integral + kSqrtTdDeg4Coef * ch2_q2 + rk * kSqrtTdDeg8Coef;

    out.atomic = v1.s * v2.s == pd.rbar * pd.d * pd.d / 4;
    return out;
}

AtomicityRoutes atomicity_routes(const MukaiVector& v1, const MukaiVector& v2) {
    const auto pd = admissible_pair_data(v1, v2);
    AtomicityRoutes out;
    out.s1s2 = v1.s * v2.s;
    out.rbar_d2_over_4 = pd.rbar * pd.d * pd.d / 4;
    out.s1_over_r1 = v1.s / pd.r1;
    out.s2_over_r2 = v2.s / pd.r2;
    out.v1_square = mukai_square(v1);
    out.v2_square = mukai_square(v2);
    out.product_route = out.s1s2 == out.rbar_d2_over_4;
    out.ratio_route = out.s1_over_r1 == out.s2_over_r2;
    out.square_route = out.v1_square == 0 && out.v2_square == 0;
    return out;
}

bool is_atomic(const MukaiVector& v1, const MukaiVector& v2) {
    return atomicity_routes(v1, v2).product_route;
}

std::string format_hilb2(const Hilb2Class& x) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (std::size_t i = 0; i < x.mu.coords.size(); ++i)
        terms.emplace_back(x.mu.coords[i], "μ(" + x.mu.lattice->basis_labels[i] + ")");
    terms.emplace_back(x.d_coef, "δ");
    return detail::format_terms(terms);
}

std::string format_mock(const MockMukai& w) {
    return "(" + to_string(w.r) + ", " + format_hilb2(w.c1) + ", " + to_string(w.disc_coef) +
           "·c2)";
}

}  // namespace hkmod
