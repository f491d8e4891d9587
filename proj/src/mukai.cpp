#include "hkmod/mukai.hpp"

#include <utility>

#include "hkmod/errors.hpp"

namespace hkmod {

K3Surface make_k3(long m0, long d0) {
    if (m0 < 1 || d0 < 1) fail(ErrCode::InvalidParams, "positive", "m0 and d0 must be positive");
    K3Surface s;
    s.m0 = m0;
    s.d0 = d0;
    s.ns = make_lattice({"D", "C"}, {{Rational(2 * m0), Rational(d0)},
                                     {Rational(d0), Rational(0)}});
    return s;
}

LatticeVector class_D(const K3Surface& s) { return basis_vector(s.ns, 0); }

LatticeVector class_C(const K3Surface& s) { return basis_vector(s.ns, 1); }

LatticeVector ns_class(const K3Surface& s, const Rational& x, const Rational& y) {
    return make_vector(s.ns, {x, y});
}

MukaiVector make_mukai(const Integer& r, const LatticeVector& l, const Rational& s) {
    return {r, l, s};
}

MukaiVector point_class(const K3Surface& s) {
    return {Integer(0), zero_vector(s.ns), Rational(1)};
}

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
    return {v.r + w.r, v.l + w.l, v.s + w.s};
}

MukaiVector operator-(const MukaiVector& v, const MukaiVector& w) {
    return {v.r - w.r, v.l - w.l, v.s - w.s};
}

MukaiVector operator*(const Integer& k, const MukaiVector& v) {
    return {k * v.r, Rational(k) * v.l, Rational(k) * v.s};
}

bool operator==(const MukaiVector& v, const MukaiVector& w) {
    return v.r == w.r && v.l == w.l && v.s == w.s;
}

Rational mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    return pairing(v.l, w.l) - Rational(v.r) * w.s - Rational(w.r) * v.s;
}

Rational mukai_square(const MukaiVector& v) { return mukai_pairing(v, v); }

Rational a_of_v(const MukaiVector& v) {
    if (v.r < 1) fail(ErrCode::ZeroRank, "a(v) needs rank >= 1");
    const Rational r2 = Rational(v.r * v.r);
    return r2 * (mukai_square(v) + 2 * r2) / 4;
}

Integer moduli_dimension(const MukaiVector& v) {
    const Rational dim = mukai_square(v) + 2;
    if (dim < 0) fail(ErrCode::NegativeDimension, "square below -2");
    if (!is_integral(dim)) fail(ErrCode::NonIntegralInput, "non-integral moduli dimension");
    return dim.get_num();
}

PairClassification classify_pair(const MukaiVector& v1, const MukaiVector& v2) {
    PairClassification out;
    auto is_zero_triple = [](const MukaiVector& v) {
        return v.r == 0 && v.l.is_zero() && v.s == 0;
    };
    if (is_zero_triple(v1) || is_zero_triple(v2)) {
        out.reason = "zero_vector";
        return out;
    }
    if (!(Rational(v2.r) * v1.l == Rational(v1.r) * v2.l)) {
        out.reason = "equal_slopes";
        return out;
    }
    const Rational sq1 = mukai_square(v1);
    const Rational sq2 = mukai_square(v2);
    if (Rational(v2.r * v2.r) * sq1 + Rational(v1.r * v1.r) * sq2 != 0) {
        out.reason = "square_balance";
        return out;
    }

    if (sq1 == 0 && sq2 == 0) {
        // Full proportionality of the triples: with the r-l minors already
        // zero, the remaining 2x2 minors are r-s and l-s.
        const bool rs_minor = v1.r * v2.s == v2.r * v1.s;
        const bool ls_minor = v2.s * v1.l == v1.s * v2.l;
        if (rs_minor && ls_minor) {
            out.kind = PairClassification::Kind::IsotropicProportional;
            out.reason.clear();
        } else {
            out.reason = "proportionality";
        }
        return out;
    }

    const MukaiVector* first = &v1;
    const MukaiVector* second = &v2;
    bool swapped = false;
    Rational sphere_sq = sq1, plus_sq = sq2;
    if (sq2 == -2 && sq1 > 0) {
        std::swap(first, second);
        std::swap(sphere_sq, plus_sq);
        swapped = true;
    }
    if (!(sphere_sq == -2 && plus_sq > 0)) {
        out.reason = "square_values";
        return out;
    }
    // second = a * first on the (r, l) part, a a positive integer.
    if (first->r == 0 || second->r % first->r != 0) {
        out.reason = "integral_ratio";
        return out;
    }
    const Integer a = second->r / first->r;
    if (a < 1 || !(second->l == Rational(a) * first->l)) {
        out.reason = "integral_ratio";
        return out;
    }
    out.kind = PairClassification::Kind::SphericalPlus;
    out.a = a;
    out.swapped = swapped;
    out.reason.clear();
    return out;
}

namespace {

void ensure_rank_two(const MukaiVector& v) {
    if (v.r != 2) fail(ErrCode::RankNotTwo, "rank-2 input required");
}

Integer to_integer_dim(const Rational& value, const char* what) {
    if (!is_integral(value)) fail(ErrCode::NonIntegralInput, what);
    if (value < 0) fail(ErrCode::NegativeDimension, what);
    return value.get_num();
}

}  // namespace

MukaiVector wedge2_mukai(const MukaiVector& v) {
    ensure_rank_two(v);
    const Rational lsq = square(v.l);
    return {Integer(1), v.l, lsq / 2 + 1};
}

MukaiVector sym2_mukai(const MukaiVector& v) {
    ensure_rank_two(v);
    const Rational lsq = square(v.l);
    return {Integer(3), Rational(3) * v.l, 4 * v.s - 8 + lsq / 2 + 3};
}

ExtDims ext_dims_G(const ExtTable& table) {
    ExtDims out;
    out.simple = table.hom12 * table.hom21 == 0;
    out.ext1 = table.ext1_11 + table.ext1_22 + (table.hom12 + table.hom21) * table.ext1_12;
    if (table.hom12 == 0 && table.hom21 == 0)
        out.ext2 = 2 + table.ext1_12 * table.ext1_12 + table.ext1_11 * table.ext1_22;
    return out;
}

ExtTable ext_table_from_vectors(const MukaiVector& v1, const MukaiVector& v2,
                                const StabilityAssumptions& assume) {
    const auto cls = classify_pair(v1, v2);
    if (cls.kind == PairClassification::Kind::Invalid)
        fail(ErrCode::DegenerateInput, cls.reason, "pair is not admissible");
    if (assume.hom12 < 0 || assume.hom21 < 0 || assume.hom12 > 1 || assume.hom21 > 1)
        fail(ErrCode::UnsupportedAssumption, "hom_range",
             "asserted Hom dimensions must be 0 or 1");
    if (v1 == v2) {
        if (assume.hom12 != assume.hom21)
            fail(ErrCode::UnsupportedAssumption, "hom_symmetry",
                 "equal vectors need hom12 = hom21");
    } else if (assume.hom12 != 0 || assume.hom21 != 0) {
        fail(ErrCode::UnsupportedAssumption, "hom_vanishing",
             "distinct stable sheaves admit no nonzero Hom in either direction");
    }

    ExtTable table;
    table.hom12 = assume.hom12;
    table.hom21 = assume.hom21;
    table.ext1_11 = to_integer_dim(mukai_square(v1) + 2, "ext1(E1,E1)");
    table.ext1_22 = to_integer_dim(mukai_square(v2) + 2, "ext1(E2,E2)");
    table.ext1_12 = to_integer_dim(mukai_pairing(v1, v2) + Rational(assume.hom12) +
                                       Rational(assume.hom21),
                                   "ext1(E1,E2)");
    return table;
}

std::string format_mukai(const MukaiVector& v) {
    return "(" + to_string(v.r) + ", " + format_vector(v.l) + ", " + to_string(v.s) + ")";
}

}  // namespace hkmod
