#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkmod/lattice.hpp"
#include "hkmod/rational.hpp"

namespace hkmod {

// K3 surface whose Neron-Severi group has the fixed rank-2 shape
//   NS(S) = Z[D] + Z[C],  D.D = 2*m0,  D.C = d0,  C.C = 0
// with m0, d0 positive. Every pair (m0, d0) is realized by some surface, so
// no further validation applies.
struct K3Surface {
    long m0 = 0;
    long d0 = 0;
    LatticePtr ns;
};

K3Surface make_k3(long m0, long d0);

LatticeVector class_D(const K3Surface& s);
LatticeVector class_C(const K3Surface& s);
LatticeVector ns_class(const K3Surface& s, const Rational& x, const Rational& y);

// Triple (r, l, s) with l in NS(S). The pairing convention is
//   <(r,l,s), (r',l',s')> = l.l' - r*s' - r'*s
// which is the unique one giving square -2 to (r1, D, (m0+1)/r1).
struct MukaiVector {
    Integer r;
    LatticeVector l;
    Rational s;
};

MukaiVector make_mukai(const Integer& r, const LatticeVector& l, const Rational& s);
// (0, 0, 1): pairs to -r with every (r, l, s).
MukaiVector point_class(const K3Surface& s);

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator*(const Integer& k, const MukaiVector& v);
bool operator==(const MukaiVector& v, const MukaiVector& w);

Rational mukai_pairing(const MukaiVector& v, const MukaiVector& w);
Rational mukai_square(const MukaiVector& v);

// r^2 * (v^2 + 2 r^2) / 4; requires r >= 1.
Rational a_of_v(const MukaiVector& v);

// v^2 + 2; requires v^2 >= -2.
Integer moduli_dimension(const MukaiVector& v);

// Admissible pairs for the induced rank-2r1r2 sheaf on S^[2]. Checked
// conditions, in order:
//   equal_slopes:    r2 * l1 == r1 * l2
//   square_balance:  r2^2 * v1^2 + r1^2 * v2^2 == 0
// and then the square values decide the kind:
//   IsotropicProportional  v1^2 = v2^2 = 0 and the full triples proportional
//   SphericalPlus          after ordering so the first square is -2, the
//                          second is positive, r2 = a*r1 and l2 = a*l1 with
//                          a a positive integer (stored; `swapped` says the
//                          input order was reversed)
//   Invalid                anything else; `reason` names the failed condition
struct PairClassification {
    enum class Kind { IsotropicProportional, SphericalPlus, Invalid };
    Kind kind = Kind::Invalid;
    Integer a;
    bool swapped = false;
    std::string reason;
};

PairClassification classify_pair(const MukaiVector& v1, const MukaiVector& v2);

// Rank-2 input (2, l, s); ch(F (x) F) = ch(F)^2 split into the symmetric and
// alternating parts:
//   wedge2: (1, l, l^2/2 + 1)
//   sym2:   (3, 3l, 4s - 8 + l^2/2 + 3)
MukaiVector wedge2_mukai(const MukaiVector& v);
MukaiVector sym2_mukai(const MukaiVector& v);

// Hom/Ext^1 dimensions over the K3 for an ordered pair (E1, E2); the table
// feeds the dimension formulas for the induced sheaf on S^[2].
struct ExtTable {
    Integer hom12;
    Integer hom21;
    Integer ext1_11;
    Integer ext1_22;
    Integer ext1_12;
};

// simple  <=>  hom12 * hom21 = 0
// ext1 = ext1_11 + ext1_22 + (hom12 + hom21) * ext1_12
// ext2 = 2 + ext1_12^2 + ext1_11 * ext1_22, defined only when both Homs
// vanish (nullopt otherwise).
struct ExtDims {
    bool simple = false;
    Integer ext1;
    std::optional<Integer> ext2;
};

ExtDims ext_dims_G(const ExtTable& table);

// Asserted Hom dimensions between E1 and E2 (0 = the vanishing holds). The
// remaining entries follow from chi bookkeeping: chi(Ei, Ej) = -<vi, vj> and
// Ext^2(E1,E2) is dual to Hom(E2,E1), so
//   ext1_ii = vi^2 + 2,   ext1_12 = <v1,v2> + hom12 + hom21.
struct StabilityAssumptions {
    Integer hom12 = 0;
    Integer hom21 = 0;
};

ExtTable ext_table_from_vectors(const MukaiVector& v1, const MukaiVector& v2,
                                const StabilityAssumptions& assume = {});

// "(2, 2D, 0)" style display.
std::string format_mukai(const MukaiVector& v);

}  // namespace hkmod
