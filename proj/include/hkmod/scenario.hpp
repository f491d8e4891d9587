#pragma once

#include <string>
#include <vector>

#include "hkmod/cone.hpp"
#include "hkmod/hilb2.hpp"
#include "hkmod/mukai.hpp"

namespace hkmod {

// Validated integer tuple driving the elliptic-surface construction.
// Hard conditions: all parameters positive, r1 | 2a, r1 | (m0+1),
// gcd(r1, d0) = 1, and b > 0 (b defaults to 2a/r1, which is integral by the
// first divisibility). Advisory flags, reported but not enforced:
// a >= 2, d0 >= 2 r1, b r1 >= 2a, 4 m0 > r1^2.
struct ScenarioParams {
    long r1 = 0;
    long a = 0;
    long m0 = 0;
    long d0 = 0;
    long b = 0;
    bool b_explicit = false;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> hard;
    std::vector<ValidationCheck> advisory;

    bool hard_ok() const;
    bool all_ok() const;
    std::string first_hard_failure() const;
};

ValidationReport validate_params(const ScenarioParams& p);

// Everything derived from a hard-valid tuple:
//   v1 = (r1, D, (m0+1)/r1)            square -2
//   v2 = a v1 - b (0,0,1)              square 2abr1 - 2a^2
//   w0 = a r1 (2r1, 2 mu(D) - r1 delta, a r1^3 / 3 * c2)
//   i  = 2 if r1 even else 1
//   g  = (1/i)(2 mu(D) - r1 delta),  f = mu(C)
//   lambda_cone: basis (f, g) with c = 2 d0 / i, G = (8 m0 - 2 r1^2)/i^2
// Construction asserts: v1^2 = -2; v2^2 = 2abr1 - 2a^2; the cone Gram is
// integral; and when b r1 = 2a also <v1,v2> = 0 and w0 = build_w_of_G(v1,v2).
struct Scenario {
    ScenarioParams params;
    K3Surface surface;
    MukaiVector v1;
    MukaiVector v2;
    MockMukai w0;
    int i = 0;
    Hilb2Class g;
    Hilb2Class f;
    RankTwoCone lambda_cone;
};

Scenario build_scenario(const ScenarioParams& p);
ScenarioParams make_params(long r1, long a, long m0, long d0);
ScenarioParams make_params(long r1, long a, long m0, long d0, long b);

// Exact q(g) and div(g) by the parity branch
//   r1 even: q = 2 m0 - r1^2/2, div = 1
//   r1 odd:  q = 8 m0 - 2 r1^2, div = 2
// cross-checked against bbf_square(g) and divisibility(g).
struct GSquareDiv {
    Rational q;
    Integer div;
};

GSquareDiv g_square_and_divisibility(const Scenario& s);

// The (r1 mod 4) congruence table for (div(g), q(g)):
//   r1 = 0 (4): div 1, q = -2        (mod 2 r1)
//   r1 = 1 (4): div 2, q = -2 r1 - 8 (mod 8 r1)
//   r1 = 2 (4): div 1, q = r1 - 2    (mod 2 r1)
//   r1 = 3 (4): div 2, q = 2 r1 - 8  (mod 8 r1)
struct CongruenceDetail {
    int r1_mod_4 = 0;
    Integer expected_div;
    Integer modulus;
    Integer residue_target;
    Rational q;
    Integer div;
    bool div_ok = false;
    bool q_ok = false;

    bool pass() const { return div_ok && q_ok; }
};

CongruenceDetail congruence_detail(const Scenario& s);
bool congruence_check(const Scenario& s);

// Exhaustive enumeration of the parameter box: every tuple passing hard AND
// advisory validation (with default b) and the congruence table, together
// with div(g), q(g) and the moduli dimension 2a^2 + 2. Lexicographic order;
// `threads` > 1 splits the box, output order unaffected.
struct ScanRanges {
    long r1max = 0;
    long amax = 0;
    long m0max = 0;
    long d0max = 0;
};

struct ScanRow {
    ScenarioParams params;
    Integer div;
    Rational q_g;
    Integer dim;
};

std::vector<ScanRow> theorem_scan(const ScanRanges& ranges, unsigned threads = 1);

// Largest possible negative square in the lambda cone's lattice:
// every integral gamma there with q(gamma) < 0 has
//   q(gamma) <= -4 d0^2 / (i^2 + 8 m0 - 2 r1^2).
// Requires 4 m0 > r1^2 (so the denominator is positive and the positive
// cone equals the ample cone at the boundary).
Rational negative_square_ceiling(const Scenario& s);

// Minimal d0 with 4 d0^2 / (i^2 + 8 m0 - 2 r1^2) > a(w0): above it every
// negative square in the cone lattice lies strictly below -a(w0) and the
// positive component is a single chamber.
Integer d0_threshold(long r1, long a, long m0);

// Class m Sigma + n Gamma on the relative-Jacobian K3 (Sigma section,
// Gamma fiber; gram [[-2, 1], [1, 0]]). For the determinant-curve linear
// system of v2: m = a, n = b r1.
struct JacobianNS {
    LatticePtr lattice;
};

JacobianNS make_jacobian_ns();

struct DecompositionClass {
    Integer m;
    Integer n;
};

DecompositionClass decomposition_class(const Scenario& s);

// dim |m Sigma + n Gamma| = 1 + mn - m^2 for n >= 2m (big and nef);
// self-intersection 2mn - 2m^2 and the Riemann-Roch form 1 + self/2 are
// computed independently through the Jacobian lattice and must agree.
struct LinearSystemDim {
    Integer dim;
    Integer self_intersection;
};

LinearSystemDim linear_system_dim(const DecompositionClass& cls);

// (2 + v2^2)/2 = 1 + a b r1 - a^2: half the moduli dimension.
Integer lagrangian_base_dim(long a, long b, long r1);
Integer lagrangian_base_dim(const Scenario& s);

// What is known about a general member of |m Sigma + n Gamma|:
//   n >= 2m >= 2 and m >= 2  ->  IntegralSmooth
//   n >= 2m >= 2 and m = 1   ->  HorizontalIntegral (horizontal part is the
//                                section; vertical part a sum of fibers)
//   otherwise                ->  NoClaim
enum class GeneralMemberKind { HorizontalIntegral, IntegralSmooth, NoClaim };

GeneralMemberKind general_member_kind(const Integer& m, const Integer& n);
const char* general_member_kind_name(GeneralMemberKind kind);

// The fixed reference tuple (1, 3, 1, 11): rank-6 induced sheaf
// 3 (2, h, c2) with q(h) = 6 and div(h) = 2, dimensions (ext1, ext2) =
// (20, 2), and the rank-2 tensor identities v(F) = (2, D, 1),
// wedge2 = (1, D, 2), sym2 = (3, 3D, 0). Gates: d0 odd, d0 > 3(2 m0 + 1).
struct FatighentiReport {
    Scenario scenario;
    MockMukai w;
    Hilb2Class h;
    Rational q_h;
    Integer div_h;
    ExtTable table;
    ExtDims dims;
    MukaiVector v_F;
    MukaiVector v_wedge2;
    MukaiVector v_sym2;
    bool d0_odd = false;
    long d0_gate = 0;
    bool d0_above_gate = false;
};

FatighentiReport fatighenti_report();
// Same construction with another d0 (still odd-rank-1 reference data); only
// the gate fields change. Used to probe the gate boundary.
FatighentiReport fatighenti_report(long d0);

}  // namespace hkmod
