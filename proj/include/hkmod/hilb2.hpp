#pragma once

#include <string>
#include <vector>

#include "hkmod/mukai.hpp"

namespace hkmod {

// Degree-2 class on the Hilbert square: mu-part in NS(S) plus a rational
// multiple of the half-diagonal class delta. The quadratic form is
//   q(mu(a) + x*delta, mu(b) + y*delta) = a.b - 2xy,
// in particular q(delta) = -2.
struct Hilb2Class {
    LatticeVector mu;
    Rational d_coef;

    bool is_zero() const;
    bool is_integral() const;
};

Hilb2Class mu_class(const LatticeVector& l);
Hilb2Class delta_class(const K3Surface& s);
Hilb2Class zero_hilb2(const K3Surface& s);

Hilb2Class operator+(const Hilb2Class& x, const Hilb2Class& y);
Hilb2Class operator-(const Hilb2Class& x, const Hilb2Class& y);
Hilb2Class operator*(const Rational& k, const Hilb2Class& x);
bool operator==(const Hilb2Class& x, const Hilb2Class& y);

Rational bbf_pairing(const Hilb2Class& x, const Hilb2Class& y);
Rational bbf_square(const Hilb2Class& x);

// gcd of integer coordinates in the basis (mu(D), mu(C), delta).
Integer hilb2_content(const Hilb2Class& x);
Hilb2Class primitive_part(const Hilb2Class& x);

// Positive generator of q(x, -) over the integral degree-2 lattice
// mu(H^2(S;Z)) + Z*delta; since H^2(S;Z) is unimodular this is
//   gcd(content(mu-part), 2*|delta coefficient|).
Integer divisibility(const Hilb2Class& x);

// Rank, first Chern class, and discriminant as a rational multiple of the
// second Chern class of the Hilbert square.
struct MockMukai {
    Integer r;
    Hilb2Class c1;
    Rational disc_coef;
};

bool operator==(const MockMukai& v, const MockMukai& w);

// Element r*alpha + lambda + s*beta of the extended rational lattice
// (alpha, beta isotropic, b(alpha,beta) = -1).
struct ExtendedMukai {
    Integer r;
    Hilb2Class lambda;
    Rational s;
};

// Named constants of the Hilbert-square cohomology ring used in the
// degree-8 assembly below. q2 is the degree-4 class with c2(S^[2]) = 30*q2,
// int q2 * x^2 = q(x), and q4 the degree-8 class with int q4 = 1;
// sqrt(Td(S^[2])) = 1 + (5/4) q2 + (25/32) q4; int c2(S^[2])^2 = 828.
extern const Rational kSqrtTdDeg4Coef;    // 5/4
extern const Rational kSqrtTdDeg8Coef;    // 25/32
extern const Integer kC2PerQ2;            // 30
extern const Integer kC2SquareIntegral;   // 828

// Induced sheaf on the Hilbert square for an admissible pair:
//   rank 2*r1*r2,  c1 = r2*mu(l1) + r1*mu(l2) - r1*r2*delta,
//   disc_coef = r1^2 r2^2 / 3.
// Requires classify_pair(v1, v2) not Invalid.
MockMukai build_w_of_G(const MukaiVector& v1, const MukaiVector& v2);

// d = 30 * disc_coef (the n = 2 normalization), a = r^2 d / 4.
struct ModularConstants {
    Rational d;
    Rational a;
};

ModularConstants modular_constants(const MockMukai& w);

// n-factor analogue; checks equal_slopes pairwise and square_balance
// (sum of vi^2 / ri^2 = 0). With rbar the product of the ranks:
//   rank = n! rbar, disc_coef = (n!)^2 rbar^2 / 12, d = C(c2) * disc_coef,
//   a = rank^2 d / (4 c_X),
// and c1 = (n-1)! rbar [ sum mu(li/ri) - (n/2) delta_n ] reported through
// its mu-coefficients and delta-coefficient.
struct GeneralNInvariants {
    Integer rank;
    std::vector<Rational> mu_coefs;
    Rational delta_coef;
    Rational disc_coef;
    Rational d;
    Rational a;
};

GeneralNInvariants general_n_invariants(const std::vector<MukaiVector>& vs, unsigned n);
GeneralNInvariants general_n_invariants(const std::vector<MukaiVector>& vs, unsigned n,
                                        const Rational& c_x, const Rational& c_c2);

// Unique s with disc_coef = r^2/12 - r*s/15 + q(c1)/30; requires r >= 1.
Rational extended_s(const MockMukai& w);
ExtendedMukai extended_vector(const MockMukai& w);

// All closed-form invariants of the induced sheaf for an admissible pair
// with positive ranks, lambda = l1/r1 and d = lambda^2:
//   s_ext        = rbar(2d-1)/2          (must agree with extended_s)
//   ch3_coef     = (d-3)/2               (coefficient on the dual of c1)
//   ch4_integral = s1 s2 - rbar(3d-4)/2
//   v4_integral  = degree-8 assembly via the named constants above
//                  (collapses to s1 s2 - rbar(4d-1)/16)
//   atomic       = the three-route criterion below
// Requires s1/r1 + s2/r2 = d (condition s_ratio_sum).
struct GInvariants {
    Integer rank;
    Hilb2Class c1;
    Rational disc_coef;
    Rational d;
    Rational a_const;
    Rational s_ext;
    Rational ch3_coef;
    Rational ch4_integral;
    Rational v4_integral;
    bool atomic = false;
};

GInvariants g_invariants(const MukaiVector& v1, const MukaiVector& v2);

// The three equivalent tests, all computed and required to agree:
//   product:  s1 s2 == rbar d^2 / 4
//   ratio:    s1/r1 == s2/r2
//   squares:  v1^2 == 0 and v2^2 == 0
struct AtomicityRoutes {
    bool product_route = false;
    bool ratio_route = false;
    bool square_route = false;
    Rational s1s2;
    Rational rbar_d2_over_4;
    Rational s1_over_r1;
    Rational s2_over_r2;
    Rational v1_square;
    Rational v2_square;

    bool agree() const {
        return product_route == ratio_route && ratio_route == square_route;
    }
};

AtomicityRoutes atomicity_routes(const MukaiVector& v1, const MukaiVector& v2);
bool is_atomic(const MukaiVector& v1, const MukaiVector& v2);

// "6μ(D)-3δ" / "(6, 6μ(D)-3δ, 3·c2)" style displays.
std::string format_hilb2(const Hilb2Class& x);
std::string format_mock(const MockMukai& w);

}  // namespace hkmod
