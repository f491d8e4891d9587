#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkmod/lattice.hpp"
#include "hkmod/rational.hpp"

namespace hkmod {

// Rank-2 hyperbolic lattice with basis (f, g), f isotropic:
//   gram = [[0, c], [c, G]],  c = q(f,g) > 0,  G = q(g).
// The positive component is the open cone { q(h) > 0, q(h,f) > 0 }; for
// h = u f + v g that means v > 0 and q(h) = v (2uc + vG) > 0.
struct RankTwoCone {
    LatticePtr lattice;
    Rational c;
    Rational G;
};

RankTwoCone make_cone(const Rational& c, const Rational& G);

LatticeVector cone_f(const RankTwoCone& cone);
LatticeVector cone_g(const RankTwoCone& cone);
LatticeVector cone_vector(const RankTwoCone& cone, const Rational& x, const Rational& y);

bool in_positive_component(const RankTwoCone& cone, const LatticeVector& h);

// Wall class lambda = x f + y g: primitive, integral, -a <= q(lambda) < 0.
// The sign is normalized so q(lambda, f) > 0, i.e. y >= 1 (y = 0 would force
// q(lambda) = 0, so every wall class pairs nonzero with f).
struct Wall {
    LatticeVector lambda;
    Rational q_value;
};

// r(F) c1(H) - r(H) c1(F); zero exactly when the normalized first Chern
// classes agree. Lives in whatever lattice the two classes live in.
struct SlopeDiscrepancy {
    LatticeVector lambda;
};

SlopeDiscrepancy slope_discrepancy(const Integer& r_h, const LatticeVector& c1_h,
                                   const Integer& r_f, const LatticeVector& c1_f);

// Sign of q(lambda, omega), which is the sign of mu_omega(H) - mu_omega(F);
// omega must lie in the positive component.
int slope_sign(const RankTwoCone& cone, const SlopeDiscrepancy& lambda,
               const LatticeVector& omega);

// Sign of q(lambda, f): the sign of the slope difference of the two
// restrictions to a general fiber.
int fiber_slope_sign(const RankTwoCone& cone, const SlopeDiscrepancy& lambda);

// Suitability of an integral positive h against every wall class lambda with
// -a <= q(lambda) < 0: the three sign conditions are
//   (1) q(lambda,h) > 0  =>  q(lambda,f) >= 0
//   (2) q(lambda,h) = 0  =>  q(lambda,f) =  0
//   (3) q(lambda,h) < 0  =>  q(lambda,f) <= 0.
// With the normalization q(lambda,f) > 0 a violation is exactly
// q(lambda,h) <= 0 (condition (2) when zero, condition (3) when negative).
//
// Termination: for h = u f + v g in the positive component and a candidate
// lambda = x f + y g with y >= 1,
//   q(lambda,h) <= 0  forces  q(lambda) <= -y^2 q(h) / v^2,
// so -a <= q(lambda) gives y^2 <= v^2 a / q(h). Beyond that exact bound
// every candidate pairs strictly positively with h and no violation exists.
// At each admissible y the x-window is -a <= 2xyc + y^2 G < 0, again finite.
struct SuitabilityReport {
    bool suitable = false;
    std::optional<Wall> witness;
    // "wall_through_h" (condition 2) or "sign_mismatch" (condition 3).
    std::string violated;
    Integer y_bound;
};

SuitabilityReport is_a_suitable(const Rational& a, const LatticeVector& h,
                                const RankTwoCone& cone);

// q(h) > a q(h,f)^2, which implies suitability (implication only).
bool suitif_sufficient(const Rational& a, const LatticeVector& h,
                       const RankTwoCone& cone);

// Minimal integer N with 2N > a q(h0, f); h0 + N f is then a-suitable.
Integer friedman_N(const Rational& a, const LatticeVector& h0, const RankTwoCone& cone);

// -q(h)/q(h,f)^2; every integral lambda with q(lambda,h) = 0 and
// q(lambda,f) != 0 has q(lambda) below this bound. Requires q(h) > 0 and
// q(h,f) != 0.
Rational stimakota_bound(const LatticeVector& h, const RankTwoCone& cone);

// Wall crossings of the segment h_t = t h0 + (1-t) h1 for t in (0, 1]:
// q(lambda, h_t) is linear in t, so lambda is crossed iff q(lambda,h0) = 0
// (t = 1) or the two endpoint pairings have opposite signs
// (t = B/(B - A) with A = q(lambda,h0), B = q(lambda,h1)).
// Sorted by t, ties by (y, x).
struct SegmentWall {
    Rational t;
    Wall wall;
};

std::vector<SegmentWall> walls_on_segment(const Rational& a, const LatticeVector& h0,
                                          const LatticeVector& h1, const RankTwoCone& cone);

// "g+1121f" style display for x f + y g (g-part first).
std::string format_cone_vector(const LatticeVector& v);

}  // namespace hkmod
