#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hkmod/rational.hpp"

namespace hkmod {

// Integral/rational quadratic lattice given by a symmetric Gram matrix with a
// labeled basis. Immutable after construction. Vectors share ownership of
// their lattice; binary operations accept two vectors when the lattices are
// pointer-identical or structurally equal (same Gram).
struct QuadLattice {
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Rational>> gram;

    int rank() const { return static_cast<int>(gram.size()); }
};

using LatticePtr = std::shared_ptr<const QuadLattice>;

// Validates symmetry, squareness, rank >= 1, label count.
LatticePtr make_lattice(std::vector<std::string> labels,
                        std::vector<std::vector<Rational>> gram);

bool same_lattice(const QuadLattice& a, const QuadLattice& b);

struct LatticeVector {
    LatticePtr lattice;
    std::vector<Rational> coords;

    bool is_zero() const;
    bool is_integral() const;
};

LatticeVector make_vector(LatticePtr lattice, std::vector<Rational> coords);
LatticeVector basis_vector(LatticePtr lattice, int index);
LatticeVector zero_vector(LatticePtr lattice);

LatticeVector operator+(const LatticeVector& v, const LatticeVector& w);
LatticeVector operator-(const LatticeVector& v, const LatticeVector& w);
LatticeVector operator*(const Rational& k, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& v);
bool operator==(const LatticeVector& v, const LatticeVector& w);

// v^T * gram * w; symmetric, bilinear over Rational scalars.
Rational pairing(const LatticeVector& v, const LatticeVector& w);
Rational square(const LatticeVector& v);

// gcd of the integer coordinates; requires an integral nonzero vector.
Integer content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

Rational gram_determinant(const QuadLattice& lattice);

// "3D-2C" style display using the basis labels; "0" for the zero vector.
std::string format_vector(const LatticeVector& v);

}  // namespace hkmod
