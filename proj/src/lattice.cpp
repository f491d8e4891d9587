#include "hkmod/lattice.hpp"

#include <utility>

#include "format_terms.hpp"
#include "hkmod/errors.hpp"

namespace hkmod {

namespace {

void ensure_compatible(const LatticeVector& v, const LatticeVector& w) {
    if (v.lattice == w.lattice) return;
    if (v.lattice && w.lattice && same_lattice(*v.lattice, *w.lattice)) return;
    fail(ErrCode::LatticeMismatch, "vectors live in different lattices");
}

}  // namespace

LatticePtr make_lattice(std::vector<std::string> labels,
                        std::vector<std::vector<Rational>> gram) {
    const std::size_t n = gram.size();
    if (n == 0) fail(ErrCode::InvalidLattice, "empty Gram matrix");
    for (const auto& row : gram)
        if (row.size() != n) fail(ErrCode::InvalidLattice, "Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) fail(ErrCode::InvalidLattice, "Gram matrix is not symmetric");
    if (labels.size() != n) fail(ErrCode::InvalidLattice, "one basis label per row required");
    auto lattice = std::make_shared<QuadLattice>();
    lattice->basis_labels = std::move(labels);
    lattice->gram = std::move(gram);
    return lattice;
}

bool same_lattice(const QuadLattice& a, const QuadLattice& b) {
    return a.basis_labels == b.basis_labels && a.gram == b.gram;
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool LatticeVector::is_integral() const {
    for (const auto& c : coords)
        if (!hkmod::is_integral(c)) return false;
    return true;
}

LatticeVector make_vector(LatticePtr lattice, std::vector<Rational> coords) {
    if (!lattice) fail(ErrCode::InvalidLattice, "null lattice");
    if (static_cast<int>(coords.size()) != lattice->rank())
        fail(ErrCode::InvalidLattice, "coordinate count does not match the rank");
    return {std::move(lattice), std::move(coords)};
}

LatticeVector basis_vector(LatticePtr lattice, int index) {
    if (!lattice) fail(ErrCode::InvalidLattice, "null lattice");
    if (index < 0 || index >= lattice->rank())
        fail(ErrCode::InvalidLattice, "basis index out of range");
    std::vector<Rational> coords(lattice->rank(), Rational(0));
    coords[index] = 1;
    return {std::move(lattice), std::move(coords)};
}

LatticeVector zero_vector(LatticePtr lattice) {
    if (!lattice) fail(ErrCode::InvalidLattice, "null lattice");
    std::vector<Rational> coords(lattice->rank(), Rational(0));
    return {std::move(lattice), std::move(coords)};
}

LatticeVector operator+(const LatticeVector& v, const LatticeVector& w) {
    ensure_compatible(v, w);
    LatticeVector out = v;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += w.coords[i];
    return out;
}

LatticeVector operator-(const LatticeVector& v, const LatticeVector& w) {
    ensure_compatible(v, w);
    LatticeVector out = v;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= w.coords[i];
    return out;
}

LatticeVector operator*(const Rational& k, const LatticeVector& v) {
    LatticeVector out = v;
    for (auto& c : out.coords) c *= k;
    return out;
}

LatticeVector operator-(const LatticeVector& v) { return Rational(-1) * v; }

bool operator==(const LatticeVector& v, const LatticeVector& w) {
    if (v.lattice != w.lattice && !(v.lattice && w.lattice && same_lattice(*v.lattice, *w.lattice)))
        return false;
    return v.coords == w.coords;
}

Rational pairing(const LatticeVector& v, const LatticeVector& w) {
    ensure_compatible(v, w);
    const auto& gram = v.lattice->gram;
    Rational out = 0;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i] == 0) continue;
        for (std::size_t j = 0; j < w.coords.size(); ++j)
            out += v.coords[i] * gram[i][j] * w.coords[j];
    }
    return out;
}

Rational square(const LatticeVector& v) { return pairing(v, v); }

Integer content(const LatticeVector& v) {
    if (!v.is_integral()) fail(ErrCode::NonIntegralVector, "content needs integer coordinates");
    if (v.is_zero()) fail(ErrCode::ZeroVector, "content of the zero vector");
    Integer g = 0;
    for (const auto& c : v.coords) g = gcd_of(g, c.get_num());
    return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

Rational gram_determinant(const QuadLattice& lattice) {
    auto m = lattice.gram;
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

std::string format_vector(const LatticeVector& v) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        terms.emplace_back(v.coords[i], v.lattice->basis_labels[i]);
    return detail::format_terms(terms);
}

}  // namespace hkmod
