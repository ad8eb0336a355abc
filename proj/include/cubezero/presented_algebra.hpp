#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubezero/triple_ring.hpp"

namespace cubezero {

// Finite-dimensional commutative algebra given by structure constants on a
// basis e_0..e_{dim-1}, with e_0 the unit and m = span{e_1,..} the designated
// maximal ideal. Elements are coordinate vectors of length dim.
class PresentedAlgebra {
public:
    PresentedAlgebra(const Field& f, std::size_t dim);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::size_t m_basis_count() const { return dim_ == 0 ? 0 : dim_ - 1; }

    // Writes e_i * e_j = coords and the mirrored product, so commutativity
    // holds by construction. Unit products are prefilled by the constructor
    // but may be overwritten to build invalid algebras for diagnostics.
    void set_product(std::size_t i, std::size_t j, const Vec& coords);
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;
    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec multiply(const Vec& a, const Vec& b) const;

    bool operator==(const PresentedAlgebra& o) const;
    bool operator!=(const PresentedAlgebra& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Scalar> c_;  // [(i*dim + j)*dim + k]
};

struct ValidationReport {
    bool ok;
    std::string diagnostic;  // empty when ok, else names the first violation
};

// Checks commutativity, the unit law, closure and cube-nilpotency of m, and
// associativity on all basis triples.
ValidationReport validate(const PresentedAlgebra& a);

// The idealization F x V: dim = 1 + dim_v, all products inside m vanish.
PresentedAlgebra trivial_extension(const Field& f, std::size_t dim_v);

// Span of all k-fold products of the m-basis, as a subspace of F^dim.
SubspaceBasis m_power(const PresentedAlgebra& a, std::size_t k);

// {x in m : x*m = 0}, as a subspace of F^dim.
SubspaceBasis algebra_socle(const PresentedAlgebra& a);

// Closure test for subspaces of F^dim sitting inside m.
bool is_algebra_ideal(const PresentedAlgebra& a, const SubspaceBasis& u);

// The associated graded ring F x m/m^2 x m^2 together with the coordinate
// data needed to move between the two presentations: v_cols[i] is the basis
// column of the i-th coset representative of m/m^2, and m_square is the RREF
// basis of m^2 used as the W coordinate system.
struct GradedRing {
    TripleRing ring;
    std::vector<std::size_t> v_cols;
    SubspaceBasis m_square;
};

// Throws std::invalid_argument when validate(a) fails.
GradedRing gr(const PresentedAlgebra& a);

// Image of a member of m in the coordinate space of gr(a)'s maximal ideal:
// the class modulo m^2 first, then the m^2-part written in the W basis.
Vec graded_class(const PresentedAlgebra& a, const GradedRing& g, const Vec& x);

// 0 x (I+m^2)/m^2 x (I cap m^2). Throws when i is not an ideal inside m.
Ideal gr_ideal(const PresentedAlgebra& a, const GradedRing& g, const SubspaceBasis& i);

}  // namespace cubezero
