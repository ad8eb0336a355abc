#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubezero/subspace.hpp"

namespace cubezero {

// Commutative ring F x V x W with multiplication
//   (l1,v1,w1)(l2,v2,w2) = (l1*l2, l1*v2+l2*v1, l1*w2+l2*w1+beta(v1,v2))
// for a symmetric bilinear beta: V x V -> W. The maximal ideal is
// m = 0 x V x W and m^3 = 0. Ideal data lives in the coordinate space of m,
// V coordinates first, then W.
class TripleRing {
public:
    TripleRing(const Field& f, std::size_t dim_v, std::size_t dim_w);

    const Field& field() const { return field_; }
    std::size_t dim_v() const { return dim_v_; }
    std::size_t dim_w() const { return dim_w_; }
    std::size_t m_dim() const { return dim_v_ + dim_w_; }

    // Writes both (i,j) and (j,i), so the symmetry invariant holds by
    // construction.
    void set_beta(std::size_t i, std::size_t j, const Vec& w_coords);
    const Scalar& beta(std::size_t i, std::size_t j, std::size_t k) const;
    Vec beta_vec(std::size_t i, std::size_t j) const;
    // Bilinear extension to arbitrary V-coordinate tuples.
    Vec beta_apply(const Vec& v1, const Vec& v2) const;
    bool beta_is_zero() const;

    bool operator==(const TripleRing& o) const;
    bool operator!=(const TripleRing& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t dim_v_, dim_w_;
    std::vector<Scalar> beta_;  // [(i*dimV + j)*dimW + k]
};

struct RingElement {
    Scalar lambda;
    Vec v;
    Vec w;

    bool operator==(const RingElement& o) const {
        return lambda == o.lambda && v == o.v && w == o.w;
    }
};

RingElement ring_zero(const TripleRing& s);
RingElement ring_one(const TripleRing& s);
RingElement make_element(const TripleRing& s, Scalar lambda, Vec v, Vec w);
RingElement add_elements(const TripleRing& s, const RingElement& a, const RingElement& b);
RingElement scale_element(const TripleRing& s, const Scalar& c, const RingElement& a);
RingElement multiply(const TripleRing& s, const RingElement& a, const RingElement& b);

// (v,w)-coordinates of a non-unit element; throws if lambda != 0.
Vec m_coords(const TripleRing& s, const RingElement& a);
RingElement from_m_coords(const TripleRing& s, const Vec& coords);

// Closure test: u is an ideal iff multiplying each generator by each v_i
// stays inside u. Unit multiples only rescale, so this suffices.
bool is_ideal(const TripleRing& s, const SubspaceBasis& u);

// An ideal of the triple ring. Proper ideals are subspaces of m; the whole
// ring is a separate flag value since it is the only ideal containing a unit.
class Ideal {
public:
    static Ideal whole(const TripleRing& s);
    static Ideal zero(const TripleRing& s);
    static Ideal maximal(const TripleRing& s);
    // Validates the closure invariant; throws std::invalid_argument otherwise.
    static Ideal from_subspace(const TripleRing& s, const SubspaceBasis& u);
    // Smallest ideal containing the given m-coordinate vectors.
    static Ideal generated_by(const TripleRing& s, const std::vector<Vec>& gens);

    bool is_whole() const { return whole_; }
    // Subspace of m; invalid for the whole ring.
    const SubspaceBasis& space() const;
    std::size_t dim() const { return space().dim(); }
    bool contains(const Vec& coords) const;

    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    bool operator<(const Ideal& o) const;

    std::string to_string() const;

private:
    Ideal(bool whole, SubspaceBasis space) : whole_(whole), space_(std::move(space)) {}

    bool whole_;
    SubspaceBasis space_;
};

// Annihilator of m: 0 x Vperp x W where Vperp = {a : beta(V,a) = 0}.
Ideal socle(const TripleRing& s);

// Square of the maximal ideal: 0 x 0 x Im(beta).
Ideal radical_square(const TripleRing& s);

// Largest ideal L with K*L inside I. Returns the whole ring exactly when
// K lies inside I.
Ideal colon(const TripleRing& s, const Ideal& i, const Ideal& k);

// R/I has simple essential socle: dim((I:m)/I) = 1, or I = m.
bool is_subdirectly_irreducible(const TripleRing& s, const Ideal& i);

// All composition factors are F, so length of R/I is its F-dimension.
std::size_t composition_length(const TripleRing& s, const Ideal& i);

// Linear map socle -> F, stored against the canonical socle basis.
class Functional {
public:
    // Throws if domain differs from socle(s) or sizes mismatch.
    Functional(const TripleRing& s, const SubspaceBasis& domain, Vec coeffs);

    const SubspaceBasis& domain() const { return domain_; }
    const Vec& coeffs() const { return coeffs_; }
    bool is_zero() const;

    // Value on a member of the socle, given by m-coordinates.
    Scalar eval(const Vec& socle_member) const;

private:
    SubspaceBasis domain_;
    Vec coeffs_;
};

// V_f = {a in m : f(m*a) = 0}; kernel of v -> (f(beta(v_i, v)))_i joined
// with all of W. Contains the socle for every f.
Ideal v_f_subspace(const TripleRing& s, const Functional& f);

}  // namespace cubezero
