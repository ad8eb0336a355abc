#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "cubezero/presented_algebra.hpp"
#include "cubezero/triple_ring.hpp"

namespace cubezero {

// Brute-force verification of the structural lemmas behind the decision
// procedure, by enumerating every ideal of small finite triple rings. All
// randomness is seeded and the seed is echoed in the report notes.

// All subspaces of m closed under the ring product, each exactly once.
// Throws over Q, and when dim m exceeds the per-field enumeration bound
// (6 over GF(2), 4 over GF(3), 3 for larger primes).
std::vector<Ideal> enumerate_ideals(const TripleRing& s);

struct Report {
    std::string lemma;
    std::size_t rings = 0;
    std::size_t cases = 0;
    std::vector<std::string> failure_lines;
    std::vector<std::string> notes;

    std::size_t failures() const { return failure_lines.size(); }
    bool ok() const { return failure_lines.empty(); }
    std::string summary() const;     // lemma=<name> rings=<n> cases=<m> failures=<k>
    void merge(const Report& other); // throws std::invalid_argument on lemma mismatch
};

// For every subdirectly irreducible ideal I not containing the socle, the
// functional vanishing on Soc cap I with value 1 on a complement generator
// satisfies Soc + I = V_f; and conversely every nonzero socle functional
// recovers its maximal ideals, which are SI with kernel Soc cap I and
// V_f = Soc + I.
Report verify_correspondence(const TripleRing& s);

// The chain I + m^n is decreasing and intersects to I (m^3 = 0 forces
// stabilization at n = 3, asserted literally).
Report verify_krull(const TripleRing& s);

// Soc(R/I) = (I:m)/I and (I:m^2) = ((I:m):m) as subspaces, plus the length
// ladder: iterating I -> (I:m) strictly climbs to the whole ring.
Report verify_colon_socle(const TripleRing& s);

// With beta = 0, every subdirectly irreducible ideal K != m has quotient
// length exactly 2, and K = m has length 1. Throws when beta != 0.
Report verify_squarezero_length(const TripleRing& s);

// Random functionals on the trivial extension F x V: the largest ideal
// inside ker f, found by subspace enumeration, has codimension <= 2.
Report verify_finite_dual_trivext(std::size_t dim_v, const Field& f,
                                  std::size_t trials, std::uint64_t seed);

// check_gr_equivalence wrapped in the common report format.
Report verify_compare_vf(const PresentedAlgebra& a);

// Every triple ring over GF(2) with the given dimension ranges and all
// symmetric beta tables, enumerated entry by entry.
std::vector<TripleRing> all_symmetric_gf2_rings(std::size_t max_dim_v, std::size_t max_dim_w);

// Seeded random triple rings over GF(3) with dimV + dimW <= 3.
std::vector<TripleRing> sample_gf3_rings(std::size_t count, std::uint64_t seed);

// Every valid presented algebra of the given dimension over a finite field,
// by sweeping all structure constants with zero unit coordinate and keeping
// those that validate. Throws when the sweep would exceed 2^16 candidates.
std::vector<PresentedAlgebra> all_valid_presented(const Field& f, std::size_t dim);

// The graded algebra of a triple ring, presented on the basis {1, v.., w..}.
PresentedAlgebra algebra_from_triple(const TripleRing& s);

// The same algebra rewritten on a seeded random invertible basis of m.
PresentedAlgebra reshuffle_basis(const PresentedAlgebra& a, std::uint64_t seed);

}  // namespace cubezero
