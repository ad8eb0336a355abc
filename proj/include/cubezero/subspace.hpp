#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubezero/matrix.hpp"

namespace cubezero {

// A linear subspace of F^n in canonical form: the basis rows are the reduced
// row echelon form of any generating set, with zero rows dropped. Equality of
// subspaces is therefore entrywise equality of the stored bases.
class SubspaceBasis {
public:
    static SubspaceBasis zero(const Field& f, std::size_t ambient);
    static SubspaceBasis full(const Field& f, std::size_t ambient);
    static SubspaceBasis from_generators(const Matrix& generators);
    static SubspaceBasis from_generators(const Field& f, const std::vector<Vec>& gens,
                                         std::size_t ambient);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const SubspaceBasis& other) const;
    // Remainder of v after reduction against the basis; zero iff v is a member.
    Vec reduce(const Vec& v) const;
    // Coefficients of a member vector against the stored basis (pivot reads).
    // Throws std::invalid_argument if v is not a member.
    Vec coordinates(const Vec& v) const;

    // Unit vectors at the non-pivot coordinates: coset representatives that
    // complete the basis to the ambient space.
    std::vector<Vec> complement_representatives() const;
    // Class of v modulo this subspace, written in the complement representatives.
    Vec quotient_coordinates(const Vec& v) const;

    bool operator==(const SubspaceBasis& o) const;
    bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }
    // Lexicographic on (ambient, dim, entries); total order for use in sets.
    bool operator<(const SubspaceBasis& o) const;

    std::string to_string() const;

private:
    SubspaceBasis(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// Solution space of m * x = 0; dim = cols - rank.
SubspaceBasis kernel(const Matrix& m);

// Every subspace of GF(p)^n exactly once, as canonical RREF bases, optionally
// restricted to a fixed dimension. Deterministic order. Throws over Q or when
// n exceeds the bound (default 6).
std::vector<SubspaceBasis> enumerate_subspaces(const Field& f, std::size_t n,
                                               std::optional<std::size_t> fixed_dim = std::nullopt,
                                               std::size_t bound = 6);

}  // namespace cubezero
