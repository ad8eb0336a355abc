#include "cubezero/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubezero {

SubspaceBasis SubspaceBasis::zero(const Field& f, std::size_t ambient) {
    return SubspaceBasis(ambient, Matrix(f, 0, ambient), {});
}

SubspaceBasis SubspaceBasis::full(const Field& f, std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
    return SubspaceBasis(ambient, Matrix::identity(f, ambient), std::move(pivots));
}

SubspaceBasis SubspaceBasis::from_generators(const Matrix& generators) {
    RrefResult r = rref(generators);
    Matrix basis(generators.field(), r.rank, generators.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) basis.at(i, j) = r.reduced.at(i, j);
    return SubspaceBasis(generators.cols(), std::move(basis), std::move(r.pivot_cols));
}

SubspaceBasis SubspaceBasis::from_generators(const Field& f, const std::vector<Vec>& gens,
                                             std::size_t ambient) {
    return from_generators(Matrix::from_rows(f, gens, ambient));
}

Vec SubspaceBasis::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        Scalar factor = c;  // pivot entry is 1
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) r[j] -= factor * basis_.at(i, j);
    }
    return r;
}

bool SubspaceBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Vec SubspaceBasis::coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("vector outside subspace");
    Vec c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

std::vector<Vec> SubspaceBasis::complement_representatives() const {
    std::vector<Vec> reps;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        reps.push_back(unit_vec(field(), ambient_, c));
    }
    return reps;
}

Vec SubspaceBasis::quotient_coordinates(const Vec& v) const {
    Vec r = reduce(v);
    Vec q;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        q.push_back(r[c]);
    }
    return q;
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool SubspaceBasis::operator<(const SubspaceBasis& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            const Scalar &a = basis_.at(i, j), &b = o.basis_.at(i, j);
            if (a != b) {
                if (a.field().is_finite()) return a.residue() < b.residue();
                return a.rational_value() < b.rational_value();
            }
        }
    return false;
}

std::string SubspaceBasis::to_string() const {
    std::ostringstream os;
    os << "span" << (dim() == 0 ? "{}" : basis_.to_string()) << " in F^" << ambient_;
    return os.str();
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw std::invalid_argument("ambient mismatch");
    Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j)
            stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return SubspaceBasis::from_generators(stacked);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw std::invalid_argument("ambient mismatch");
    // Zassenhaus: reduce [[A A],[B 0]]; rows whose left half vanished carry the
    // intersection in their right half.
    std::size_t n = a.ambient();
    Matrix block(a.field(), a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
    RrefResult r = rref(block);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] < n) continue;  // pivot in the left half
        Vec v;
        v.reserve(n);
        for (std::size_t j = 0; j < n; ++j) v.push_back(r.reduced.at(i, n + j));
        gens.push_back(std::move(v));
    }
    return SubspaceBasis::from_generators(a.field(), gens, n);
}

SubspaceBasis kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const Field& f = m.field();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(f, n);
        v[free_col] = Scalar::one(f);
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.reduced.at(i, free_col);
        gens.push_back(std::move(v));
    }
    return SubspaceBasis::from_generators(f, gens, n);
}

namespace {

// RREF profiles for dimension k: choose pivot columns, then fill every free
// position (right of its row's pivot, not in a pivot column) with all field
// values.
void enumerate_for_pivots(const Field& f, std::size_t n, const std::vector<std::size_t>& pivots,
                          std::vector<SubspaceBasis>& out) {
    std::size_t k = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free_pos.emplace_back(r, c);

    std::uint32_t p = f.modulus();
    Matrix base(f, k, n);
    for (std::size_t r = 0; r < k; ++r) base.at(r, pivots[r]) = Scalar::one(f);

    std::vector<std::uint32_t> digits(free_pos.size(), 0);
    while (true) {
        Matrix m = base;
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            m.at(free_pos[t].first, free_pos[t].second) =
                Scalar::from_int(f, static_cast<long>(digits[t]));
        out.push_back(SubspaceBasis::from_generators(m));  // already RREF; re-canonicalizing is cheap
        std::size_t t = 0;
        for (; t < digits.size(); ++t) {
            if (++digits[t] < p) break;
            digits[t] = 0;
        }
        if (t == digits.size()) break;
    }
}

void choose_pivots(const Field& f, std::size_t n, std::size_t k, std::size_t start,
                   std::vector<std::size_t>& pivots, std::vector<SubspaceBasis>& out) {
    if (pivots.size() == k) {
        enumerate_for_pivots(f, n, pivots, out);
        return;
    }
    for (std::size_t c = start; c + (k - pivots.size()) <= n; ++c) {
        pivots.push_back(c);
        choose_pivots(f, n, k, c + 1, pivots, out);
        pivots.pop_back();
    }
}

}  // namespace

std::vector<SubspaceBasis> enumerate_subspaces(const Field& f, std::size_t n,
                                               std::optional<std::size_t> fixed_dim,
                                               std::size_t bound) {
    if (!f.is_finite()) throw std::invalid_argument("cannot enumerate subspaces over Q");
    if (n > bound) throw std::invalid_argument("ambient dimension exceeds enumeration bound");
    std::vector<SubspaceBasis> out;
    std::size_t lo = fixed_dim.value_or(0), hi = fixed_dim.value_or(n);
    if (hi > n) throw std::invalid_argument("requested dimension exceeds ambient");
    for (std::size_t k = lo; k <= hi; ++k) {
        std::vector<std::size_t> pivots;
        choose_pivots(f, n, k, 0, pivots, out);
    }
    return out;
}

}  // namespace cubezero
