#include "cubezero/presented_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace cubezero {

PresentedAlgebra::PresentedAlgebra(const Field& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {
    if (dim == 0) throw std::invalid_argument("algebra needs at least the unit");
    for (std::size_t i = 0; i < dim_; ++i) {
        c_[(0 * dim_ + i) * dim_ + i] = Scalar::one(f);
        c_[(i * dim_ + 0) * dim_ + i] = Scalar::one(f);
    }
}

void PresentedAlgebra::set_product(std::size_t i, std::size_t j, const Vec& coords) {
    if (i >= dim_ || j >= dim_) throw std::invalid_argument("product index out of range");
    if (coords.size() != dim_) throw std::invalid_argument("product value has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) {
        if (coords[k].field() != field_)
            throw std::invalid_argument("product value field mismatch");
        c_[(i * dim_ + j) * dim_ + k] = coords[k];
        c_[(j * dim_ + i) * dim_ + k] = coords[k];
    }
}

const Scalar& PresentedAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("structure constant index out of range");
    return c_[(i * dim_ + j) * dim_ + k];
}

Vec PresentedAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec out;
    out.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out.push_back(c(i, j, k));
    return out;
}

Vec PresentedAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_)
        throw std::invalid_argument("element has wrong coordinate length");
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar s = a[i] * b[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += s * c(i, j, k);
        }
    }
    return out;
}

bool PresentedAlgebra::operator==(const PresentedAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
}

ValidationReport validate(const PresentedAlgebra& a) {
    std::size_t d = a.dim();
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) {
                    std::ostringstream os;
                    os << "commutativity fails at e" << i << "*e" << j;
                    return fail(os.str());
                }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            bool want_one = (k == i);
            if (a.c(0, i, k).is_one() != want_one || !(want_one || a.c(0, i, k).is_zero())) {
                std::ostringstream os;
                os << "e0 is not a unit on e" << i;
                return fail(os.str());
            }
        }

    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j)
            if (!a.c(i, j, 0).is_zero()) {
                std::ostringstream os;
                os << "m is not an ideal: e" << i << "*e" << j << " has a unit component";
                return fail(os.str());
            }

    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j) {
            Vec ij = a.basis_product(i, j);
            for (std::size_t k = 1; k < d; ++k) {
                Vec e_k = unit_vec(a.field(), d, k);
                if (!is_zero_vec(a.multiply(ij, e_k))) {
                    std::ostringstream os;
                    os << "m cubed is nonzero at e" << i << "*e" << j << "*e" << k;
                    return fail(os.str());
                }
            }
        }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = a.multiply(a.basis_product(i, j), unit_vec(a.field(), d, k));
                Vec rhs = a.multiply(unit_vec(a.field(), d, i), a.basis_product(j, k));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails at (e" << i << ",e" << j << ",e" << k << ")";
                    return fail(os.str());
                }
            }

    return {true, ""};
}

PresentedAlgebra trivial_extension(const Field& f, std::size_t dim_v) {
    return PresentedAlgebra(f, 1 + dim_v);
}

SubspaceBasis m_power(const PresentedAlgebra& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("power must be at least 1");
    std::vector<Vec> current;
    for (std::size_t i = 1; i < a.dim(); ++i) current.push_back(unit_vec(a.field(), a.dim(), i));
    SubspaceBasis span = SubspaceBasis::from_generators(a.field(), current, a.dim());
    for (std::size_t step = 1; step < k; ++step) {
        std::vector<Vec> next;
        for (std::size_t r = 0; r < span.dim(); ++r)
            for (std::size_t j = 1; j < a.dim(); ++j)
                next.push_back(a.multiply(span.basis_vector(r), unit_vec(a.field(), a.dim(), j)));
        span = SubspaceBasis::from_generators(a.field(), next, a.dim());
    }
    return span;
}

SubspaceBasis algebra_socle(const PresentedAlgebra& a) {
    std::size_t d = a.dim();
    // x*e_j = 0 for all j >= 1; rows indexed by (j,k), columns by i.
    Matrix cond(a.field(), (d - 1) * d, d);
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i)
                cond.at((j - 1) * d + k, i) = a.c(i, j, k);
    SubspaceBasis ann = kernel(cond);
    return intersect(ann, m_power(a, 1));
}

bool is_algebra_ideal(const PresentedAlgebra& a, const SubspaceBasis& u) {
    if (u.ambient() != a.dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (!m_power(a, 1).contains(u)) return false;
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t j = 1; j < a.dim(); ++j)
            if (!u.contains(a.multiply(u.basis_vector(r), unit_vec(a.field(), a.dim(), j))))
                return false;
    return true;
}

GradedRing gr(const PresentedAlgebra& a) {
    ValidationReport rep = validate(a);
    if (!rep.ok) throw std::invalid_argument("invalid algebra: " + rep.diagnostic);

    SubspaceBasis m2 = m_power(a, 2);
    // Coset representatives of m/m^2: unit vectors at the non-pivot columns
    // of m^2, skipping the unit column, in increasing column order.
    std::vector<std::size_t> v_cols;
    for (std::size_t col = 1; col < a.dim(); ++col) {
        bool pivot = false;
        for (std::size_t p : m2.pivot_cols()) pivot |= (p == col);
        if (!pivot) v_cols.push_back(col);
    }

    TripleRing ring(a.field(), v_cols.size(), m2.dim());
    for (std::size_t i = 0; i < v_cols.size(); ++i)
        for (std::size_t j = i; j < v_cols.size(); ++j) {
            Vec prod = a.basis_product(v_cols[i], v_cols[j]);
            ring.set_beta(i, j, m2.coordinates(prod));
        }
    return GradedRing{std::move(ring), std::move(v_cols), std::move(m2)};
}

Vec graded_class(const PresentedAlgebra& a, const GradedRing& g, const Vec& x) {
    if (x.size() != a.dim()) throw std::invalid_argument("coordinate length mismatch");
    if (!x[0].is_zero()) throw std::invalid_argument("element is not in the maximal ideal");
    Vec residual = g.m_square.reduce(x);
    Vec out;
    out.reserve(g.ring.m_dim());
    for (std::size_t col : g.v_cols) out.push_back(residual[col]);
    Vec w = g.m_square.coordinates(sub(x, residual));
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

Ideal gr_ideal(const PresentedAlgebra& a, const GradedRing& g, const SubspaceBasis& i) {
    if (!is_algebra_ideal(a, i)) throw std::invalid_argument("subspace is not an ideal inside m");

    std::vector<Vec> gens;
    for (std::size_t r = 0; r < i.dim(); ++r) {
        // Class modulo m^2 only; the m^2 component is contributed separately.
        Vec residual = g.m_square.reduce(i.basis_vector(r));
        Vec v_part;
        for (std::size_t col : g.v_cols) v_part.push_back(residual[col]);
        v_part.insert(v_part.end(), g.m_square.dim(), Scalar::zero(a.field()));
        gens.push_back(std::move(v_part));
    }
    SubspaceBasis cut = intersect(i, g.m_square);
    for (std::size_t r = 0; r < cut.dim(); ++r) {
        Vec w = g.m_square.coordinates(cut.basis_vector(r));
        Vec gen = zero_vec(a.field(), g.ring.dim_v());
        gen.insert(gen.end(), w.begin(), w.end());
        gens.push_back(std::move(gen));
    }
    return Ideal::from_subspace(
        g.ring, SubspaceBasis::from_generators(a.field(), gens, g.ring.m_dim()));
}

}  // namespace cubezero
