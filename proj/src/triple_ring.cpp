#include "cubezero/triple_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace cubezero {

TripleRing::TripleRing(const Field& f, std::size_t dim_v, std::size_t dim_w)
    : field_(f),
      dim_v_(dim_v),
      dim_w_(dim_w),
      beta_(dim_v * dim_v * dim_w, Scalar::zero(f)) {}

void TripleRing::set_beta(std::size_t i, std::size_t j, const Vec& w_coords) {
    if (i >= dim_v_ || j >= dim_v_) throw std::invalid_argument("beta index out of range");
    if (w_coords.size() != dim_w_) throw std::invalid_argument("beta value has wrong length");
    for (std::size_t k = 0; k < dim_w_; ++k) {
        if (w_coords[k].field() != field_) throw std::invalid_argument("beta value field mismatch");
        beta_[(i * dim_v_ + j) * dim_w_ + k] = w_coords[k];
        beta_[(j * dim_v_ + i) * dim_w_ + k] = w_coords[k];
    }
}

const Scalar& TripleRing::beta(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_v_ || j >= dim_v_ || k >= dim_w_)
        throw std::invalid_argument("beta index out of range");
    return beta_[(i * dim_v_ + j) * dim_w_ + k];
}

Vec TripleRing::beta_vec(std::size_t i, std::size_t j) const {
    Vec out;
    out.reserve(dim_w_);
    for (std::size_t k = 0; k < dim_w_; ++k) out.push_back(beta(i, j, k));
    return out;
}

Vec TripleRing::beta_apply(const Vec& v1, const Vec& v2) const {
    if (v1.size() != dim_v_ || v2.size() != dim_v_)
        throw std::invalid_argument("beta argument has wrong length");
    Vec out = zero_vec(field_, dim_w_);
    for (std::size_t i = 0; i < dim_v_; ++i) {
        if (v1[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_v_; ++j) {
            if (v2[j].is_zero()) continue;
            Scalar c = v1[i] * v2[j];
            for (std::size_t k = 0; k < dim_w_; ++k) out[k] += c * beta(i, j, k);
        }
    }
    return out;
}

bool TripleRing::beta_is_zero() const {
    for (const auto& x : beta_)
        if (!x.is_zero()) return false;
    return true;
}

bool TripleRing::operator==(const TripleRing& o) const {
    return field_ == o.field_ && dim_v_ == o.dim_v_ && dim_w_ == o.dim_w_ && beta_ == o.beta_;
}

RingElement ring_zero(const TripleRing& s) {
    return {Scalar::zero(s.field()), zero_vec(s.field(), s.dim_v()),
            zero_vec(s.field(), s.dim_w())};
}

RingElement ring_one(const TripleRing& s) {
    RingElement e = ring_zero(s);
    e.lambda = Scalar::one(s.field());
    return e;
}

RingElement make_element(const TripleRing& s, Scalar lambda, Vec v, Vec w) {
    if (lambda.field() != s.field()) throw std::invalid_argument("element field mismatch");
    if (v.size() != s.dim_v() || w.size() != s.dim_w())
        throw std::invalid_argument("element has wrong coordinate lengths");
    return {std::move(lambda), std::move(v), std::move(w)};
}

static void check_member(const TripleRing& s, const RingElement& a) {
    if (a.lambda.field() != s.field() || a.v.size() != s.dim_v() || a.w.size() != s.dim_w())
        throw std::invalid_argument("element does not belong to this ring");
}

RingElement add_elements(const TripleRing& s, const RingElement& a, const RingElement& b) {
    check_member(s, a);
    check_member(s, b);
    return {a.lambda + b.lambda, add(a.v, b.v), add(a.w, b.w)};
}

RingElement scale_element(const TripleRing& s, const Scalar& c, const RingElement& a) {
    check_member(s, a);
    return {c * a.lambda, scale(c, a.v), scale(c, a.w)};
}

RingElement multiply(const TripleRing& s, const RingElement& a, const RingElement& b) {
    check_member(s, a);
    check_member(s, b);
    Vec v = add(scale(a.lambda, b.v), scale(b.lambda, a.v));
    Vec w = add(add(scale(a.lambda, b.w), scale(b.lambda, a.w)), s.beta_apply(a.v, b.v));
    return {a.lambda * b.lambda, std::move(v), std::move(w)};
}

Vec m_coords(const TripleRing& s, const RingElement& a) {
    check_member(s, a);
    if (!a.lambda.is_zero()) throw std::invalid_argument("element is not in the maximal ideal");
    Vec out = a.v;
    out.insert(out.end(), a.w.begin(), a.w.end());
    return out;
}

RingElement from_m_coords(const TripleRing& s, const Vec& coords) {
    if (coords.size() != s.m_dim()) throw std::invalid_argument("coordinate length mismatch");
    Vec v(coords.begin(), coords.begin() + s.dim_v());
    Vec w(coords.begin() + s.dim_v(), coords.end());
    return make_element(s, Scalar::zero(s.field()), std::move(v), std::move(w));
}

// Embeds a W-coordinate tuple as (0,...,0, w) in the coordinate space of m.
static Vec embed_w(const TripleRing& s, const Vec& w) {
    Vec out = zero_vec(s.field(), s.dim_v());
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

bool is_ideal(const TripleRing& s, const SubspaceBasis& u) {
    if (u.ambient() != s.m_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (u.field() != s.field()) throw std::invalid_argument("field mismatch");
    for (std::size_t g = 0; g < u.dim(); ++g) {
        Vec gen = u.basis_vector(g);
        Vec gv(gen.begin(), gen.begin() + s.dim_v());
        for (std::size_t i = 0; i < s.dim_v(); ++i) {
            Vec w = s.beta_apply(unit_vec(s.field(), s.dim_v(), i), gv);
            if (!u.contains(embed_w(s, w))) return false;
        }
    }
    return true;
}

Ideal Ideal::whole(const TripleRing& s) {
    return Ideal(true, SubspaceBasis::full(s.field(), s.m_dim()));
}

Ideal Ideal::zero(const TripleRing& s) {
    return Ideal(false, SubspaceBasis::zero(s.field(), s.m_dim()));
}

Ideal Ideal::maximal(const TripleRing& s) {
    return Ideal(false, SubspaceBasis::full(s.field(), s.m_dim()));
}

Ideal Ideal::from_subspace(const TripleRing& s, const SubspaceBasis& u) {
    if (!is_ideal(s, u)) throw std::invalid_argument("subspace is not an ideal");
    return Ideal(false, u);
}

Ideal Ideal::generated_by(const TripleRing& s, const std::vector<Vec>& gens) {
    std::vector<Vec> closure = gens;
    for (const Vec& g : gens) {
        if (g.size() != s.m_dim()) throw std::invalid_argument("generator length mismatch");
        Vec gv(g.begin(), g.begin() + s.dim_v());
        for (std::size_t i = 0; i < s.dim_v(); ++i)
            closure.push_back(embed_w(s, s.beta_apply(unit_vec(s.field(), s.dim_v(), i), gv)));
    }
    return Ideal(false, SubspaceBasis::from_generators(s.field(), closure, s.m_dim()));
}

const SubspaceBasis& Ideal::space() const {
    if (whole_) throw std::logic_error("whole ring has no m-subspace representation");
    return space_;
}

bool Ideal::contains(const Vec& coords) const {
    return whole_ ? true : space_.contains(coords);
}

bool Ideal::operator==(const Ideal& o) const {
    if (whole_ != o.whole_) return false;
    return whole_ || space_ == o.space_;
}

bool Ideal::operator<(const Ideal& o) const {
    if (whole_ != o.whole_) return whole_ < o.whole_;
    return whole_ ? false : space_ < o.space_;
}

std::string Ideal::to_string() const {
    return whole_ ? "whole ring" : space_.to_string();
}

Ideal socle(const TripleRing& s) {
    // Rows indexed by pairs (i,k): a is perpendicular iff
    // sum_j beta[i][j][k] a_j = 0 for all i,k.
    Matrix gram(s.field(), s.dim_v() * s.dim_w(), s.dim_v());
    for (std::size_t i = 0; i < s.dim_v(); ++i)
        for (std::size_t k = 0; k < s.dim_w(); ++k)
            for (std::size_t j = 0; j < s.dim_v(); ++j)
                gram.at(i * s.dim_w() + k, j) = s.beta(i, j, k);
    SubspaceBasis vperp = kernel(gram);

    std::vector<Vec> gens;
    for (std::size_t i = 0; i < vperp.dim(); ++i) {
        Vec g = vperp.basis_vector(i);
        g.insert(g.end(), s.dim_w(), Scalar::zero(s.field()));
        gens.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < s.dim_w(); ++k)
        gens.push_back(unit_vec(s.field(), s.m_dim(), s.dim_v() + k));
    return Ideal::from_subspace(s, SubspaceBasis::from_generators(s.field(), gens, s.m_dim()));
}

Ideal radical_square(const TripleRing& s) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < s.dim_v(); ++i)
        for (std::size_t j = i; j < s.dim_v(); ++j)
            gens.push_back(embed_w(s, s.beta_vec(i, j)));
    return Ideal::from_subspace(s, SubspaceBasis::from_generators(s.field(), gens, s.m_dim()));
}

// W-part of an ideal, as a subspace of F^dimW.
static SubspaceBasis w_part(const TripleRing& s, const Ideal& i) {
    std::vector<Vec> w_embed;
    for (std::size_t k = 0; k < s.dim_w(); ++k)
        w_embed.push_back(unit_vec(s.field(), s.m_dim(), s.dim_v() + k));
    SubspaceBasis cut =
        intersect(i.space(), SubspaceBasis::from_generators(s.field(), w_embed, s.m_dim()));
    std::vector<Vec> stripped;
    for (std::size_t r = 0; r < cut.dim(); ++r) {
        Vec row = cut.basis_vector(r);
        stripped.emplace_back(row.begin() + s.dim_v(), row.end());
    }
    return SubspaceBasis::from_generators(s.field(), stripped, s.dim_w());
}

Ideal colon(const TripleRing& s, const Ideal& i, const Ideal& k) {
    if (i.is_whole()) return Ideal::whole(s);
    if (k.is_whole()) {
        // (I : R) = I.
        return i;
    }
    if (i.space().contains(k.space())) return Ideal::whole(s);

    // K*(a_v, a_w) only produces (0, beta(k_v, a_v)), so the constraint is
    // beta(k_v, a_v) in I_w for every generator, and a_w is free.
    SubspaceBasis iw = w_part(s, i);
    Matrix iw_rows = iw.basis();
    SubspaceBasis ann = kernel(iw_rows);  // {c : I_w . c = 0}

    std::vector<Vec> cond_rows;
    for (std::size_t g = 0; g < k.space().dim(); ++g) {
        Vec gen = k.space().basis_vector(g);
        Vec gv(gen.begin(), gen.begin() + s.dim_v());
        for (std::size_t a = 0; a < ann.dim(); ++a) {
            Vec c = ann.basis_vector(a);
            Vec row = zero_vec(s.field(), s.dim_v());
            for (std::size_t j = 0; j < s.dim_v(); ++j) {
                Scalar acc = Scalar::zero(s.field());
                for (std::size_t ii = 0; ii < s.dim_v(); ++ii)
                    for (std::size_t t = 0; t < s.dim_w(); ++t)
                        acc += gv[ii] * c[t] * s.beta(ii, j, t);
                row[j] = acc;
            }
            cond_rows.push_back(std::move(row));
        }
    }
    SubspaceBasis allowed_v =
        kernel(Matrix::from_rows(s.field(), cond_rows, s.dim_v()));

    std::vector<Vec> gens;
    for (std::size_t r = 0; r < allowed_v.dim(); ++r) {
        Vec g = allowed_v.basis_vector(r);
        g.insert(g.end(), s.dim_w(), Scalar::zero(s.field()));
        gens.push_back(std::move(g));
    }
    for (std::size_t t = 0; t < s.dim_w(); ++t)
        gens.push_back(unit_vec(s.field(), s.m_dim(), s.dim_v() + t));
    return Ideal::from_subspace(s, SubspaceBasis::from_generators(s.field(), gens, s.m_dim()));
}

bool is_subdirectly_irreducible(const TripleRing& s, const Ideal& i) {
    if (i.is_whole()) throw std::invalid_argument("ideal must be proper");
    if (i.dim() == s.m_dim()) return true;  // R/m is simple
    Ideal c = colon(s, i, Ideal::maximal(s));
    return c.dim() - i.dim() == 1;
}

std::size_t composition_length(const TripleRing& s, const Ideal& i) {
    if (i.is_whole()) return 0;
    return 1 + s.m_dim() - i.dim();
}

Functional::Functional(const TripleRing& s, const SubspaceBasis& domain, Vec coeffs)
    : domain_(domain), coeffs_(std::move(coeffs)) {
    if (domain_ != socle(s).space())
        throw std::invalid_argument("functional domain must be the socle");
    if (coeffs_.size() != domain_.dim())
        throw std::invalid_argument("coefficient count must match socle dimension");
    for (const auto& c : coeffs_)
        if (c.field() != s.field()) throw std::invalid_argument("coefficient field mismatch");
}

bool Functional::is_zero() const { return is_zero_vec(coeffs_); }

Scalar Functional::eval(const Vec& socle_member) const {
    Vec coords = domain_.coordinates(socle_member);
    Scalar acc = Scalar::zero(domain_.field());
    for (std::size_t i = 0; i < coords.size(); ++i) acc += coeffs_[i] * coords[i];
    return acc;
}

Ideal v_f_subspace(const TripleRing& s, const Functional& f) {
    // f(m*(v,w)) = 0 reduces to f(0, beta(v_i, v)) = 0 for each i, linear in v.
    Matrix cond(s.field(), s.dim_v(), s.dim_v());
    for (std::size_t i = 0; i < s.dim_v(); ++i)
        for (std::size_t j = 0; j < s.dim_v(); ++j)
            cond.at(i, j) = f.eval(embed_w(s, s.beta_vec(i, j)));
    SubspaceBasis allowed_v = kernel(cond);

    std::vector<Vec> gens;
    for (std::size_t r = 0; r < allowed_v.dim(); ++r) {
        Vec g = allowed_v.basis_vector(r);
        g.insert(g.end(), s.dim_w(), Scalar::zero(s.field()));
        gens.push_back(std::move(g));
    }
    for (std::size_t t = 0; t < s.dim_w(); ++t)
        gens.push_back(unit_vec(s.field(), s.m_dim(), s.dim_v() + t));
    return Ideal::from_subspace(s, SubspaceBasis::from_generators(s.field(), gens, s.m_dim()));
}

}  // namespace cubezero
