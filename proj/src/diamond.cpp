#include "cubezero/diamond.hpp"

#include <stdexcept>
#include <utility>

#include "cubezero/matrix.hpp"
#include "cubezero/subspace.hpp"

namespace cubezero {

namespace {

Verdict holds_artinian(std::size_t total_dim) {
    Verdict v;
    v.outcome = Outcome::Holds;
    v.witness = Verdict::Witness::ArtinianFiniteDim;
    v.bound = total_dim;
    return v;
}

Verdict holds_socle_codim(std::size_t codim, std::string tag) {
    Verdict v;
    v.outcome = Outcome::Holds;
    v.witness = Verdict::Witness::SocleCodimFinite;
    v.bound = codim;
    v.detail = "dim m/Soc = " + std::to_string(codim);
    v.shortcut = std::move(tag);
    return v;
}

bool is_hilbert_form(const SeqSpec& form) {
    return form.kind() == SeqSpec::Kind::Hankel &&
           form.seq().kind() == HankelSeq::Kind::Hilbert;
}

}  // namespace

Verdict decide_diamond(const TripleRing& s, std::size_t) {
    return holds_artinian(1 + s.m_dim());
}

Verdict decide_diamond(const PresentedAlgebra& a, std::size_t window) {
    GradedRing g = gr(a);  // rejects invalid presentations
    return decide_diamond(g.ring, window);
}

Verdict decide_diamond(const SequenceTriple& t, std::size_t window) {
    FormRank r = form_rank(t.form, window);
    if (r.finite) {
        return holds_socle_codim(r.value, "cube-zerolocal(1)");
    }
    if (auto cert = find_bad_factor(t, window)) {
        Verdict v;
        v.outcome = Outcome::Fails;
        v.witness = Verdict::Witness::BadFactor;
        v.bound = cert->witnessed_corank;
        v.detail = "non-degenerate F×V×F factor, rank unbounded";
        v.cert = std::move(cert);
        return v;
    }
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.witness = Verdict::Witness::WindowExhausted;
    v.bound = window;
    v.detail = "window exhausted at " + std::to_string(window);
    return v;
}

std::optional<Verdict> shortcut_lemmas(const TripleRing& s) {
    if (s.beta_is_zero()) {
        Verdict v = holds_socle_codim(0, "squarezero");
        v.detail = "m^2 = 0";
        return v;
    }
    return holds_socle_codim(s.m_dim() - socle(s).dim(), "cube-zerolocal(1)");
}

std::optional<Verdict> shortcut_lemmas(const PresentedAlgebra& a) {
    ValidationReport rep = validate(a);
    if (!rep.ok) throw std::invalid_argument(rep.diagnostic);
    if (m_power(a, 2).dim() == 0) {
        Verdict v = holds_socle_codim(0, "squarezero");
        v.detail = "m^2 = 0";
        return v;
    }
    std::size_t codim = a.m_basis_count() - algebra_socle(a).dim();
    return holds_socle_codim(codim, "cube-zerolocal(1)");
}

std::optional<Verdict> shortcut_lemmas(const SequenceTriple& t) {
    FormRank r = form_rank(t.form, kDefaultWindow);
    if (r.finite && r.value == 0) {
        Verdict v = holds_socle_codim(0, "squarezero");
        v.detail = "m^2 = 0";
        return v;
    }
    if (r.finite) {
        return holds_socle_codim(r.value, "cube-zerolocal(1)");
    }
    if (is_hilbert_form(t.form)) {
        Verdict v;
        v.outcome = Outcome::Fails;
        v.witness = Verdict::Witness::BadFunctional;
        v.bound = 1;  // Soc = 0×0×F
        v.detail = "W-coordinate functional has unbounded corank; "
                   "Soc finite-dimensional, m/Soc infinite-dimensional";
        v.shortcut = "cube-zerolocal(2)";
        return v;
    }
    return std::nullopt;
}

FormRank v_f_corank(const SequenceTriple& t, const Scalar& f_w, std::size_t window) {
    if (f_w.field() != t.field) {
        throw std::invalid_argument("v_f_corank: functional field differs from ring field");
    }
    if (f_w.is_zero()) return FormRank{true, 0};
    return form_rank(t.form, window);
}

std::optional<BadFactorCert> find_bad_factor(const SequenceTriple& t, std::size_t window) {
    if (!is_hilbert_form(t.form)) return std::nullopt;
    if (!nondegeneracy_certificate(t.form.seq(), window)) return std::nullopt;
    BadFactorCert c;
    c.functional = "f(b_n) = h_n on the W coordinate";
    c.witnessed_corank = window;
    c.certified_all_n = true;
    c.factor_shape = "F×V×F with non-degenerate form on V/V⊥ (V⊥ = 0 within window)";
    return c;
}

namespace {

// Every coefficient vector over GF(p), or {0} ∪ unit vectors over Q — in both
// cases a spanning set of the dual of an s-dimensional space.
std::vector<Vec> dual_spanning_coeffs(const Field& f, std::size_t s) {
    std::vector<Vec> out;
    if (f.is_rational()) {
        out.push_back(zero_vec(f, s));
        for (std::size_t i = 0; i < s; ++i) out.push_back(unit_vec(f, s, i));
        return out;
    }
    const std::uint32_t p = f.modulus();
    double count = 1.0;
    for (std::size_t i = 0; i < s; ++i) count *= p;
    if (count > 1u << 20) {
        throw std::invalid_argument("check_gr_equivalence: socle dual too large to sweep");
    }
    std::vector<std::uint32_t> digits(s, 0);
    while (true) {
        Vec c;
        c.reserve(s);
        for (std::uint32_t d : digits) c.push_back(Scalar::from_int(f, static_cast<long>(d)));
        out.push_back(std::move(c));
        std::size_t k = 0;
        while (k < s && ++digits[k] == p) {
            digits[k] = 0;
            ++k;
        }
        if (k == s) break;
    }
    return out;
}

// {a ∈ m : g(m·a) = 0} for a functional g on Soc(A), given by its coefficient
// vector against the socle basis. m·a lies in m² ⊆ Soc(A), so every condition
// row is defined.
SubspaceBasis algebra_v_g(const PresentedAlgebra& a, const SubspaceBasis& soc,
                          const Vec& g_coeffs) {
    const Field& f = a.field();
    const std::size_t d = a.dim();
    const std::size_t md = a.m_basis_count();
    Matrix cond(f, md, md);
    for (std::size_t j = 1; j < d; ++j) {
        for (std::size_t i = 1; i < d; ++i) {
            Vec coords = soc.coordinates(a.basis_product(j, i));
            Scalar val = Scalar::zero(f);
            for (std::size_t t = 0; t < coords.size(); ++t) val += coords[t] * g_coeffs[t];
            cond.at(j - 1, i - 1) = val;
        }
    }
    SubspaceBasis ker = kernel(cond);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vec row = ker.basis_vector(r);
        Vec full = zero_vec(f, d);
        for (std::size_t i = 0; i < md; ++i) full[i + 1] = row[i];
        gens.push_back(std::move(full));
    }
    return SubspaceBasis::from_generators(f, gens, d);
}

}  // namespace

EquivalenceReport check_gr_equivalence(const PresentedAlgebra& a) {
    GradedRing g = gr(a);  // rejects invalid presentations
    const TripleRing& ring = g.ring;
    const SubspaceBasis soc_gr = socle(ring).space();
    const SubspaceBasis soc_a = algebra_socle(a);

    EquivalenceReport report;
    for (const Vec& coeffs : dual_spanning_coeffs(a.field(), soc_gr.dim())) {
        ++report.functionals;
        Functional f(ring, soc_gr, coeffs);
        Ideal v_f = v_f_subspace(ring, f);

        // g(a) = f(0, ā, π(a)): pull f back through the graded class map.
        Vec g_coeffs;
        g_coeffs.reserve(soc_a.dim());
        for (std::size_t i = 0; i < soc_a.dim(); ++i) {
            g_coeffs.push_back(f.eval(graded_class(a, g, soc_a.basis_vector(i))));
        }

        SubspaceBasis v_g = algebra_v_g(a, soc_a, g_coeffs);
        if (!is_algebra_ideal(a, v_g)) {
            report.failures.push_back("functional #" + std::to_string(report.functionals) +
                                      ": V_g is not an ideal of A");
            continue;
        }
        Ideal lifted = gr_ideal(a, g, v_g);
        if (lifted != v_f) {
            report.failures.push_back("functional #" + std::to_string(report.functionals) +
                                      ": V_f in gr(A) differs from gr(V_g)");
        }
    }
    return report;
}

}  // namespace cubezero
