#include "cubezero/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "cubezero/diamond.hpp"
#include "cubezero/matrix.hpp"
#include "cubezero/subspace.hpp"

namespace cubezero {

namespace {

std::size_t field_bound(const Field& f) {
    if (!f.is_finite()) {
        throw std::invalid_argument("oracle: enumeration needs a finite field");
    }
    if (f.modulus() == 2) return 6;
    if (f.modulus() == 3) return 4;
    return 3;
}

// Every vector of F^n in odometer order; p^n entries.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
    const std::uint32_t p = f.modulus();
    std::vector<Vec> out;
    std::vector<std::uint32_t> digits(n, 0);
    while (true) {
        Vec v;
        v.reserve(n);
        for (std::uint32_t d : digits) v.push_back(Scalar::from_int(f, d));
        out.push_back(std::move(v));
        std::size_t k = 0;
        while (k < n && ++digits[k] == p) {
            digits[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_finite()) {
        return Scalar::from_int(f, static_cast<long>(rng() % f.modulus()));
    }
    long num = static_cast<long>(rng() % 9) - 4;
    long den = 1 + static_cast<long>(rng() % 4);
    return Scalar::rational(num, den);
}

// m-coordinates of the product of two members of m.
Vec m_product(const TripleRing& s, const Vec& a, const Vec& b) {
    return m_coords(s, multiply(s, from_m_coords(s, a), from_m_coords(s, b)));
}

Report make_report(std::string lemma) {
    Report r;
    r.lemma = std::move(lemma);
    return r;
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const TripleRing& s) {
    const Field& f = s.field();
    std::size_t bound = field_bound(f);
    if (s.m_dim() > bound) {
        throw std::invalid_argument("enumerate_ideals: dim m exceeds the enumeration bound");
    }
    std::vector<Ideal> out;
    for (const SubspaceBasis& u : enumerate_subspaces(f, s.m_dim(), std::nullopt, bound)) {
        if (is_ideal(s, u)) out.push_back(Ideal::from_subspace(s, u));
    }
    return out;
}

std::string Report::summary() const {
    return "lemma=" + lemma + " rings=" + std::to_string(rings) +
           " cases=" + std::to_string(cases) + " failures=" + std::to_string(failures());
}

void Report::merge(const Report& other) {
    if (lemma != other.lemma) {
        throw std::invalid_argument("Report::merge: lemma mismatch (" + lemma + " vs " +
                                    other.lemma + ")");
    }
    rings += other.rings;
    cases += other.cases;
    failure_lines.insert(failure_lines.end(), other.failure_lines.begin(),
                         other.failure_lines.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

Report verify_correspondence(const TripleRing& s) {
    Report rep = make_report("correspondence");
    rep.rings = 1;
    const Field& f = s.field();
    std::vector<Ideal> ideals = enumerate_ideals(s);
    const SubspaceBasis soc_sp = socle(s).space();
    const std::size_t sd = soc_sp.dim();

    // Forward: an SI ideal avoiding the socle determines a functional with
    // Soc + I = V_f.
    for (const Ideal& i : ideals) {
        if (!is_subdirectly_irreducible(s, i)) continue;
        if (i.space().contains(soc_sp)) continue;
        ++rep.cases;

        Vec x;
        for (std::size_t r = 0; r < sd; ++r) {
            Vec cand = soc_sp.basis_vector(r);
            if (!i.contains(cand)) {
                x = std::move(cand);
                break;
            }
        }

        SubspaceBasis meet = intersect(soc_sp, i.space());
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < meet.dim(); ++r) {
            rows.push_back(soc_sp.coordinates(meet.basis_vector(r)));
        }
        rows.push_back(soc_sp.coordinates(x));
        Matrix m = Matrix::from_rows(f, rows, sd);
        Vec target = unit_vec(f, rows.size(), rows.size() - 1);
        Vec coeffs;
        if (!solve_row_combination(m.transpose(), target, coeffs)) {
            rep.failure_lines.push_back("correspondence forward: ideal dim " +
                                        std::to_string(i.dim()) +
                                        ": no functional matches the complement generator");
            continue;
        }
        Ideal vf = v_f_subspace(s, Functional(s, soc_sp, coeffs));
        if (sum(soc_sp, i.space()) != vf.space()) {
            rep.failure_lines.push_back("correspondence forward: ideal dim " +
                                        std::to_string(i.dim()) + ": Soc + I != V_f");
        }
    }

    // Backward: each nonzero functional recovers ideals maximal for x not in
    // I; they are SI with kernel Soc cap I and V_f = Soc + I.
    for (const Vec& coeffs : all_vectors(f, sd)) {
        if (is_zero_vec(coeffs)) continue;
        ++rep.cases;
        Functional fn(s, soc_sp, coeffs);
        Ideal vf = v_f_subspace(s, fn);

        std::size_t r = 0;
        while (coeffs[r].is_zero()) ++r;
        Vec x = scale(coeffs[r].inverse(), soc_sp.basis_vector(r));

        Matrix row = Matrix::from_rows(f, {coeffs}, sd);
        SubspaceBasis kc = kernel(row);
        std::vector<Vec> gens;
        for (std::size_t t = 0; t < kc.dim(); ++t) {
            Vec combo = zero_vec(f, s.m_dim());
            Vec kv = kc.basis_vector(t);
            for (std::size_t u = 0; u < sd; ++u) {
                combo = add(combo, scale(kv[u], soc_sp.basis_vector(u)));
            }
            gens.push_back(std::move(combo));
        }
        SubspaceBasis ker_f = SubspaceBasis::from_generators(f, gens, s.m_dim());

        std::vector<const Ideal*> candidates;
        for (const Ideal& i : ideals) {
            if (i.space().contains(ker_f) && !i.contains(x)) candidates.push_back(&i);
        }
        if (candidates.empty()) {
            rep.failure_lines.push_back("correspondence backward: no ideal above ker f avoids x");
            continue;
        }
        for (const Ideal* ip : candidates) {
            bool maximal = true;
            for (const Ideal* jp : candidates) {
                if (jp != ip && jp->space().contains(ip->space()) && jp->dim() > ip->dim()) {
                    maximal = false;
                    break;
                }
            }
            if (!maximal) continue;
            if (!is_subdirectly_irreducible(s, *ip)) {
                rep.failure_lines.push_back("correspondence backward: maximal ideal is not SI");
            }
            if (intersect(ip->space(), soc_sp) != ker_f) {
                rep.failure_lines.push_back("correspondence backward: ker f != I cap Soc");
            }
            if (sum(soc_sp, ip->space()) != vf.space()) {
                rep.failure_lines.push_back("correspondence backward: Soc + I != V_f");
            }
        }
    }
    return rep;
}

Report verify_krull(const TripleRing& s) {
    Report rep = make_report("krull");
    rep.rings = 1;
    SubspaceBasis m1 = Ideal::maximal(s).space();
    SubspaceBasis m2 = radical_square(s).space();
    for (const Ideal& i : enumerate_ideals(s)) {
        ++rep.cases;
        SubspaceBasis t1 = sum(i.space(), m1);
        SubspaceBasis t2 = sum(i.space(), m2);
        const SubspaceBasis& t3 = i.space();  // I + m^3 = I since m^3 = 0
        bool chain = t1.contains(t2) && t2.contains(t3);
        SubspaceBasis meet = intersect(intersect(t1, t2), t3);
        if (!chain || meet != i.space()) {
            rep.failure_lines.push_back("krull: ideal dim " + std::to_string(i.dim()) +
                                        ": chain does not stabilize at I");
        }
    }
    return rep;
}

Report verify_colon_socle(const TripleRing& s) {
    Report rep = make_report("colon-socle");
    rep.rings = 1;
    const Field& f = s.field();
    std::vector<Ideal> ideals = enumerate_ideals(s);
    Ideal maximal = Ideal::maximal(s);
    Ideal msq = radical_square(s);
    std::vector<Vec> members = all_vectors(f, s.m_dim());

    for (const Ideal& i : ideals) {
        ++rep.cases;
        Ideal c1 = colon(s, i, maximal);

        if (i == maximal) {
            if (!c1.is_whole() || composition_length(s, i) != 1) {
                rep.failure_lines.push_back("colon-socle: (m:m) is not the whole ring");
            }
        } else {
            // Soc(R/I) from first principles: classes of a with m*a inside I.
            std::vector<Vec> gens;
            for (const Vec& a : members) {
                bool annihilates = true;
                for (std::size_t j = 0; j < s.m_dim(); ++j) {
                    if (!i.contains(m_product(s, unit_vec(f, s.m_dim(), j), a))) {
                        annihilates = false;
                        break;
                    }
                }
                if (annihilates) gens.push_back(a);
            }
            SubspaceBasis preimage = SubspaceBasis::from_generators(f, gens, s.m_dim());
            if (c1.is_whole() || c1.space() != preimage) {
                rep.failure_lines.push_back("colon-socle: Soc(R/I) != (I:m)/I at ideal dim " +
                                            std::to_string(i.dim()));
            }
        }

        Ideal lhs = colon(s, i, msq);
        Ideal rhs = colon(s, c1, maximal);
        if (lhs != rhs) {
            rep.failure_lines.push_back("colon-socle: (I:m^2) != ((I:m):m) at ideal dim " +
                                        std::to_string(i.dim()));
        }

        // Length ladder: iterating the colon strictly climbs to the whole
        // ring in at most length(R/I) steps.
        Ideal cur = i;
        std::size_t steps = 0;
        std::size_t limit = composition_length(s, i);
        bool ladder_ok = true;
        while (!cur.is_whole()) {
            Ideal next = colon(s, cur, maximal);
            bool grew = next.is_whole() ? true : next.dim() > cur.dim();
            if (!grew || ++steps > limit) {
                ladder_ok = false;
                break;
            }
            cur = next;
        }
        if (!ladder_ok) {
            rep.failure_lines.push_back("colon-socle: colon ladder stalled at ideal dim " +
                                        std::to_string(i.dim()));
        }
    }
    return rep;
}

Report verify_squarezero_length(const TripleRing& s) {
    if (!s.beta_is_zero()) {
        throw std::invalid_argument("verify_squarezero_length: beta must vanish");
    }
    Report rep = make_report("squarezero");
    rep.rings = 1;
    Ideal maximal = Ideal::maximal(s);
    for (const Ideal& k : enumerate_ideals(s)) {
        if (!is_subdirectly_irreducible(s, k)) continue;
        ++rep.cases;
        std::size_t expected = (k == maximal) ? 1 : 2;
        if (composition_length(s, k) != expected) {
            rep.failure_lines.push_back("squarezero: SI ideal dim " + std::to_string(k.dim()) +
                                        " has length != " + std::to_string(expected));
        }
        if (k != maximal && s.m_dim() - k.dim() != 1) {
            rep.failure_lines.push_back("squarezero: SI ideal is not a hyperplane of m");
        }
    }
    return rep;
}

Report verify_finite_dual_trivext(std::size_t dim_v, const Field& f, std::size_t trials,
                                  std::uint64_t seed) {
    Report rep = make_report("finite-dual");
    rep.rings = 1;
    rep.notes.push_back("seed=" + std::to_string(seed));
    std::size_t bound = field_bound(f);
    if (dim_v > bound) {
        throw std::invalid_argument("verify_finite_dual_trivext: dimV exceeds the bound");
    }
    // Ideals of F x V are exactly the subspaces of V: all products vanish.
    std::vector<SubspaceBasis> subs = enumerate_subspaces(f, dim_v, std::nullopt, bound);
    std::mt19937_64 rng(seed);

    for (std::size_t t = 0; t < trials; ++t) {
        ++rep.cases;
        Vec coeffs;
        for (std::size_t i = 0; i < 1 + dim_v; ++i) coeffs.push_back(random_scalar(f, rng));
        if (is_zero_vec(coeffs)) continue;  // ker f = A itself, codimension 0

        Vec v_part(coeffs.begin() + 1, coeffs.end());
        SubspaceBasis direct = kernel(Matrix::from_rows(f, {v_part}, dim_v));

        const SubspaceBasis* best = nullptr;
        for (const SubspaceBasis& u : subs) {
            bool inside = true;
            for (std::size_t r = 0; r < u.dim() && inside; ++r) {
                Vec b = u.basis_vector(r);
                Scalar val = Scalar::zero(f);
                for (std::size_t j = 0; j < dim_v; ++j) val += v_part[j] * b[j];
                inside = val.is_zero();
            }
            if (inside && (best == nullptr || u.dim() > best->dim())) best = &u;
        }

        if (best == nullptr || *best != direct) {
            rep.failure_lines.push_back("finite-dual: trial " + std::to_string(t) +
                                        ": enumerated maximum differs from ker f cap V");
            continue;
        }
        std::size_t codim = (1 + dim_v) - best->dim();
        if (codim > 2) {
            rep.failure_lines.push_back("finite-dual: trial " + std::to_string(t) +
                                        ": codimension " + std::to_string(codim) + " > 2");
        }
    }
    return rep;
}

Report verify_compare_vf(const PresentedAlgebra& a) {
    Report rep = make_report("compare-vf");
    rep.rings = 1;
    EquivalenceReport eq = check_gr_equivalence(a);
    rep.cases = eq.functionals;
    rep.failure_lines = eq.failures;
    return rep;
}

std::vector<TripleRing> all_symmetric_gf2_rings(std::size_t max_dim_v, std::size_t max_dim_w) {
    Field g2 = Field::prime(2);
    std::vector<TripleRing> out;
    for (std::size_t dv = 0; dv <= max_dim_v; ++dv) {
        for (std::size_t dw = 0; dw <= max_dim_w; ++dw) {
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t i = 0; i < dv; ++i)
                for (std::size_t j = i; j < dv; ++j) slots.emplace_back(i, j);
            std::size_t total = std::size_t{1} << (slots.size() * dw);
            for (std::size_t mask = 0; mask < total; ++mask) {
                TripleRing s(g2, dv, dw);
                std::size_t bit = 0;
                for (auto [i, j] : slots) {
                    Vec w;
                    for (std::size_t k = 0; k < dw; ++k)
                        w.push_back(Scalar::from_int(g2, (mask >> bit++) & 1));
                    s.set_beta(i, j, w);
                }
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

std::vector<TripleRing> sample_gf3_rings(std::size_t count, std::uint64_t seed) {
    Field g3 = Field::prime(3);
    std::mt19937_64 rng(seed);
    std::vector<TripleRing> out;
    while (out.size() < count) {
        std::size_t dv = rng() % 4;
        std::size_t dw = rng() % (4 - dv);
        TripleRing s(g3, dv, dw);
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = i; j < dv; ++j) {
                Vec w;
                for (std::size_t k = 0; k < dw; ++k) w.push_back(random_scalar(g3, rng));
                s.set_beta(i, j, w);
            }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<PresentedAlgebra> all_valid_presented(const Field& f, std::size_t dim) {
    if (!f.is_finite()) {
        throw std::invalid_argument("all_valid_presented: field must be finite");
    }
    const std::uint32_t p = f.modulus();
    std::size_t n = dim == 0 ? 0 : dim - 1;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) slots.emplace_back(i, j);

    double count = 1.0;
    for (std::size_t b = 0; b < slots.size() * n; ++b) count *= p;
    if (count > 1u << 16) {
        throw std::invalid_argument("all_valid_presented: structure constant sweep too large");
    }

    std::vector<PresentedAlgebra> out;
    std::vector<std::uint32_t> digits(slots.size() * n, 0);
    while (true) {
        PresentedAlgebra a(f, dim);
        std::size_t pos = 0;
        for (auto [i, j] : slots) {
            Vec coords = zero_vec(f, dim);
            for (std::size_t k = 1; k <= n; ++k)
                coords[k] = Scalar::from_int(f, digits[pos++]);
            a.set_product(i, j, coords);
        }
        if (validate(a).ok) out.push_back(std::move(a));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) {
            digits[k] = 0;
            ++k;
        }
        if (k == digits.size()) break;
    }
    return out;
}

PresentedAlgebra algebra_from_triple(const TripleRing& s) {
    PresentedAlgebra a(s.field(), 1 + s.m_dim());
    for (std::size_t i = 0; i < s.dim_v(); ++i)
        for (std::size_t j = i; j < s.dim_v(); ++j) {
            Vec coords = zero_vec(s.field(), 1 + s.m_dim());
            Vec w = s.beta_vec(i, j);
            for (std::size_t k = 0; k < s.dim_w(); ++k) coords[1 + s.dim_v() + k] = w[k];
            a.set_product(1 + i, 1 + j, coords);
        }
    return a;
}

PresentedAlgebra reshuffle_basis(const PresentedAlgebra& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t n = a.m_basis_count();
    Field f = a.field();

    // Unit upper-triangular with random entries above the diagonal, then a
    // random row permutation: always invertible.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = zero_vec(f, n);
        r[i] = Scalar::one(f);
        for (std::size_t j = i + 1; j < n; ++j) r[j] = random_scalar(f, rng);
        rows.push_back(std::move(r));
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    Matrix p = Matrix::from_rows(f, rows, n);

    auto embed = [&](const Vec& m_part) {
        Vec full = zero_vec(f, a.dim());
        for (std::size_t j = 0; j < n; ++j) full[1 + j] = m_part[j];
        return full;
    };

    PresentedAlgebra out(f, a.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec prod = a.multiply(embed(p.row(i)), embed(p.row(j)));
            Vec m_part(prod.begin() + 1, prod.end());
            Vec y;
            if (!solve_row_combination(p, m_part, y))
                throw std::logic_error("reshuffle_basis: product left the new basis span");
            Vec coords = zero_vec(f, a.dim());
            for (std::size_t k = 0; k < n; ++k) coords[1 + k] = y[k];
            out.set_product(1 + i, 1 + j, coords);
        }
    return out;
}

}  // namespace cubezero
