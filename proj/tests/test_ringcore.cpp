#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cubezero/triple_ring.hpp"
#include "test_oracles.hpp"

using namespace cubezero;

namespace {

Vec sv(const Field& f, std::vector<long> vals) {
    Vec out;
    for (long x : vals) out.push_back(Scalar::from_int(f, x));
    return out;
}

// dimV=dimW=1, beta(v0,v0) = (1): the smallest ring with a nonzero product
// inside m.
TripleRing unit_square_ring(const Field& f) {
    TripleRing s(f, 1, 1);
    s.set_beta(0, 0, sv(f, {1}));
    return s;
}

// Every symmetric beta over GF(2) at the given sizes.
std::vector<TripleRing> all_gf2_rings(std::size_t dv, std::size_t dw) {
    Field g2 = Field::prime(2);
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = i; j < dv; ++j) pos.emplace_back(i, j);
    std::size_t bits = pos.size() * dw;
    std::vector<TripleRing> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        TripleRing s(g2, dv, dw);
        for (std::size_t p = 0; p < pos.size(); ++p) {
            Vec w = zero_vec(g2, dw);
            for (std::size_t k = 0; k < dw; ++k)
                if (mask >> (p * dw + k) & 1) w[k] = Scalar::one(g2);
            s.set_beta(pos[p].first, pos[p].second, w);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Ideal> all_ideals(const TripleRing& s) {
    std::vector<Ideal> out;
    for (const auto& u : enumerate_subspaces(s.field(), s.m_dim()))
        if (is_ideal(s, u)) out.push_back(Ideal::from_subspace(s, u));
    return out;
}

RingElement random_element(const TripleRing& s, std::mt19937_64& rng, bool unit_part) {
    Scalar lambda =
        unit_part ? testio::random_scalar(s.field(), rng) : Scalar::zero(s.field());
    Vec v, w;
    for (std::size_t i = 0; i < s.dim_v(); ++i) v.push_back(testio::random_scalar(s.field(), rng));
    for (std::size_t k = 0; k < s.dim_w(); ++k) w.push_back(testio::random_scalar(s.field(), rng));
    return make_element(s, lambda, v, w);
}

TripleRing random_ring(const Field& f, std::size_t dv, std::size_t dw, std::mt19937_64& rng) {
    TripleRing s(f, dv, dw);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = i; j < dv; ++j) {
            Vec w;
            for (std::size_t k = 0; k < dw; ++k) w.push_back(testio::random_scalar(f, rng));
            s.set_beta(i, j, w);
        }
    return s;
}

}  // namespace

TEST_CASE("product formula") {
    Field q = Field::rationals();
    TripleRing s = unit_square_ring(q);

    RingElement a = make_element(s, Scalar::from_int(q, 5), sv(q, {2}), sv(q, {3}));
    CHECK(multiply(s, ring_one(s), a) == a);

    RingElement x = make_element(s, Scalar::zero(q), sv(q, {1}), sv(q, {0}));
    RingElement y = make_element(s, Scalar::zero(q), sv(q, {0}), sv(q, {1}));
    CHECK(multiply(s, x, x) == y);
    CHECK(multiply(s, y, y) == ring_zero(s));

    TripleRing other(q, 2, 1);
    CHECK_THROWS_AS(multiply(s, a, ring_one(other)), std::invalid_argument);
}

TEST_CASE("multiplication is commutative and associative, unit acts") {
    std::mt19937_64 rng(57);
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (int rr = 0; rr < 6; ++rr) {
            std::uniform_int_distribution<std::size_t> d(1, 3);
            TripleRing s = random_ring(f, d(rng), d(rng), rng);
            for (int rep = 0; rep < 12; ++rep) {
                RingElement a = random_element(s, rng, true);
                RingElement b = random_element(s, rng, true);
                RingElement c = random_element(s, rng, true);
                CHECK(multiply(s, a, b) == multiply(s, b, a));
                CHECK(multiply(s, multiply(s, a, b), c) == multiply(s, a, multiply(s, b, c)));
                CHECK(multiply(s, ring_one(s), a) == a);
            }
        }
    }
}

TEST_CASE("cube of the maximal ideal vanishes") {
    std::mt19937_64 rng(58);
    for (int rr = 0; rr < 10; ++rr) {
        std::uniform_int_distribution<std::size_t> d(1, 3);
        TripleRing s = random_ring(Field::prime(5), d(rng), d(rng), rng);
        for (int rep = 0; rep < 10; ++rep) {
            RingElement a = random_element(s, rng, false);
            RingElement b = random_element(s, rng, false);
            RingElement c = random_element(s, rng, false);
            CHECK(multiply(s, multiply(s, a, b), c) == ring_zero(s));
        }
    }
}

TEST_CASE("ideal closure test") {
    Field q = Field::rationals();
    TripleRing s = unit_square_ring(q);

    SubspaceBasis w_line = SubspaceBasis::from_generators(Matrix::from_int_rows(q, {{0, 1}}));
    CHECK(is_ideal(s, w_line));

    SubspaceBasis v_line = SubspaceBasis::from_generators(Matrix::from_int_rows(q, {{1, 0}}));
    CHECK_FALSE(is_ideal(s, v_line));
    CHECK_THROWS_AS(Ideal::from_subspace(s, v_line), std::invalid_argument);

    CHECK(is_ideal(s, SubspaceBasis::full(q, 2)));

    // Generated-by closes the same line up to an ideal.
    Ideal gen = Ideal::generated_by(s, {sv(q, {1, 0})});
    CHECK(gen == Ideal::maximal(s));
}

TEST_CASE("socle examples") {
    Field q = Field::rationals();

    TripleRing flat(q, 2, 1);  // beta = 0
    CHECK(socle(flat) == Ideal::maximal(flat));

    TripleRing s3(q, 3, 1);
    s3.set_beta(0, 0, sv(q, {1}));
    Ideal soc = socle(s3);
    CHECK(soc.dim() == 3);
    CHECK(soc.contains(sv(q, {0, 1, 0, 0})));
    CHECK(soc.contains(sv(q, {0, 0, 1, 0})));
    CHECK(soc.contains(sv(q, {0, 0, 0, 1})));
    CHECK_FALSE(soc.contains(sv(q, {1, 0, 0, 0})));

    TripleRing gram(q, 2, 1);
    gram.set_beta(0, 0, sv(q, {1}));
    gram.set_beta(1, 1, sv(q, {1}));
    Ideal soc2 = socle(gram);
    CHECK(soc2.dim() == 1);
    CHECK(soc2.contains(sv(q, {0, 0, 1})));
}

TEST_CASE("radical square examples") {
    Field q = Field::rationals();

    TripleRing flat(q, 2, 2);
    CHECK(radical_square(flat) == Ideal::zero(flat));

    TripleRing s = unit_square_ring(q);
    CHECK(radical_square(s).contains(sv(q, {0, 1})));
    CHECK(radical_square(s).dim() == 1);

    TripleRing partial(q, 1, 2);
    partial.set_beta(0, 0, sv(q, {1, 0}));
    Ideal r2 = radical_square(partial);
    CHECK(r2.dim() == 1);
    CHECK(r2.contains(sv(q, {0, 1, 0})));
    CHECK_FALSE(r2.contains(sv(q, {0, 0, 1})));
}

TEST_CASE("colon examples") {
    Field q = Field::rationals();
    TripleRing s = unit_square_ring(q);

    CHECK(colon(s, Ideal::zero(s), Ideal::maximal(s)) == socle(s));
    CHECK(colon(s, Ideal::maximal(s), Ideal::maximal(s)).is_whole());

    Ideal w_ideal = Ideal::generated_by(s, {sv(q, {0, 1})});
    CHECK(colon(s, w_ideal, Ideal::maximal(s)) == Ideal::maximal(s));

    // (I : R) = I and (R : K) = R.
    CHECK(colon(s, w_ideal, Ideal::whole(s)) == w_ideal);
    CHECK(colon(s, Ideal::whole(s), w_ideal).is_whole());
}

TEST_CASE("subdirect irreducibility examples") {
    Field q = Field::rationals();

    TripleRing s = unit_square_ring(q);
    CHECK(is_subdirectly_irreducible(s, Ideal::maximal(s)));
    CHECK(is_subdirectly_irreducible(s, Ideal::zero(s)));

    TripleRing flat(q, 2, 1);
    CHECK_FALSE(is_subdirectly_irreducible(flat, Ideal::zero(flat)));
    CHECK_THROWS_AS(is_subdirectly_irreducible(flat, Ideal::whole(flat)), std::invalid_argument);
}

TEST_CASE("composition length examples") {
    Field q = Field::rationals();
    TripleRing s = unit_square_ring(q);
    CHECK(composition_length(s, Ideal::maximal(s)) == 1);
    CHECK(composition_length(s, Ideal::zero(s)) == 3);

    TripleRing flat(q, 3, 1);
    Ideal line = Ideal::generated_by(flat, {sv(q, {1, 0, 0, 0})});
    CHECK(composition_length(flat, line) == 1 + 3 + 1 - 1);
}

TEST_CASE("V_f examples") {
    Field q = Field::rationals();

    TripleRing s3(q, 3, 1);
    s3.set_beta(0, 0, sv(q, {1}));
    SubspaceBasis dom = socle(s3).space();

    Functional zero_f(s3, dom, zero_vec(q, dom.dim()));
    CHECK(v_f_subspace(s3, zero_f) == Ideal::maximal(s3));

    // Socle basis rows are e1, e2, e3 here; the W dual is the last one.
    Vec coeffs = zero_vec(q, 3);
    coeffs[2] = Scalar::one(q);
    Functional w_dual(s3, dom, coeffs);
    Ideal vf = v_f_subspace(s3, w_dual);
    CHECK(vf.dim() == 3);
    CHECK(vf.contains(sv(q, {0, 1, 0, 0})));
    CHECK(vf.contains(sv(q, {0, 0, 1, 0})));
    CHECK(vf.contains(sv(q, {0, 0, 0, 1})));
    CHECK_FALSE(vf.contains(sv(q, {1, 0, 0, 0})));
    CHECK(vf.contains(socle(s3).space().basis_vector(0)));

    TripleRing gram(q, 2, 1);
    gram.set_beta(0, 0, sv(q, {1}));
    gram.set_beta(1, 1, sv(q, {1}));
    Functional wd(gram, socle(gram).space(), Vec{Scalar::one(q)});
    Ideal vf2 = v_f_subspace(gram, wd);
    CHECK(vf2.dim() == 1);
    CHECK(vf2.contains(sv(q, {0, 0, 1})));

    // Domain must be the socle itself.
    CHECK_THROWS_AS(Functional(gram, SubspaceBasis::zero(q, 3), Vec{}),
                    std::invalid_argument);
}

TEST_CASE("socle equals annihilator colon across small GF(2) rings") {
    for (auto dims : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (const TripleRing& s : all_gf2_rings(dims.first, dims.second)) {
            CHECK(colon(s, Ideal::zero(s), Ideal::maximal(s)) == socle(s));
        }
    }
}

TEST_CASE("colon by the radical square iterates") {
    for (auto dims : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (const TripleRing& s : all_gf2_rings(dims.first, dims.second)) {
            Ideal m = Ideal::maximal(s);
            Ideal m2 = radical_square(s);
            for (const Ideal& i : all_ideals(s)) {
                Ideal lhs = colon(s, i, m2);
                Ideal step = colon(s, i, m);
                Ideal rhs = step.is_whole() ? Ideal::whole(s) : colon(s, step, m);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("length is additive over enumerated ideals") {
    for (const TripleRing& s : all_gf2_rings(2, 2)) {
        std::size_t total = composition_length(s, Ideal::zero(s));
        for (const Ideal& i : all_ideals(s))
            CHECK(total == composition_length(s, i) + i.dim());
    }
}

TEST_CASE("V_f always contains the socle") {
    std::mt19937_64 rng(91);
    for (int rr = 0; rr < 8; ++rr) {
        std::uniform_int_distribution<std::size_t> d(1, 3);
        TripleRing s = random_ring(Field::prime(3), d(rng), d(rng), rng);
        SubspaceBasis dom = socle(s).space();
        for (int rep = 0; rep < 6; ++rep) {
            Vec coeffs;
            for (std::size_t i = 0; i < dom.dim(); ++i)
                coeffs.push_back(testio::random_scalar(s.field(), rng));
            Ideal vf = v_f_subspace(s, Functional(s, dom, coeffs));
            CHECK(vf.space().contains(dom));
        }
    }
}
