#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cubezero/hankel.hpp"
#include "test_oracles.hpp"

using namespace cubezero;

namespace {

Field Q = Field::rationals();

Vec sv(const Field& f, std::vector<long> vals) {
    Vec out;
    for (long x : vals) out.push_back(Scalar::from_int(f, x));
    return out;
}

HankelSeq ones() { return HankelSeq::recurrence(Q, sv(Q, {1}), sv(Q, {1})); }

HankelSeq fibonacci() { return HankelSeq::recurrence(Q, sv(Q, {1, 1}), sv(Q, {1, 1})); }

// True iff some r x r minor of m is nonzero; r = 0 counts as true.
bool has_nonzero_minor(const Matrix& m, std::size_t r) {
    if (r == 0) return true;
    if (r > m.rows() || r > m.cols()) return false;
    std::vector<std::size_t> rows(r), cols(r);
    std::function<bool(std::size_t, std::size_t, bool)> pick = [&](std::size_t pos,
                                                                   std::size_t start,
                                                                   bool picking_rows) {
        if (pos == r) {
            if (picking_rows) return pick(0, 0, false);
            Matrix sub(m.field(), r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            return !det(sub).is_zero();
        }
        std::size_t limit = picking_rows ? m.rows() : m.cols();
        for (std::size_t x = start; x + (r - pos) <= limit; ++x) {
            (picking_rows ? rows : cols)[pos] = x;
            if (pick(pos + 1, x + 1, picking_rows)) return true;
        }
        return false;
    };
    return pick(0, 0, true);
}

}  // namespace

TEST_CASE("sequence values") {
    HankelSeq h = HankelSeq::hilbert();
    CHECK(seq_value(h, 0).is_one());
    CHECK(seq_value(h, 3) == Scalar::rational(1, 4));

    CHECK(seq_value(ones(), 100).is_one());

    HankelSeq fib = fibonacci();
    CHECK(seq_value(fib, 6) == Scalar::from_int(Q, 13));

    CHECK_THROWS_AS(HankelSeq::hilbert(Field::prime(5)), std::invalid_argument);
    CHECK_THROWS_AS(HankelSeq::recurrence(Q, sv(Q, {1}), sv(Q, {1, 1})),
                    std::invalid_argument);
}

TEST_CASE("window matrices") {
    Matrix h2 = hankel_matrix(HankelSeq::hilbert(), 2);
    CHECK(h2.at(0, 0).is_one());
    CHECK(h2.at(0, 1) == Scalar::rational(1, 2));
    CHECK(h2.at(1, 0) == Scalar::rational(1, 2));
    CHECK(h2.at(1, 1) == Scalar::rational(1, 3));

    Matrix ones3 = hankel_matrix(ones(), 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ones3.at(i, j).is_one());

    Matrix spike = hankel_matrix(HankelSeq::explicit_prefix(Q, sv(Q, {1})), 2);
    CHECK(spike == Matrix::from_int_rows(Q, {{1, 0}, {0, 0}}));
}

TEST_CASE("closed-form determinants") {
    CHECK(hilbert_det_formula(1).is_one());
    CHECK(hilbert_det_formula(2) == Scalar::rational(1, 12));
    CHECK(hilbert_det_formula(3) == Scalar::rational(1, 2160));

    HankelSeq h = HankelSeq::hilbert();
    for (std::size_t n = 1; n <= 12; ++n)
        CHECK(hilbert_det_formula(n) == det(hankel_matrix(h, n)));
}

TEST_CASE("form rank examples") {
    SeqSpec point = SeqSpec::finite_support(Q, {{0, 0, Scalar::one(Q)}});
    CHECK(form_rank(point, 4) == FormRank{true, 1});

    CHECK(form_rank(SeqSpec::hankel(HankelSeq::hilbert()), 5) == FormRank{false, 5});

    CHECK(form_rank(SeqSpec::hankel(ones()), 6) == FormRank{true, 1});
    CHECK(form_rank(SeqSpec::hankel(fibonacci()), 6) == FormRank{true, 2});

    CHECK(form_rank(SeqSpec::hankel(HankelSeq::explicit_prefix(Q, {})), 3) ==
          FormRank{true, 0});
    CHECK(form_rank(SeqSpec::hankel(HankelSeq::explicit_prefix(Q, sv(Q, {1}))), 3) ==
          FormRank{true, 1});

    // Declared order higher than the true one: the rank sees through it.
    HankelSeq padded = HankelSeq::recurrence(Q, sv(Q, {1, 1}), sv(Q, {-1, 2}));
    CHECK(form_rank(SeqSpec::hankel(padded), 6) == FormRank{true, 1});
}

TEST_CASE("finite support tables") {
    Scalar one = Scalar::one(Q);
    SeqSpec s = SeqSpec::finite_support(Q, {{0, 2, one}, {1, 1, one}});
    CHECK(s.beta(2, 0) == one);
    CHECK(s.beta(0, 2) == one);
    CHECK(s.beta(1, 1) == one);
    CHECK(s.beta(4, 7).is_zero());
    CHECK(s.support_bound() == 3);
    // Gram block is the anti-diagonal [[0,0,1],[0,1,0],[1,0,0]].
    CHECK(form_rank(s, 2) == FormRank{true, 3});

    CHECK_THROWS_AS(
        SeqSpec::finite_support(Q, {{0, 1, one}, {1, 0, Scalar::from_int(Q, 2)}}),
        std::invalid_argument);

    CHECK_THROWS_AS(make_sequence_triple(Field::prime(2), SeqSpec::hankel(ones())),
                    std::invalid_argument);
    SequenceTriple t = make_sequence_triple(Q, SeqSpec::hankel(ones()));
    CHECK(t.field.is_rational());
}

TEST_CASE("recurrence ranks carry minor witnesses") {
    std::vector<std::pair<HankelSeq, std::size_t>> cases = {
        {ones(), 1},
        {fibonacci(), 2},
        {HankelSeq::recurrence(Q, sv(Q, {1}), sv(Q, {2})), 1},
        {HankelSeq::recurrence(Q, sv(Q, {1, 2, 3}), sv(Q, {1, 0, 0})), 3},
        {HankelSeq::recurrence(Q, sv(Q, {0, 0}), sv(Q, {1, 1})), 0},
    };
    for (const auto& [seq, expected] : cases) {
        FormRank fr = form_rank(SeqSpec::hankel(seq), 8);
        REQUIRE(fr.finite);
        CHECK(fr.value == expected);

        std::size_t window = seq.order() + expected + 1;
        Matrix m = hankel_matrix(seq, window);
        CHECK(rank(m) == expected);
        CHECK(has_nonzero_minor(m, expected));
        CHECK_FALSE(has_nonzero_minor(m, expected + 1));
    }
}

TEST_CASE("minimal recurrences") {
    auto r1 = minimal_recurrence(ones(), 6);
    REQUIRE(r1.has_value());
    CHECK(r1->order == 1);
    CHECK(r1->coeffs == sv(Q, {1}));

    auto r2 = minimal_recurrence(fibonacci(), 6);
    REQUIRE(r2.has_value());
    CHECK(r2->order == 2);
    CHECK(r2->coeffs == sv(Q, {1, 1}));

    CHECK_FALSE(minimal_recurrence(HankelSeq::hilbert(), 8).has_value());
}

TEST_CASE("found recurrences reproduce the window") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<std::size_t> od(1, 3);
        std::size_t d = od(rng);
        Vec init, coeffs;
        for (std::size_t i = 0; i < d; ++i) {
            init.push_back(testio::random_scalar(Q, rng));
            coeffs.push_back(testio::random_scalar(Q, rng));
        }
        HankelSeq s = HankelSeq::recurrence(Q, init, coeffs);
        std::size_t window = 10;
        auto found = minimal_recurrence(s, window);
        REQUIRE(found.has_value());
        CHECK(found->order <= d);
        for (std::size_t n = 0; n + found->order < window; ++n) {
            Scalar predicted = Scalar::zero(Q);
            for (std::size_t i = 0; i < found->order; ++i)
                predicted += found->coeffs[i] * seq_value(s, n + i);
            CHECK(predicted == seq_value(s, n + found->order));
        }
    }
}

TEST_CASE("nondegeneracy certificates") {
    CHECK(nondegeneracy_certificate(HankelSeq::hilbert(), 10));
    CHECK_FALSE(nondegeneracy_certificate(HankelSeq::explicit_prefix(Q, sv(Q, {1})), 2));
    CHECK_FALSE(nondegeneracy_certificate(ones(), 2));

    // Certificate at N forces window rank N.
    for (std::size_t n : {1, 2, 3, 5}) {
        if (nondegeneracy_certificate(HankelSeq::hilbert(), n)) {
            FormRank fr = form_rank(SeqSpec::hankel(HankelSeq::hilbert()), n);
            CHECK_FALSE(fr.finite);
            CHECK(fr.value == n);
        }
    }
    HankelSeq geo = HankelSeq::recurrence(Q, sv(Q, {1}), sv(Q, {2}));
    CHECK(nondegeneracy_certificate(geo, 1));
    FormRank fr = form_rank(SeqSpec::hankel(geo), 1);
    CHECK(fr.finite);
    CHECK(fr.value >= 1);
}

TEST_CASE("finite dual membership") {
    CHECK(finite_dual_membership(ones(), 6) == DualMembership{true, 1});
    CHECK(finite_dual_membership(HankelSeq::hilbert(), 10) == DualMembership{false, 10});
    CHECK(finite_dual_membership(HankelSeq::explicit_prefix(Q, sv(Q, {1})), 4) ==
          DualMembership{true, 1});
}
