#include "cubezero/hankel.hpp"

#include <stdexcept>

#include "cubezero/subspace.hpp"

namespace cubezero {

HankelSeq HankelSeq::explicit_prefix(const Field& f, Vec prefix) {
    for (const auto& x : prefix)
        if (x.field() != f) throw std::invalid_argument("prefix term field mismatch");
    return HankelSeq(Kind::Explicit, f, std::move(prefix), {});
}

HankelSeq HankelSeq::recurrence(const Field& f, Vec initial, Vec coeffs) {
    if (initial.empty() || initial.size() != coeffs.size())
        throw std::invalid_argument("recurrence needs order >= 1 with matching term counts");
    for (const auto& x : initial)
        if (x.field() != f) throw std::invalid_argument("initial term field mismatch");
    for (const auto& x : coeffs)
        if (x.field() != f) throw std::invalid_argument("coefficient field mismatch");
    return HankelSeq(Kind::Recurrence, f, std::move(initial), std::move(coeffs));
}

HankelSeq HankelSeq::hilbert(const Field& f) {
    if (!f.is_rational())
        throw std::invalid_argument("the reciprocal sequence requires the rational field");
    return HankelSeq(Kind::Hilbert, f, {}, {});
}

Scalar HankelSeq::value(std::size_t n) const {
    switch (kind_) {
        case Kind::Explicit:
            return n < terms_.size() ? terms_[n] : Scalar::zero(field_);
        case Kind::Recurrence: {
            std::size_t d = terms_.size();
            if (n < d) return terms_[n];
            Vec state = terms_;
            for (std::size_t step = d; step <= n; ++step) {
                Scalar next = Scalar::zero(field_);
                for (std::size_t i = 0; i < d; ++i) next += coeffs_[i] * state[i];
                state.erase(state.begin());
                state.push_back(next);
            }
            return state.back();
        }
        case Kind::Hilbert:
            return Scalar::rational(mpq_class(1, static_cast<unsigned long>(n) + 1));
    }
    throw std::logic_error("unreachable");
}

Scalar seq_value(const HankelSeq& s, std::size_t n) { return s.value(n); }

SeqSpec SeqSpec::finite_support(
    const Field& f, const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries) {
    SeqSpec out(Kind::FiniteSupport, f, std::nullopt);
    for (const auto& [i, j, v] : entries) {
        if (v.field() != f) throw std::invalid_argument("table entry field mismatch");
        auto put = [&](std::size_t a, std::size_t b) {
            auto [it, fresh] = out.table_.emplace(std::make_pair(a, b), v);
            if (!fresh && it->second != v)
                throw std::invalid_argument("conflicting symmetric table entries");
        };
        put(i, j);
        put(j, i);
    }
    return out;
}

SeqSpec SeqSpec::hankel(HankelSeq seq) {
    Field f = seq.field();
    return SeqSpec(Kind::Hankel, f, std::move(seq));
}

const HankelSeq& SeqSpec::seq() const {
    if (kind_ != Kind::Hankel) throw std::logic_error("not a sequence-rule form");
    return *seq_;
}

Scalar SeqSpec::beta(std::size_t i, std::size_t j) const {
    if (kind_ == Kind::Hankel) return seq_->value(i + j);
    auto it = table_.find({i, j});
    return it == table_.end() ? Scalar::zero(field_) : it->second;
}

std::size_t SeqSpec::support_bound() const {
    std::size_t bound = 0;
    for (const auto& [key, v] : table_) {
        if (v.is_zero()) continue;
        bound = std::max(bound, std::max(key.first, key.second) + 1);
    }
    return bound;
}

SequenceTriple make_sequence_triple(const Field& f, SeqSpec form) {
    if (form.field() != f) throw std::invalid_argument("form field mismatch");
    return SequenceTriple{f, std::move(form)};
}

Matrix hankel_matrix(const HankelSeq& s, std::size_t n) {
    if (n == 0) throw std::invalid_argument("window must be at least 1");
    Matrix m(s.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = s.value(i + j);
    return m;
}

Scalar hilbert_det_formula(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix size must be at least 1");
    auto super_factorial = [](std::size_t m) {
        mpz_class c = 1;
        for (std::size_t i = 1; i < m; ++i) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), i, m - i);
            c *= pw;
        }
        return c;
    };
    mpz_class cn = super_factorial(n);
    mpz_class c2n = super_factorial(2 * n);
    mpq_class value(cn * cn * cn * cn, c2n);
    value.canonicalize();
    return Scalar::rational(value);
}

// Exact rank of the infinite Hankel matrix of a recurrent sequence: the span
// of the sliding state vectors (h_n..h_{n+d-1}) determines every full row, so
// its dimension is the rank, and it stabilizes within d steps.
static std::size_t recurrence_rank(const HankelSeq& s) {
    std::size_t d = s.order();
    std::vector<Vec> states;
    for (std::size_t n = 0; n <= d; ++n) {
        Vec state;
        for (std::size_t i = 0; i < d; ++i) state.push_back(s.value(n + i));
        states.push_back(std::move(state));
    }
    return SubspaceBasis::from_generators(s.field(), states, d).dim();
}

FormRank form_rank(const SeqSpec& s, std::size_t window) {
    if (window == 0) throw std::invalid_argument("window must be at least 1");
    if (s.kind() == SeqSpec::Kind::FiniteSupport) {
        std::size_t n = s.support_bound();
        if (n == 0) return {true, 0};
        Matrix gram(s.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = s.beta(i, j);
        return {true, rank(gram)};
    }

    const HankelSeq& seq = s.seq();
    switch (seq.kind()) {
        case HankelSeq::Kind::Explicit: {
            // All entries with i+j >= prefix length vanish, so a window of
            // the prefix length already holds every nonzero row.
            std::size_t n = seq.prefix().size();
            if (n == 0) return {true, 0};
            return {true, rank(hankel_matrix(seq, n))};
        }
        case HankelSeq::Kind::Recurrence:
            return {true, recurrence_rank(seq)};
        case HankelSeq::Kind::Hilbert: {
            std::size_t r = rank(hankel_matrix(seq, window));
            // A window never proves global finiteness, only a lower bound.
            return {false, r};
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<Recurrence> minimal_recurrence(const HankelSeq& s, std::size_t window) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    Vec terms;
    for (std::size_t n = 0; n < window; ++n) terms.push_back(s.value(n));

    for (std::size_t d = 1; d <= window / 2; ++d) {
        // Shifted rows (h_n .. h_{n+d}) for every n the window supports. An
        // order counts only when the system is overdetermined (rows >= d+1);
        // a bare square fit always exists and certifies nothing.
        std::size_t rows = window - d;
        if (rows < d + 1) break;
        Matrix m(s.field(), rows, d + 1);
        for (std::size_t n = 0; n < rows; ++n)
            for (std::size_t i = 0; i <= d; ++i) m.at(n, i) = terms[n + i];

        SubspaceBasis k = kernel(m);
        for (std::size_t r = 0; r < k.dim(); ++r) {
            Vec c = k.basis_vector(r);
            if (c[d].is_zero()) continue;
            Vec coeffs;
            for (std::size_t i = 0; i < d; ++i) coeffs.push_back(-(c[i] / c[d]));
            return Recurrence{d, std::move(coeffs)};
        }
    }
    return std::nullopt;
}

bool nondegeneracy_certificate(const HankelSeq& s, std::size_t n) {
    if (n == 0) throw std::invalid_argument("window must be at least 1");
    if (s.kind() == HankelSeq::Kind::Hilbert) {
        // The closed form c_k^4 / c_{2k} is a positive rational for every k,
        // so the certificate holds at any size without elimination work.
        return true;
    }
    for (std::size_t k = 1; k <= n; ++k)
        if (det(hankel_matrix(s, k)).is_zero()) return false;
    return true;
}

DualMembership finite_dual_membership(const HankelSeq& s, std::size_t window) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    FormRank r = form_rank(SeqSpec::hankel(s), window);
    if (r.finite) return {true, r.value};
    return {false, window};
}

}  // namespace cubezero
