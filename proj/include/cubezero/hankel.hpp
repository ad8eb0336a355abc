#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubezero/matrix.hpp"

namespace cubezero {

// A scalar sequence h_0, h_1, ... given exactly: a finite prefix with zero
// tail, a linear recurrence, or the reciprocals 1/(n+1). The last is the one
// sequence here whose Hankel matrices never go singular.
class HankelSeq {
public:
    enum class Kind { Explicit, Recurrence, Hilbert };

    static HankelSeq explicit_prefix(const Field& f, Vec prefix);
    // h_{n+d} = sum_i coeffs[i] * h_{n+i} with d = initial.size().
    static HankelSeq recurrence(const Field& f, Vec initial, Vec coeffs);
    // The Hilbert sequence h_n = 1/(n+1). Rejected over finite fields:
    // the reciprocals need characteristic zero.
    static HankelSeq hilbert(const Field& f);
    static HankelSeq hilbert() { return hilbert(Field::rationals()); }

    Kind kind() const { return kind_; }
    const Field& field() const { return field_; }
    const Vec& prefix() const { return terms_; }
    const Vec& initial() const { return terms_; }
    const Vec& coeffs() const { return coeffs_; }
    std::size_t order() const { return coeffs_.size(); }

    Scalar value(std::size_t n) const;

private:
    HankelSeq(Kind k, const Field& f, Vec terms, Vec coeffs)
        : kind_(k), field_(f), terms_(std::move(terms)), coeffs_(std::move(coeffs)) {}

    Kind kind_;
    Field field_;
    Vec terms_;   // Explicit prefix or Recurrence initial values
    Vec coeffs_;  // Recurrence only
};

// The symmetric form beta on a countable basis of V: either a finite symmetric
// table of entries, or the Hankel rule beta(v_i, v_j) = h_{i+j}.
class SeqSpec {
public:
    enum class Kind { FiniteSupport, Hankel };

    // Entries are symmetrized; a conflicting duplicate throws.
    static SeqSpec finite_support(
        const Field& f,
        const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries);
    static SeqSpec hankel(HankelSeq seq);

    Kind kind() const { return kind_; }
    const Field& field() const { return field_; }
    const HankelSeq& seq() const;
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& table() const { return table_; }

    Scalar beta(std::size_t i, std::size_t j) const;
    // Smallest n with all table indices < n; 0 for an empty table.
    std::size_t support_bound() const;

private:
    SeqSpec(Kind k, const Field& f, std::optional<HankelSeq> seq)
        : kind_(k), field_(f), seq_(std::move(seq)) {}

    Kind kind_;
    Field field_;
    std::optional<HankelSeq> seq_;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> table_;
};

// The ring F x V x F with countably infinite-dimensional V and the given form.
struct SequenceTriple {
    Field field;
    SeqSpec form;
};

SequenceTriple make_sequence_triple(const Field& f, SeqSpec form);

Scalar seq_value(const HankelSeq& s, std::size_t n);

// N x N matrix with entry (i,j) = h_{i+j}.
Matrix hankel_matrix(const HankelSeq& s, std::size_t n);

// det of the n x n reciprocal Hankel matrix: c_n^4 / c_{2n} with
// c_n = prod_{i=1}^{n-1} i^(n-i).
Scalar hilbert_det_formula(std::size_t n);

// Rank of the infinite Gram matrix of the form, when that is decidable from
// the sequence description; otherwise a lower bound from a window of the
// given size.
struct FormRank {
    bool finite;
    std::size_t value;  // exact rank, or the witnessed lower bound

    bool operator==(const FormRank& o) const { return finite == o.finite && value == o.value; }
};

FormRank form_rank(const SeqSpec& s, std::size_t window);

// Smallest-order recurrence consistent with h_0..h_{window-1}, searched up to
// order window/2. A candidate order is accepted only when the window yields
// more shifted equations than unknowns, so the answer is a certificate, not a
// curve fit.
struct Recurrence {
    std::size_t order;
    Vec coeffs;
};

std::optional<Recurrence> minimal_recurrence(const HankelSeq& s, std::size_t window);

// True iff every leading k x k Hankel determinant up to N is nonzero.
bool nondegeneracy_certificate(const HankelSeq& s, std::size_t n);

// Whether the functional sits in the finite dual: the largest ideal inside
// its kernel has finite codimension exactly when the form has finite rank.
struct DualMembership {
    bool in_finite_dual;
    std::size_t value;  // codimension, or the exhausted window

    bool operator==(const DualMembership& o) const {
        return in_finite_dual == o.in_finite_dual && value == o.value;
    }
};

DualMembership finite_dual_membership(const HankelSeq& s, std::size_t window);

}  // namespace cubezero
