#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubezero/hankel.hpp"
#include "cubezero/presented_algebra.hpp"
#include "cubezero/triple_ring.hpp"

namespace cubezero {

// Decision: do injective hulls of the simple modules stay locally Artinian.
// HOLDS and FAILS are only ever emitted with a witness that is valid for the
// whole ring, never from window evidence alone; UNKNOWN carries the window.
enum class Outcome { Holds, Fails, Unknown };

// Evidence for a FAILS verdict on F x V x F: the W-coordinate functional
// whose form stays non-degenerate at every size.
struct BadFactorCert {
    std::string functional;
    std::size_t witnessed_corank;  // corank checked explicitly up to this bound
    bool certified_all_n;          // closed-form determinant argument
    std::string factor_shape;
};

struct Verdict {
    enum class Witness {
        ArtinianFiniteDim,
        SocleCodimFinite,
        BadFunctional,
        BadFactor,
        WindowExhausted,
    };

    Outcome outcome;
    Witness witness;
    std::size_t bound = 0;  // codim for SocleCodimFinite, total dim for
                            // ArtinianFiniteDim, window for WindowExhausted
    std::string detail;
    std::optional<BadFactorCert> cert;
    std::optional<std::string> shortcut;  // lemma tag when one decided this
};

inline constexpr std::size_t kDefaultWindow = 16;

Verdict decide_diamond(const TripleRing& s, std::size_t window = kDefaultWindow);
// Validated, then routed through its graded ring so the finite path is shared.
Verdict decide_diamond(const PresentedAlgebra& a, std::size_t window = kDefaultWindow);
Verdict decide_diamond(const SequenceTriple& t, std::size_t window = kDefaultWindow);

// Sufficient conditions that settle the question without the main procedure:
// a square-zero maximal ideal, a finite-dimensional m/Soc, or a finite socle
// under an infinite-dimensional m/Soc. Absent those, nothing is returned.
std::optional<Verdict> shortcut_lemmas(const TripleRing& s);
std::optional<Verdict> shortcut_lemmas(const PresentedAlgebra& a);
std::optional<Verdict> shortcut_lemmas(const SequenceTriple& t);

// Codimension of V_f in m for the functional with the given W-part. Zero
// W-part forces V_f = m; otherwise this is the rank of the form.
FormRank v_f_corank(const SequenceTriple& t, const Scalar& f_w, std::size_t window);

// Constructs the failure certificate when the verdict is FAILS.
std::optional<BadFactorCert> find_bad_factor(const SequenceTriple& t,
                                             std::size_t window = kDefaultWindow);

// For each functional f on the socle of gr(A) in a spanning set of the dual
// (every functional over a finite field), pulls f back to g on Soc(A) via the
// graded class map and checks the subspace identity
//   V_f in gr(A)  ==  the graded ideal of V_g in A.
struct EquivalenceReport {
    std::size_t functionals = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

EquivalenceReport check_gr_equivalence(const PresentedAlgebra& a);

}  // namespace cubezero
