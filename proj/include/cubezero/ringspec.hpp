#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "cubezero/hankel.hpp"
#include "cubezero/presented_algebra.hpp"
#include "cubezero/triple_ring.hpp"

namespace cubezero {

// Line-oriented plain-text ring descriptions. `#` starts a comment. The
// first directive picks the kind:
//
//   ring triple      bilinear-form presentation F x V x W
//     field Q | field GF <p>
//     dimV <n> / dimW <n>
//     beta i j : <dimW coords>        (symmetric; unset entries are zero)
//
//   ring struct      structure constants on a basis {e_0 = 1, e_1, ...}
//     field, dim <n>, optional maxideal 1 2 .. dim-1
//     mul i j : <dim coords>          (i, j >= 1; unset products are zero)
//
//   ring hankel      sequence triple F x V x F with beta(v_i, v_j) = h_{i+j}
//     field, then one of
//     seq hilbert                      h_n = 1/(n+1), rationals only
//     seq finite i:v,...               finitely supported sequence
//     seq recurrence init <terms> coeffs <terms>
//
// Coordinates split on spaces or commas; scalars use the Scalar syntax
// ("2", "-1/3", reduced mod p over GF(p)).

struct ParseError : std::runtime_error {
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
    ParseError(const std::string& message, std::size_t line, std::size_t column);
};

struct RingSpecFile {
    std::variant<TripleRing, PresentedAlgebra, SequenceTriple> ring;

    bool is_triple() const { return std::holds_alternative<TripleRing>(ring); }
    bool is_struct() const { return std::holds_alternative<PresentedAlgebra>(ring); }
    bool is_hankel() const { return std::holds_alternative<SequenceTriple>(ring); }

    const TripleRing& triple() const { return std::get<TripleRing>(ring); }
    const PresentedAlgebra& algebra() const { return std::get<PresentedAlgebra>(ring); }
    const SequenceTriple& sequence() const { return std::get<SequenceTriple>(ring); }

    const Field& field() const;
};

// Throws ParseError with the location of the first problem.
RingSpecFile parse_ring(const std::string& text);

// Canonical text: directives in fixed order, only nonzero entries, one space
// between tokens. parse_ring(serialize_ring(x)) reproduces x exactly.
std::string serialize_ring(const RingSpecFile& spec);
std::string serialize_triple(const TripleRing& s);

}  // namespace cubezero
