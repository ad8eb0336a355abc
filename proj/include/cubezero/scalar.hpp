#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "cubezero/field.hpp"

namespace cubezero {

// Exact field element. Over Q the value is an arbitrary-precision fraction
// kept in lowest terms with positive denominator; over GF(p) it is the
// canonical representative in [0, p). Arithmetic never rounds.
class Scalar {
public:
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    // Reduces an integer into the field (mod p, or exact over Q).
    static Scalar from_int(const Field& f, long value);
    static Scalar rational(long num, long den);
    static Scalar rational(const mpq_class& q);
    static Scalar mod_p(const Field& f, const mpz_class& value);
    // Accepts "n" or "n/d" with optional sign; over GF(p) the value is reduced.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws std::domain_error on zero divisor
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Valid over Q only.
    const mpq_class& rational_value() const;
    // Valid over GF(p) only.
    std::uint32_t residue() const;

    std::string to_string() const;

private:
    Scalar(const Field& f, mpq_class q, std::uint32_t r) : field_(f), q_(std::move(q)), r_(r) {}

    void require_same_field(const Scalar& o) const;

    Field field_ = Field::rationals();
    mpq_class q_;         // used when field is Q
    std::uint32_t r_ = 0; // used when field is GF(p)
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cubezero
