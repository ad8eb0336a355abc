#pragma once

#include <cstdint>
#include <string>

namespace cubezero {

// Coefficient field of a computation: the rationals, or a prime field GF(p)
// with p < 2^31. Every Scalar, Matrix and SubspaceBasis carries one; mixing
// fields in an operation is an error.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);  // throws std::invalid_argument unless p is prime, p < 2^31

    bool is_rational() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    std::uint32_t modulus() const;  // throws on Q

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

    std::string to_string() const;  // "Q" or "GF(p)"

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;  // 0 encodes Q
};

}  // namespace cubezero
