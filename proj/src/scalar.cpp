#include "cubezero/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace cubezero {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Modular inverse via extended Euclid; a must be nonzero mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("field modulus must be a prime below 2^31");
    return Field(p);
}

std::uint32_t Field::modulus() const {
    if (p_ == 0) throw std::invalid_argument("the rationals have no modulus");
    return p_;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const Field& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.modulus());
}

Scalar Scalar::from_int(const Field& f, long value) {
    if (f.is_rational()) return Scalar(f, mpq_class(value), 0);
    return mod_p(f, mpz_class(value));
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Field::rationals(), std::move(q), 0);
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(Field::rationals(), std::move(c), 0);
}

Scalar Scalar::mod_p(const Field& f, const mpz_class& value) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), mpz_class(f.modulus()).get_mpz_t());
    return Scalar(f, mpq_class(0), static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    mpz_class num, den = 1;
    try {
        num = mpz_class(slash == std::string::npos ? text : text.substr(0, slash));
        if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed scalar '" + text + "'");
    }
    if (den == 0) throw std::domain_error("zero denominator in '" + text + "'");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(f, std::move(q), 0);
    }
    Scalar n = mod_p(f, num);
    Scalar d = mod_p(f, den);
    return n / d;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-q_), 0);
    std::uint32_t p = field_.modulus();
    return Scalar(field_, mpq_class(0), r_ == 0 ? 0 : p - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ + o.q_), 0);
    std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
    std::uint32_t p = field_.modulus();
    return Scalar(field_, mpq_class(0), static_cast<std::uint32_t>(s >= p ? s - p : s));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ * o.q_), 0);
    std::uint64_t prod = static_cast<std::uint64_t>(r_) * o.r_;
    return Scalar(field_, mpq_class(0), static_cast<std::uint32_t>(prod % field_.modulus()));
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ / o.q_), 0);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("zero has no inverse");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / q_), 0);
    return Scalar(field_, mpq_class(0), inv_mod(r_, field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw std::invalid_argument("not a rational scalar");
    return q_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_finite()) throw std::invalid_argument("not a prime-field scalar");
    return r_;
}

std::string Scalar::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cubezero
