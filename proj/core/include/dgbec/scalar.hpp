#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dgbec {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Either F_p (p prime, p < 2^31) or Q.
class Field {
public:
    Field() = default;
    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(); }

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }
    std::string describe() const;

    std::uint32_t reduce(long long v) const;
    std::uint32_t reduce(const mpz_class& v) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, long long v);
    Scalar(Field f, const mpq_class& q);
    static Scalar zero(Field f) { return Scalar(f, 0LL); }
    static Scalar one(Field f) { return Scalar(f, 1LL); }
    static Scalar from_residue(Field f, std::uint32_t r);
    // Integers, "a/b" rationals; in F_p a rational is read as a * b^{-1}.
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return f_; }
    std::uint32_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }

    bool is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text: residues in [0, p) for F_p, reduced a/b for Q.
    std::string str() const;

private:
    Field f_;
    std::uint32_t r_ = 0;
    mpq_class q_;
};

}  // namespace dgbec
