#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hext/error.hpp"

namespace hext {

class Scalar;

/// Ground field descriptor: the rationals, or a prime field F_p with p < 2^31.
/// Every Scalar carries its field; mixing fields in one computation throws.
class Field {
public:
    enum class Kind { rationals, prime };

    Field() : kind_(Kind::rationals), p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_mpq(const mpq_class& q) const;
    // Accepts "n" or "n/d" with optional sign.
    Scalar from_string(const std::string& s) const;

    std::string str() const;

private:
    Kind kind_;
    std::uint32_t p_;
};

/// Exact field element. No floating point anywhere.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), q_(0), r_(0) {}

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order within one field (rationals by value, residues by representative);
    // used only for deterministic container ordering.
    bool operator<(const Scalar& o) const;

    Scalar inverse() const;

    const mpq_class& rational_value() const { return q_; }
    std::int64_t prime_residue() const { return r_; }

    std::string str() const;

private:
    friend class Field;
    Field field_;
    mpq_class q_;       // rationals
    std::int64_t r_;    // prime field residue in [0, p)

    void check_same_field(const Scalar& o) const;
};

}  // namespace hext
