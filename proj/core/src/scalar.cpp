#include "hext/scalar.hpp"

namespace hext {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; a in [1, p), p prime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("element not invertible mod p");
    return mod_pos(t, p);
}

std::int64_t mpz_mod_to_int(const mpz_class& z, std::int64_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_si();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31)) throw Error("prime field characteristic must be < 2^31");
    if (!is_prime_u32(p)) throw Error("prime_field(" + std::to_string(p) + "): p is not prime");
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    Scalar s;
    s.field_ = *this;
    if (kind_ == Kind::rationals) {
        s.q_ = mpq_class(static_cast<long>(v));
    } else {
        s.r_ = mod_pos(v, p_);
    }
    return s;
}

Scalar Field::from_mpq(const mpq_class& q) const {
    Scalar s;
    s.field_ = *this;
    if (kind_ == Kind::rationals) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        std::int64_t den = mpz_mod_to_int(q.get_den(), p_);
        if (den == 0)
            throw Error("denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p_));
        std::int64_t num = mpz_mod_to_int(q.get_num(), p_);
        s.r_ = num * mod_inverse(den, p_) % p_;
    }
    return s;
}

Scalar Field::from_string(const std::string& text) const {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error("bad scalar literal: '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator in scalar literal: '" + text + "'");
    q.canonicalize();
    return from_mpq(q);
}

std::string Field::str() const {
    return kind_ == Kind::rationals ? "rationals" : "F_" + std::to_string(p_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("mixed field tags: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? r_ == 1 : q_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field())
        s.r_ = (r_ + o.r_) % field_.p();
    else
        s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field())
        s.r_ = mod_pos(r_ - o.r_, field_.p());
    else
        s.q_ = q_ - o.q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field())
        s.r_ = (r_ * o.r_) % field_.p();  // p < 2^31, product fits in int64
    else
        s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field())
        s.r_ = r_ == 0 ? 0 : field_.p() - r_;
    else
        s.q_ = -q_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return field_.is_prime_field() ? r_ < o.r_ : q_ < o.q_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field())
        s.r_ = mod_inverse(r_, field_.p());
    else
        s.q_ = 1 / q_;
    return s;
}

std::string Scalar::str() const {
    return field_.is_prime_field() ? std::to_string(r_) : q_.get_str();
}

}  // namespace hext
