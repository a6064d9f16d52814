#include "hext/extfield.hpp"

#include <algorithm>
#include <string>

namespace hext {

namespace {

using Poly = std::vector<std::int64_t>;  // ascending degree, coefficients in [0, p)

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error("inv_mod: not invertible");
    return mod_pos(t, p);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero_poly(const Poly& a) { return a.empty(); }

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

// a mod m, with m monic.
Poly rem(Poly a, const Poly& m, std::int64_t p) {
    trim(a);
    while (a.size() >= m.size()) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[i + shift] = mod_pos(a[i + shift] - lead * m[i] % p, p);
        trim(a);
    }
    return a;
}

// quotient and remainder of a by monic... only quotient*divisor subtraction needed; see inverse().
struct DivResult {
    Poly quotient;
    Poly remainder;
};

DivResult divmod(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    DivResult out;
    if (a.size() < b.size()) {
        out.remainder = a;
        return out;
    }
    out.quotient.assign(a.size() - b.size() + 1, 0);
    std::int64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !is_zero_poly(a)) {
        std::size_t shift = a.size() - b.size();
        std::int64_t coef = a.back() * lead_inv % p;
        out.quotient[shift] = (out.quotient[shift] + coef) % p;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = mod_pos(a[i + shift] - coef * b[i] % p, p);
        trim(a);
    }
    out.remainder = a;
    trim(out.quotient);
    return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::int64_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (is_zero_poly(rem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const ExtField> ExtField::make(std::uint32_t p, std::uint64_t min_points) {
    std::size_t k = 1;
    std::uint64_t size = p;
    while (size < min_points) {
        size *= p;
        ++k;
        if (k > 8) throw Error("extension degree too large for PIT grid");
    }
    Poly modulus;
    if (k == 1) {
        modulus = {0, 1};  // unused, arithmetic stays in F_p
    } else {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly f(k + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < k; ++i) {
                f[i] = static_cast<std::int64_t>(t % p);
                t /= p;
            }
            f[k] = 1;
            if (is_irreducible(f, p)) {
                modulus = f;
                break;
            }
        }
        if (modulus.empty()) throw Error("no irreducible polynomial found");  // unreachable
    }
    return std::shared_ptr<const ExtField>(new ExtField(p, k, std::move(modulus)));
}

std::uint64_t ExtField::size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k_; ++i) s *= p_;
    return s;
}

ExtElem ExtField::zero() const { return from_base(0); }
ExtElem ExtField::one() const { return from_base(1); }

ExtElem ExtField::from_base(std::int64_t residue) const {
    ExtElem e;
    e.field_ = shared_from_this();
    e.coeffs_.assign(k_, 0);
    e.coeffs_[0] = mod_pos(residue, p_);
    return e;
}

ExtElem ExtField::element_at(std::uint64_t index) const {
    if (index >= size()) throw Error("extension field enumeration out of range");
    ExtElem e;
    e.field_ = shared_from_this();
    e.coeffs_.assign(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        e.coeffs_[i] = static_cast<std::int64_t>(index % p_);
        index /= p_;
    }
    return e;
}

void ExtElem::check(const ExtElem& o) const {
    if (!field_ || !o.field_ || field_->p() != o.field_->p() ||
        field_->degree() != o.field_->degree())
        throw FieldMismatch("extension field element mismatch");
}

bool ExtElem::is_zero() const {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool ExtElem::is_base() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::int64_t ExtElem::base_residue() const {
    if (!is_base()) throw Error("element not in the prime subfield");
    return coeffs_[0];
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check(o);
    ExtElem e = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        e.coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % field_->p();
    return e;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check(o);
    ExtElem e = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        e.coeffs_[i] = mod_pos(coeffs_[i] - o.coeffs_[i], field_->p());
    return e;
}

ExtElem ExtElem::operator-() const {
    ExtElem e = *this;
    for (auto& c : e.coeffs_) c = c == 0 ? 0 : field_->p() - c;
    return e;
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check(o);
    const std::int64_t p = field_->p();
    Poly r = rem(mul(coeffs_, o.coeffs_, p), field_->modulus(), p);
    ExtElem e = *this;
    e.coeffs_.assign(field_->degree(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) e.coeffs_[i] = r[i];
    return e;
}

ExtElem ExtElem::inverse() const {
    if (is_zero()) throw Error("extension field: division by zero");
    const std::int64_t p = field_->p();
    if (field_->degree() == 1) {
        ExtElem e = *this;
        e.coeffs_[0] = inv_mod(coeffs_[0], p);
        return e;
    }
    // extended Euclid over F_p[z]: t * self = gcd (mod modulus)
    Poly r0 = field_->modulus(), r1 = coeffs_;
    trim(r1);
    Poly t0 = {}, t1 = {1};
    while (!is_zero_poly(r1)) {
        DivResult d = divmod(r0, r1, p);
        Poly qt1 = mul(d.quotient, t1, p);
        Poly nt = t0;
        nt.resize(std::max(nt.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i) nt[i] = mod_pos(nt[i] - qt1[i], p);
        trim(nt);
        t0 = t1;
        t1 = nt;
        r0 = r1;
        r1 = d.remainder;
    }
    if (r0.size() != 1) throw Error("extension field inverse: gcd not constant");
    std::int64_t scale = inv_mod(r0[0], p);
    ExtElem e = *this;
    e.coeffs_.assign(field_->degree(), 0);
    for (std::size_t i = 0; i < t0.size(); ++i) e.coeffs_[i] = t0[i] * scale % p;
    return e;
}

bool ExtElem::operator==(const ExtElem& o) const {
    check(o);
    return coeffs_ == o.coeffs_;
}

std::string ExtElem::str() const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0)
            s += std::to_string(coeffs_[i]);
        else if (coeffs_[i] == 1)
            s += i == 1 ? "z" : "z^" + std::to_string(i);
        else
            s += std::to_string(coeffs_[i]) + (i == 1 ? "z" : "z^" + std::to_string(i));
    }
    return first ? "0" : s;
}

}  // namespace hext
