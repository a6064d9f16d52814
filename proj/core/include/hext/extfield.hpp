#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hext/error.hpp"

namespace hext {

class ExtElem;

/// F_{p^k}, realized as F_p[z] modulo a monic irreducible found by
/// deterministic search. Used only for determinant identity testing on
/// grids that need more distinct points than F_p provides.
class ExtField : public std::enable_shared_from_this<ExtField> {
public:
    /// Smallest k with p^k >= min_points.
    static std::shared_ptr<const ExtField> make(std::uint32_t p, std::uint64_t min_points);

    std::uint32_t p() const { return p_; }
    std::size_t degree() const { return k_; }
    std::uint64_t size() const;

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem from_base(std::int64_t residue) const;
    /// Deterministic enumeration of field elements; indices < p are the base
    /// residues 0..p-1, in order.
    ExtElem element_at(std::uint64_t index) const;

    const std::vector<std::int64_t>& modulus() const { return modulus_; }

private:
    friend class ExtElem;
    std::uint32_t p_;
    std::size_t k_;
    std::vector<std::int64_t> modulus_;  // monic, length k+1, ascending degree

    ExtField(std::uint32_t p, std::size_t k, std::vector<std::int64_t> modulus)
        : p_(p), k_(k), modulus_(std::move(modulus)) {}
};

class ExtElem {
public:
    ExtElem() = default;

    bool is_zero() const;
    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
    ExtElem inverse() const;
    bool operator==(const ExtElem& o) const;

    std::string str() const;
    bool is_base() const;  // lies in the prime subfield
    std::int64_t base_residue() const;

private:
    friend class ExtField;
    std::shared_ptr<const ExtField> field_;
    std::vector<std::int64_t> coeffs_;  // length k, ascending degree

    void check(const ExtElem& o) const;
};

}  // namespace hext
