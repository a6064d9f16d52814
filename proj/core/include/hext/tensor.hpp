#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hext/matrix.hpp"

namespace hext {

/// Hard cap on tensor-power basis sizes; configurable per call where it matters.
inline constexpr std::size_t kDefaultMaxTensorDim = 1u << 20;

/// dim^power, throwing DegreeCapExceeded beyond max_cells.
std::size_t tensor_dim(std::size_t dim, std::size_t power,
                       std::size_t max_cells = kDefaultMaxTensorDim);

/// Flat index of a multi-index in the lexicographic tensor basis
/// (first factor most significant).
std::size_t flatten(const std::vector<std::size_t>& idx, std::size_t dim);
std::vector<std::size_t> unflatten(std::size_t flat, std::size_t dim, std::size_t power);

/// Sparse element of A^{tensor degree+1} in the positional tensor basis.
struct ChainVector {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::map<std::vector<std::size_t>, Scalar> coords;  // multi-index of length degree+1

    void add(const std::vector<std::size_t>& idx, const Scalar& v);
    std::vector<Scalar> to_dense(const Field& f) const;
    static ChainVector from_dense(const Field& f, std::size_t degree, std::size_t algebra_dim,
                                  const std::vector<Scalar>& dense);
    bool is_zero() const;
};

ChainVector chain_sub(const ChainVector& a, const ChainVector& b);

/// Sparse element of Hom(A^{tensor degree}, M): (multi-index, target index) -> scalar.
struct CochainVector {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t coeff_dim = 0;
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, Scalar> coords;

    std::vector<Scalar> to_dense(const Field& f) const;  // flat order: multi-index major, target minor
    static CochainVector from_dense(const Field& f, std::size_t degree, std::size_t algebra_dim,
                                    std::size_t coeff_dim, const std::vector<Scalar>& dense);
};

/// A 2-cochain A (x) A -> M, stored densely: values[i][j] = coordinates of
/// alpha(e_i (x) e_j) in the module basis. The module is A* in the symmetry
/// pipeline but arbitrary bimodules are allowed.
struct Cochain2 {
    std::size_t algebra_dim = 0;
    std::size_t coeff_dim = 0;
    std::vector<std::vector<std::vector<Scalar>>> values;

    static Cochain2 zero(const Field& f, std::size_t adim, std::size_t mdim);
    const std::vector<Scalar>& at(std::size_t i, std::size_t j) const { return values[i][j]; }
    std::vector<Scalar>& at(std::size_t i, std::size_t j) { return values[i][j]; }

    /// alpha(a (x) b) for coordinate vectors a, b.
    std::vector<Scalar> evaluate(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                 const Field& f) const;

    std::vector<Scalar> to_dense(const Field& f) const;  // flat order (i,j) major, target minor
    static Cochain2 from_dense(const Field& f, std::size_t adim, std::size_t mdim,
                               const std::vector<Scalar>& dense);
    Cochain2 add(const Cochain2& o) const;
    bool is_zero() const;
};

/// Element of (A^{(x)3})*, dense over flat (i,j,k).
struct TildeForm {
    std::size_t algebra_dim = 0;
    std::vector<Scalar> coords;  // length algebra_dim^3

    static TildeForm zero(const Field& f, std::size_t adim);
    Scalar at(std::size_t i, std::size_t j, std::size_t k) const;
    bool is_zero() const;
};

/// An m-cochain with values in A itself (C^m(A,A)); degree 0 is an element of A.
struct AlgebraCochain {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::vector<std::vector<Scalar>> values;  // [flat m-index] -> A coordinates

    static AlgebraCochain zero(const Field& f, std::size_t m, std::size_t adim);
    static AlgebraCochain element(const Field& f, const std::vector<Scalar>& a);  // degree 0
};

}  // namespace hext
