#pragma once

#include "hext/complexes.hpp"

namespace hext {

/// Matrix of the Connes boundary B_n : A^{(x) n+1} -> A^{(x) n+2},
/// B_n(a_0 (x) ... (x) a_n) = sum_i (-1)^{ni} (1 (x) a_i (x) ... (x) a_{i-1}
///                                  - a_i (x) 1 (x) a_{i+1} (x) ... (x) a_{i-1}).
Matrix connes_matrix(const Algebra& a, std::size_t n,
                     std::size_t max_cells = kDefaultMaxTensorDim);

/// Chain degrees of the total-complex piece T_n = (+)_{p>=0} A^{(x)(n-2p)+1}.
std::vector<std::size_t> total_components(std::size_t n);

/// Offsets and total dimension of T_n in the concatenated basis.
struct TotalLayout {
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
};
TotalLayout total_layout(const Algebra& a, std::size_t n,
                         std::size_t max_cells = kDefaultMaxTensorDim);

/// Total differential D_n : T_n -> T_{n-1}, assembled as d = b + B on the
/// bicomplex staircase (the verbatim operators anticommute, so no sign twist
/// is needed; D_{n-1} D_n = 0 is enforced by tests).
Matrix total_differential(const Algebra& a, std::size_t n,
                          std::size_t max_cells = kDefaultMaxTensorDim);

/// The convention note emitted in reports.
extern const char* const kTotalComplexConvention;

std::size_t cyclic_homology(const Algebra& a, std::size_t n,
                            std::size_t max_cells = kDefaultMaxTensorDim);
/// Computed independently on the dual (cochain) total complex; equals
/// cyclic_homology over a field.
std::size_t cyclic_cohomology(const Algebra& a, std::size_t n,
                              std::size_t max_cells = kDefaultMaxTensorDim);

/// A cyclic 2-cocycle in dual coordinates: beta in (A^{(x)3})*, gamma in A*,
/// with b_3^*(beta) = 0 and B_1^*(beta) + b_1^*(gamma) = 0.
struct CyclicClass2 {
    TildeForm beta;
    std::vector<Scalar> gamma;
};

struct LiftResult {
    bool ok = false;
    CyclicClass2 lift;                       // when ok
    std::vector<Scalar> eta;                 // the (A^{(x)2})* correction used
    std::vector<Scalar> infeasibility_functional;  // certificate when !ok
};

/// Decides whether the Hochschild 2-cocycle beta (in dual form) lifts to a
/// cyclic 2-cocycle along I^2: finds eta in (A^{(x)2})* and gamma in A* with
/// B_1^*(beta - b_2^*(eta)) + b_1^*(gamma) = 0, or certifies infeasibility.
LiftResult lift_along_I2(const Algebra& a, const TildeForm& beta);

}  // namespace hext
