#pragma once

#include <optional>

#include "hext/algebra.hpp"

namespace hext {

/// Matrix of the Hochschild boundary b_n : A^{(x) n+1} -> A^{(x) n}
/// in the lexicographic tensor bases, with the wrap-around term
/// (-1)^n a_n a_0 (x) a_1 (x) ... (x) a_{n-1}. Requires n >= 1.
Matrix boundary_matrix(const Algebra& a, std::size_t n,
                       std::size_t max_cells = kDefaultMaxTensorDim);

/// Matrix of delta^n : Hom(A^{(x) n}, M) -> Hom(A^{(x) n+1}, M);
/// delta^0(m)(a) = a m - m a.
Matrix coboundary_matrix(const Algebra& a, const Bimodule& m, std::size_t n,
                         std::size_t max_cells = kDefaultMaxTensorDim);

struct HomologyResult {
    std::size_t dim = 0;
    std::vector<ChainVector> representatives;
};

/// HH_n(A); degree 0 is coker b_1. Representatives are cycle vectors reduced
/// modulo the image, in reduced echelon form.
HomologyResult hochschild_homology(const Algebra& a, std::size_t n,
                                   std::size_t max_cells = kDefaultMaxTensorDim);

struct CohomologyResult {
    std::size_t dim = 0;
    std::vector<CochainVector> representatives;
};

CohomologyResult hochschild_cohomology(const Algebra& a, const Bimodule& m, std::size_t n,
                                       std::size_t max_cells = kDefaultMaxTensorDim);

/// The adjunction Hom(A^{(x)2}, A*) ~ (A^{(x)3})*:
/// to_tilde(alpha)(a (x) b (x) c) = alpha(b (x) c)(a).
TildeForm to_tilde(const Cochain2& alpha, const Field& f);
Cochain2 from_tilde(const TildeForm& t, const Field& f);

struct CocycleViolation {
    std::size_t i, j, k;
};

/// Evaluates a alpha(b,c) - alpha(ab,c) + alpha(a,bc) - alpha(a,b) c on all
/// basis triples; returns the first violating triple if any.
std::optional<CocycleViolation> check_cocycle2(const Algebra& a, const Bimodule& m,
                                               const Cochain2& alpha);

/// Contraction i_alpha of an m-cochain with values in A against a chain of
/// degree n >= m:
/// i_alpha(a_0 (x) ... (x) a_n) = a_0 alpha(a_1,...,a_m) (x) a_{m+1} (x) ... (x) a_n.
ChainVector contraction(const Algebra& a, const AlgebraCochain& alpha, const ChainVector& x);

/// delta^m on algebra-valued cochains; used to state the contraction identity.
AlgebraCochain algebra_coboundary(const Algebra& a, const AlgebraCochain& alpha);

/// b_n applied to a sparse chain (degree n -> n-1), term by term.
ChainVector apply_boundary(const Algebra& a, const ChainVector& x);

/// Matrix of i_c : A^{(x) n+1} -> A^{(x) n+1} for c in A (degree-0 contraction).
Matrix contraction_matrix_degree0(const Algebra& a, const std::vector<Scalar>& c, std::size_t n,
                                  std::size_t max_cells = kDefaultMaxTensorDim);

/// delta^1(f) for f in Hom(A, A*), as a Cochain2 with coefficients in A*.
Cochain2 coboundary_of_1cochain(const Algebra& a, const Bimodule& dual,
                                const std::vector<std::vector<Scalar>>& f_values);

}  // namespace hext
