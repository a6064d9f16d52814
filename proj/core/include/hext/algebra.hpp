#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hext/pit.hpp"
#include "hext/tensor.hpp"

namespace hext {

/// Finite-dimensional unital algebra given by structure constants:
/// e_i * e_j = sum_k mul[i][j][k] e_k.
struct Algebra {
    Field field;
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Scalar>>> mul;
    std::vector<Scalar> unit;

    std::size_t dim() const { return basis.size(); }

    /// Coordinates of e_i * e_j.
    const std::vector<Scalar>& basis_product(std::size_t i, std::size_t j) const {
        return mul[i][j];
    }
    std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const;
    std::vector<Scalar> basis_vector(std::size_t i) const;

    /// Matrix of left multiplication by c.
    Matrix left_multiplication(const std::vector<Scalar>& c) const;
    Matrix right_multiplication(const std::vector<Scalar>& c) const;
};

struct AlgebraViolation {
    enum class Kind { associativity, unit } kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string describe(const Algebra& a) const;
};

std::optional<AlgebraViolation> validate_algebra(const Algebra& a);

/// Bimodule over an algebra of dimension adim:
/// left[i][j]  = coordinates of e_i . m_j,
/// right[j][i] = coordinates of m_j . e_i.
struct Bimodule {
    Field field;
    std::size_t adim = 0;
    std::size_t mdim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Scalar>>> left;
    std::vector<std::vector<std::vector<Scalar>>> right;

    std::size_t dim() const { return mdim; }
    std::vector<Scalar> left_act(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& m) const;
    std::vector<Scalar> right_act(const std::vector<Scalar>& m,
                                  const std::vector<Scalar>& a) const;
};

struct BimoduleViolation {
    std::string what;
};

std::optional<BimoduleViolation> validate_bimodule(const Algebra& a, const Bimodule& m);

/// The algebra itself as a bimodule over itself.
Bimodule regular_bimodule(const Algebra& a);

/// The dual bimodule A* with (c f a)(b) := f(a b c).
Bimodule dual_bimodule(const Algebra& a);

std::vector<std::vector<Scalar>> center_basis(const Algebra& a);
std::optional<std::vector<Scalar>> try_invert(const Algebra& a, const std::vector<Scalar>& c);
std::vector<std::vector<Scalar>> commutator_subspace(const Algebra& a);

/// A linear form lambda on an algebra B with lambda(xy) = lambda(yx) and
/// nonsingular Gram matrix G[i][j] = lambda(e_i e_j).
struct SymmetrizingForm {
    std::vector<Scalar> lambda;
};

struct SymmetricDecision {
    bool symmetric = false;
    std::optional<SymmetrizingForm> form;   // present iff symmetric
    // negative evidence
    std::vector<std::vector<Scalar>> trace_form_space;  // basis of forms killing [B,B]
    std::size_t max_gram_rank = 0;
    PitOutcome pit;
    std::string note;  // extension-field caveats etc.
};

/// Decides whether B carries a symmetrizing form; constructive both ways.
SymmetricDecision is_symmetric_algebra(const Algebra& b);

/// Gram matrix of a form: G[i][j] = lambda(e_i e_j).
std::vector<std::vector<Scalar>> gram_matrix(const Algebra& b, const std::vector<Scalar>& lambda);

/// The bimodule morphism B -> B*, x -> lambda(x . -), as a matrix; verifies
/// nonsingularity and the morphism identity on basis triples.
Matrix iso_from_form(const Algebra& b, const SymmetrizingForm& form);

/// Hochschild extension T(A, M, alpha): A (+) M with product
/// (a,m)(a',m') = (a a', a m' + m a' + alpha(a (x) a')).
/// alpha must be a 2-cocycle (checked); the unit (1_A, u) is found by solving
/// the unit equations, which is feasible exactly for cocycles.
Algebra hochschild_extension(const Algebra& a, const Bimodule& m, const Cochain2& alpha);

}  // namespace hext
