#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hext/scalar.hpp"

namespace hext {

/// Sparse exact matrix over one field. Stored row-major; stored entries are nonzero.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows) {}

    static Matrix identity(const Field& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_at(std::size_t r, std::size_t c, const Scalar& v);

    const std::map<std::size_t, Scalar>& row(std::size_t r) const { return data_[r]; }
    std::size_t nnz() const;
    bool is_zero_matrix() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;            // M v
    std::vector<Scalar> apply_transpose(const std::vector<Scalar>& v) const;  // M^T v

    /// Copies src into this matrix at offset (roff, coff), scaled.
    void insert_block(const Matrix& src, std::size_t roff, std::size_t coff, const Scalar& scale);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::map<std::size_t, Scalar>> data_;

    void check_bounds(std::size_t r, std::size_t c) const;
};

std::size_t rank(const Matrix& m);

/// Basis of { v : M v = 0 }, one vector per free column of the RREF,
/// ordered by free-column index. Deterministic.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

struct AffineSolution {
    bool feasible = false;
    std::vector<Scalar> particular;               // one solution (free variables = 0)
    std::vector<std::vector<Scalar>> kernel;      // kernel basis of M
    // Infeasibility certificate: y with y^T M = 0 and y^T target != 0,
    // plus the index of the inconsistent eliminated row.
    std::vector<Scalar> infeasibility_functional;
    std::size_t inconsistent_row = static_cast<std::size_t>(-1);
};

/// Exact parametrization of { x : M x = target }, or a certified infeasibility.
AffineSolution solve_affine(const Matrix& m, const std::vector<Scalar>& target);

/// dim ker(b_out) - rank(b_in). Throws NotAComplex unless b_out * b_in == 0.
std::size_t homology_dim(const Matrix& b_out, const Matrix& b_in);

/// Canonical representatives of span(vectors) modulo span(subspace):
/// reduce against the subspace RREF, then RREF the reductions.
std::vector<std::vector<Scalar>> quotient_representatives(
    const std::vector<std::vector<Scalar>>& vectors,
    const std::vector<std::vector<Scalar>>& subspace,
    const Field& f, std::size_t len);

/// Row-reduce a list of vectors to an RREF basis of their span.
std::vector<std::vector<Scalar>> rref_basis(const std::vector<std::vector<Scalar>>& vectors,
                                            const Field& f, std::size_t len);

/// RREF basis of the span together with, for each basis row, the coefficients
/// expressing it as a combination of the input vectors.
struct RrefWithCombos {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::vector<Scalar>> combos;
};
RrefWithCombos rref_with_combinations(const std::vector<std::vector<Scalar>>& vectors,
                                      const Field& f, std::size_t len);

/// Residue of v modulo span(rref_rows); rref_rows must be in RREF.
std::vector<Scalar> reduce_against(const std::vector<std::vector<Scalar>>& rref_rows,
                                   std::vector<Scalar> v);

/// Determinant of a dense matrix by exact Gaussian elimination.
/// If rank_out is non-null it receives the rank even when the determinant is zero.
Scalar dense_determinant(std::vector<std::vector<Scalar>> m, const Field& f,
                         std::size_t* rank_out = nullptr);

// Small vector helpers shared across modules.
std::vector<Scalar> zero_vector(const Field& f, std::size_t n);
bool is_zero_vector(const std::vector<Scalar>& v);
void vec_add_scaled(std::vector<Scalar>& dst, const std::vector<Scalar>& src, const Scalar& s);
Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace hext
