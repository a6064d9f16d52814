#include "hext/matrix.hpp"

#include <algorithm>

namespace hext {

void Matrix::check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of bounds");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

Scalar Matrix::get(std::size_t r, std::size_t c) const {
    check_bounds(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? field_.zero() : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    check_bounds(r, c);
    if (v.field() != field_) throw FieldMismatch("matrix entry field mismatch");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void Matrix::add_at(std::size_t r, std::size_t c, const Scalar& v) {
    check_bounds(r, c);
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        if (!v.is_zero()) data_[r].emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) data_[r].erase(it);
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool Matrix::is_zero_matrix() const { return nnz() == 0; }

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product field mismatch");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : o.data_[k]) out.add_at(r, c, v * w);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum shape/field mismatch");
    Matrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : o.data_[r]) out.add_at(r, c, v);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference shape/field mismatch");
    Matrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : o.data_[r]) out.add_at(r, c, -v);
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply length mismatch");
    std::vector<Scalar> out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, w] : data_[r]) out[r] += w * v[c];
    return out;
}

std::vector<Scalar> Matrix::apply_transpose(const std::vector<Scalar>& v) const {
    if (v.size() != rows_) throw DimensionMismatch("matrix apply_transpose length mismatch");
    std::vector<Scalar> out = zero_vector(field_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r].is_zero()) continue;
        for (const auto& [c, w] : data_[r]) out[c] += w * v[r];
    }
    return out;
}

void Matrix::insert_block(const Matrix& src, std::size_t roff, std::size_t coff,
                          const Scalar& scale) {
    if (roff + src.rows() > rows_ || coff + src.cols() > cols_)
        throw DimensionMismatch("insert_block out of bounds");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (const auto& [c, v] : src.data_[r]) add_at(roff + r, coff + c, v * scale);
}

namespace {

// Reduced row echelon form, in place on a list of sparse rows.
// Pivot rule: columns left to right; pivot row is the first unprocessed row
// with a nonzero entry in the column. Optionally tracks the row operations
// applied, as a dense ops matrix with ops * input == result.
struct EchelonResult {
    std::vector<std::map<std::size_t, Scalar>> rows;
    std::vector<std::size_t> pivot_cols;              // ascending
    std::vector<std::size_t> pivot_rows;              // pivot_rows[k] holds pivot_cols[k]
    std::vector<std::vector<Scalar>> ops;             // only if tracked
};

EchelonResult echelon(const Matrix& m, bool track_ops) {
    EchelonResult res;
    const Field& f = m.field();
    const std::size_t nrows = m.rows(), ncols = m.cols();
    res.rows.resize(nrows);
    for (std::size_t r = 0; r < nrows; ++r) res.rows[r] = m.row(r);
    if (track_ops) {
        res.ops.assign(nrows, zero_vector(f, nrows));
        for (std::size_t r = 0; r < nrows; ++r) res.ops[r][r] = f.one();
    }

    auto add_scaled_row = [&](std::size_t dst, std::size_t src, const Scalar& s) {
        for (const auto& [c, v] : res.rows[src]) {
            auto it = res.rows[dst].find(c);
            if (it == res.rows[dst].end()) {
                Scalar t = v * s;
                if (!t.is_zero()) res.rows[dst].emplace(c, t);
            } else {
                it->second += v * s;
                if (it->second.is_zero()) res.rows[dst].erase(it);
            }
        }
        if (track_ops) vec_add_scaled(res.ops[dst], res.ops[src], s);
    };

    std::size_t next_pivot_row = 0;
    for (std::size_t c = 0; c < ncols && next_pivot_row < nrows; ++c) {
        std::size_t pr = nrows;
        for (std::size_t r = next_pivot_row; r < nrows; ++r) {
            if (res.rows[r].count(c)) {
                pr = r;
                break;
            }
        }
        if (pr == nrows) continue;
        std::swap(res.rows[pr], res.rows[next_pivot_row]);
        if (track_ops) std::swap(res.ops[pr], res.ops[next_pivot_row]);
        pr = next_pivot_row;

        Scalar inv = res.rows[pr][c].inverse();
        if (!inv.is_one()) {
            for (auto& [cc, v] : res.rows[pr]) v *= inv;
            if (track_ops)
                for (auto& v : res.ops[pr]) v *= inv;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            auto it = res.rows[r].find(c);
            if (it == res.rows[r].end()) continue;
            add_scaled_row(r, pr, -it->second);
        }
        res.pivot_cols.push_back(c);
        res.pivot_rows.push_back(pr);
        ++next_pivot_row;
    }
    return res;
}

std::vector<std::vector<Scalar>> kernel_from_echelon(const EchelonResult& e, const Field& f,
                                                     std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Scalar> v = zero_vector(f, ncols);
        v[free_c] = f.one();
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
            auto it = e.rows[e.pivot_rows[k]].find(free_c);
            if (it != e.rows[e.pivot_rows[k]].end()) v[e.pivot_cols[k]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::size_t rank(const Matrix& m) { return echelon(m, false).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    EchelonResult e = echelon(m, false);
    return kernel_from_echelon(e, m.field(), m.cols());
}

AffineSolution solve_affine(const Matrix& m, const std::vector<Scalar>& target) {
    if (target.size() != m.rows()) throw DimensionMismatch("solve_affine: target length != rows");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    aug.insert_block(m, 0, 0, f.one());
    for (std::size_t r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), target[r]);

    EchelonResult e = echelon(aug, true);
    AffineSolution sol;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
        if (e.pivot_cols[k] == m.cols()) {
            // Pivot in the augmented column: 0 = 1 after elimination.
            sol.feasible = false;
            sol.inconsistent_row = e.pivot_rows[k];
            sol.infeasibility_functional = e.ops[e.pivot_rows[k]];
            return sol;
        }
    }
    sol.feasible = true;
    sol.particular = zero_vector(f, m.cols());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
        auto it = e.rows[e.pivot_rows[k]].find(m.cols());
        if (it != e.rows[e.pivot_rows[k]].end()) sol.particular[e.pivot_cols[k]] = it->second;
    }
    // The M-columns of the augmented RREF form an RREF of M (all pivots are in them).
    EchelonResult em;
    em.rows.resize(e.rows.size());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        em.rows[r] = e.rows[r];
        em.rows[r].erase(m.cols());
    }
    em.pivot_cols = e.pivot_cols;
    em.pivot_rows = e.pivot_rows;
    sol.kernel = kernel_from_echelon(em, f, m.cols());
    return sol;
}

std::size_t homology_dim(const Matrix& b_out, const Matrix& b_in) {
    if (b_out.cols() != b_in.rows())
        throw DimensionMismatch("homology_dim: chain group dimensions disagree");
    if (!(b_out * b_in).is_zero_matrix()) throw NotAComplex("not a complex: b_out * b_in != 0");
    std::size_t ker = b_out.cols() - rank(b_out);
    return ker - rank(b_in);
}

std::vector<std::vector<Scalar>> rref_basis(const std::vector<std::vector<Scalar>>& vectors,
                                            const Field& f, std::size_t len) {
    Matrix m(f, vectors.size(), len);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != len) throw DimensionMismatch("rref_basis: vector length mismatch");
        for (std::size_t c = 0; c < len; ++c) m.set(r, c, vectors[r][c]);
    }
    EchelonResult e = echelon(m, false);
    std::vector<std::vector<Scalar>> out;
    for (std::size_t k = 0; k < e.pivot_rows.size(); ++k) {
        std::vector<Scalar> v = zero_vector(f, len);
        for (const auto& [c, s] : e.rows[e.pivot_rows[k]]) v[c] = s;
        out.push_back(std::move(v));
    }
    return out;
}

RrefWithCombos rref_with_combinations(const std::vector<std::vector<Scalar>>& vectors,
                                      const Field& f, std::size_t len) {
    Matrix m(f, vectors.size(), len);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != len)
            throw DimensionMismatch("rref_with_combinations: vector length mismatch");
        for (std::size_t c = 0; c < len; ++c) m.set(r, c, vectors[r][c]);
    }
    EchelonResult e = echelon(m, true);
    RrefWithCombos out;
    for (std::size_t k = 0; k < e.pivot_rows.size(); ++k) {
        std::vector<Scalar> v = zero_vector(f, len);
        for (const auto& [c, s] : e.rows[e.pivot_rows[k]]) v[c] = s;
        out.rows.push_back(std::move(v));
        out.combos.push_back(e.ops[e.pivot_rows[k]]);
    }
    return out;
}

std::vector<Scalar> reduce_against(const std::vector<std::vector<Scalar>>& rref_rows,
                                   std::vector<Scalar> v) {
    for (const auto& row : rref_rows) {
        std::size_t lead = row.size();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == row.size()) continue;
        if (v[lead].is_zero()) continue;
        Scalar coeff = -v[lead];  // row is normalized with leading 1
        vec_add_scaled(v, row, coeff);
    }
    return v;
}

std::vector<std::vector<Scalar>> quotient_representatives(
    const std::vector<std::vector<Scalar>>& vectors,
    const std::vector<std::vector<Scalar>>& subspace, const Field& f, std::size_t len) {
    std::vector<std::vector<Scalar>> sub = rref_basis(subspace, f, len);
    std::vector<std::vector<Scalar>> reduced;
    for (const auto& v : vectors) {
        std::vector<Scalar> r = reduce_against(sub, v);
        if (!is_zero_vector(r)) reduced.push_back(std::move(r));
    }
    return rref_basis(reduced, f, len);
}

Scalar dense_determinant(std::vector<std::vector<Scalar>> m, const Field& f,
                         std::size_t* rank_out) {
    const std::size_t n = m.size();
    Scalar det = f.one();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = n;
        for (std::size_t r = rk; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == n) {
            det = f.zero();
            continue;
        }
        if (pr != rk) {
            std::swap(m[pr], m[rk]);
            det = -det;
        }
        det *= m[rk][col];
        Scalar inv = m[rk][col].inverse();
        for (std::size_t c = col; c < n; ++c) m[rk][c] *= inv;
        for (std::size_t r = rk + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar coeff = -m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] += coeff * m[rk][c];
        }
        ++rk;
    }
    if (rank_out) *rank_out = rk;
    return rk == n ? det : f.zero();
}

std::vector<Scalar> zero_vector(const Field& f, std::size_t n) {
    return std::vector<Scalar>(n, f.zero());
}

bool is_zero_vector(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void vec_add_scaled(std::vector<Scalar>& dst, const std::vector<Scalar>& src, const Scalar& s) {
    if (dst.size() != src.size()) throw DimensionMismatch("vec_add_scaled length mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i] * s;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot length mismatch");
    if (a.empty()) throw DimensionMismatch("dot of empty vectors has no field");
    Scalar s = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hext
