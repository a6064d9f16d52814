#include "hext/complexes.hpp"

namespace hext {

Matrix boundary_matrix(const Algebra& a, std::size_t n, std::size_t max_cells) {
    if (n < 1) throw Error("boundary_matrix: n must be >= 1");
    const std::size_t d = a.dim();
    const Field& f = a.field;
    const std::size_t src = tensor_dim(d, n + 1, max_cells);
    const std::size_t dst = tensor_dim(d, n, max_cells);
    Matrix b(f, dst, src);

    std::vector<std::size_t> idx(n + 1, 0), merged(n, 0);
    for (std::size_t col = 0; col < src; ++col) {
        idx = unflatten(col, d, n + 1);
        Scalar sign = f.one();
        for (std::size_t i = 0; i < n; ++i) {
            // merge slots i and i+1
            const std::vector<Scalar>& prod = a.mul[idx[i]][idx[i + 1]];
            for (std::size_t s = 0; s < n; ++s)
                merged[s] = s < i ? idx[s] : idx[s + 1];  // placeholder at slot i
            for (std::size_t k = 0; k < d; ++k) {
                if (prod[k].is_zero()) continue;
                merged[i] = k;
                b.add_at(flatten(merged, d), col, sign * prod[k]);
            }
            sign = -sign;
        }
        // wrap-around: (-1)^n a_n a_0 (x) a_1 ... a_{n-1}; sign now == (-1)^n
        const std::vector<Scalar>& prod = a.mul[idx[n]][idx[0]];
        for (std::size_t s = 1; s < n; ++s) merged[s] = idx[s];
        for (std::size_t k = 0; k < d; ++k) {
            if (prod[k].is_zero()) continue;
            merged[0] = k;
            b.add_at(flatten(merged, d), col, sign * prod[k]);
        }
    }
    return b;
}

Matrix coboundary_matrix(const Algebra& a, const Bimodule& m, std::size_t n,
                         std::size_t max_cells) {
    const std::size_t d = a.dim(), md = m.dim();
    const Field& f = a.field;
    auto mb = [&](std::size_t j) {
        std::vector<Scalar> v = zero_vector(f, md);
        v[j] = f.one();
        return v;
    };

    if (n == 0) {
        // delta^0(m)(a) = a m - m a : M -> Hom(A, M), rows indexed (a-index, target)
        Matrix delta(f, d * md, md);
        for (std::size_t j = 0; j < md; ++j)
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<Scalar> v = m.left_act(a.basis_vector(i), mb(j));
                std::vector<Scalar> w = m.right_act(mb(j), a.basis_vector(i));
                for (std::size_t t = 0; t < md; ++t) delta.add_at(i * md + t, j, v[t] - w[t]);
            }
        return delta;
    }

    const std::size_t src_idx = tensor_dim(d, n, max_cells);
    const std::size_t dst_idx = tensor_dim(d, n + 1, max_cells);
    Matrix delta(f, dst_idx * md, src_idx * md);

    std::vector<std::size_t> idx(n + 1, 0), sub(n, 0);
    for (std::size_t row_idx = 0; row_idx < dst_idx; ++row_idx) {
        idx = unflatten(row_idx, d, n + 1);
        // delta(phi)(a_1..a_{n+1}) = a_1 phi(a_2..a_{n+1})
        //   + sum_i (-1)^i phi(a_1.. a_i a_{i+1} ..a_{n+1}) + (-1)^{n+1} phi(a_1..a_n) a_{n+1}
        // first term
        for (std::size_t s = 0; s < n; ++s) sub[s] = idx[s + 1];
        std::size_t colbase = flatten(sub, d) * md;
        for (std::size_t j = 0; j < md; ++j) {
            std::vector<Scalar> v = m.left_act(a.basis_vector(idx[0]), mb(j));
            for (std::size_t t = 0; t < md; ++t) delta.add_at(row_idx * md + t, colbase + j, v[t]);
        }
        // middle terms
        Scalar sign = -f.one();
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<Scalar>& prod = a.mul[idx[i]][idx[i + 1]];
            for (std::size_t s = 0; s < n; ++s) sub[s] = s < i ? idx[s] : idx[s + 1];
            for (std::size_t k = 0; k < d; ++k) {
                if (prod[k].is_zero()) continue;
                sub[i] = k;
                std::size_t cb = flatten(sub, d) * md;
                Scalar coeff = sign * prod[k];
                for (std::size_t t = 0; t < md; ++t)
                    delta.add_at(row_idx * md + t, cb + t, coeff);
            }
            sign = -sign;
        }
        // last term: sign now == (-1)^{n+1}
        for (std::size_t s = 0; s < n; ++s) sub[s] = idx[s];
        colbase = flatten(sub, d) * md;
        for (std::size_t j = 0; j < md; ++j) {
            std::vector<Scalar> v = m.right_act(mb(j), a.basis_vector(idx[n]));
            for (std::size_t t = 0; t < md; ++t)
                delta.add_at(row_idx * md + t, colbase + j, sign * v[t]);
        }
    }
    return delta;
}

HomologyResult hochschild_homology(const Algebra& a, std::size_t n, std::size_t max_cells) {
    const Field& f = a.field;
    const std::size_t d = a.dim();
    HomologyResult out;
    std::vector<std::vector<Scalar>> cycles;
    Matrix b_in = boundary_matrix(a, n + 1, max_cells);
    if (n == 0) {
        // coker b_1: represent by the full basis modulo the image
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> e = zero_vector(f, d);
            e[i] = f.one();
            cycles.push_back(std::move(e));
        }
        out.dim = d - rank(b_in);
    } else {
        Matrix b_out = boundary_matrix(a, n, max_cells);
        out.dim = homology_dim(b_out, b_in);
        cycles = kernel_basis(b_out);
    }
    std::vector<std::vector<Scalar>> image;
    for (std::size_t c = 0; c < b_in.cols(); ++c) {
        std::vector<Scalar> col = zero_vector(f, b_in.rows());
        bool nz = false;
        for (std::size_t r = 0; r < b_in.rows(); ++r) {
            Scalar v = b_in.get(r, c);
            if (!v.is_zero()) {
                col[r] = v;
                nz = true;
            }
        }
        if (nz) image.push_back(std::move(col));
    }
    std::vector<std::vector<Scalar>> reps =
        quotient_representatives(cycles, image, f, tensor_dim(d, n + 1, max_cells));
    for (const auto& r : reps)
        out.representatives.push_back(ChainVector::from_dense(f, n, d, r));
    if (out.representatives.size() != out.dim)
        throw Error("hochschild_homology: representative count disagrees with dimension");
    return out;
}

CohomologyResult hochschild_cohomology(const Algebra& a, const Bimodule& m, std::size_t n,
                                       std::size_t max_cells) {
    const Field& f = a.field;
    CohomologyResult out;
    Matrix d_out = coboundary_matrix(a, m, n, max_cells);
    std::vector<std::vector<Scalar>> cocycles = kernel_basis(d_out);
    std::vector<std::vector<Scalar>> image;
    if (n >= 1) {
        Matrix d_in = coboundary_matrix(a, m, n - 1, max_cells);
        if (!(d_out * d_in).is_zero_matrix())
            throw NotAComplex("coboundary composition is nonzero");
        out.dim = cocycles.size() - rank(d_in);
        for (std::size_t c = 0; c < d_in.cols(); ++c) {
            std::vector<Scalar> col = zero_vector(f, d_in.rows());
            bool nz = false;
            for (std::size_t r = 0; r < d_in.rows(); ++r) {
                Scalar v = d_in.get(r, c);
                if (!v.is_zero()) {
                    col[r] = v;
                    nz = true;
                }
            }
            if (nz) image.push_back(std::move(col));
        }
    } else {
        out.dim = cocycles.size();
    }
    std::vector<std::vector<Scalar>> reps =
        quotient_representatives(cocycles, image, f, d_out.cols());
    for (const auto& r : reps)
        out.representatives.push_back(CochainVector::from_dense(f, n, a.dim(), m.dim(), r));
    if (out.representatives.size() != out.dim)
        throw Error("hochschild_cohomology: representative count disagrees with dimension");
    return out;
}

TildeForm to_tilde(const Cochain2& alpha, const Field& f) {
    const std::size_t n = alpha.algebra_dim;
    if (alpha.coeff_dim != n) throw DimensionMismatch("to_tilde needs coefficients in A*");
    TildeForm t = TildeForm::zero(f, n);
    // tilde(i,j,k) = alpha(e_j (x) e_k)(e_i)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.coords[(i * n + j) * n + k] = alpha.at(j, k)[i];
    return t;
}

Cochain2 from_tilde(const TildeForm& t, const Field& f) {
    const std::size_t n = t.algebra_dim;
    Cochain2 alpha = Cochain2::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) alpha.at(j, k)[i] = t.at(i, j, k);
    return alpha;
}

std::optional<CocycleViolation> check_cocycle2(const Algebra& a, const Bimodule& m,
                                               const Cochain2& alpha) {
    const std::size_t n = a.dim();
    const Field& f = a.field;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> v = m.left_act(a.basis_vector(i), alpha.at(j, k));
                std::vector<Scalar> t1 =
                    alpha.evaluate(a.mul[i][j], a.basis_vector(k), f);
                std::vector<Scalar> t2 =
                    alpha.evaluate(a.basis_vector(i), a.mul[j][k], f);
                std::vector<Scalar> t3 = m.right_act(alpha.at(i, j), a.basis_vector(k));
                for (std::size_t s = 0; s < m.dim(); ++s) {
                    Scalar sum = v[s] - t1[s] + t2[s] - t3[s];
                    if (!sum.is_zero()) return CocycleViolation{i, j, k};
                }
            }
    return std::nullopt;
}

ChainVector contraction(const Algebra& a, const AlgebraCochain& alpha, const ChainVector& x) {
    const std::size_t m = alpha.degree, n = x.degree;
    if (n < m) throw Error("contraction: chain degree below cochain degree");
    if (alpha.algebra_dim != x.algebra_dim)
        throw DimensionMismatch("contraction: dimension mismatch");
    const std::size_t d = a.dim();
    const Field& f = a.field;
    ChainVector out;
    out.degree = n - m;
    out.algebra_dim = d;
    std::vector<std::size_t> oidx(n - m + 1, 0);
    for (const auto& [idx, coeff] : x.coords) {
        // alpha evaluated at slots 1..m
        std::vector<std::size_t> midx(idx.begin() + 1, idx.begin() + 1 + m);
        const std::vector<Scalar>& val = alpha.values[m == 0 ? 0 : flatten(midx, d)];
        std::vector<Scalar> head = a.multiply(a.basis_vector(idx[0]), val);
        for (std::size_t s = 0; s < n - m; ++s) oidx[s + 1] = idx[m + 1 + s];
        for (std::size_t k = 0; k < d; ++k) {
            if (head[k].is_zero()) continue;
            oidx[0] = k;
            out.add(oidx, coeff * head[k]);
        }
    }
    return out;
}

AlgebraCochain algebra_coboundary(const Algebra& a, const AlgebraCochain& alpha) {
    const std::size_t m = alpha.degree, d = a.dim();
    const Field& f = a.field;
    AlgebraCochain out = AlgebraCochain::zero(f, m + 1, d);
    std::vector<std::size_t> sub(m, 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
        std::vector<std::size_t> idx = unflatten(flat, d, m + 1);
        std::vector<Scalar> acc = zero_vector(f, d);
        // a_1 alpha(a_2..a_{m+1})
        {
            for (std::size_t s = 0; s < m; ++s) sub[s] = idx[s + 1];
            const std::vector<Scalar>& v = alpha.values[m == 0 ? 0 : flatten(sub, d)];
            vec_add_scaled(acc, a.multiply(a.basis_vector(idx[0]), v), f.one());
        }
        Scalar sign = -f.one();
        for (std::size_t i = 0; i < m; ++i) {
            const std::vector<Scalar>& prod = a.mul[idx[i]][idx[i + 1]];
            for (std::size_t s = 0; s < m; ++s) sub[s] = s < i ? idx[s] : idx[s + 1];
            for (std::size_t k = 0; k < d; ++k) {
                if (prod[k].is_zero()) continue;
                sub[i] = k;
                vec_add_scaled(acc, alpha.values[flatten(sub, d)], sign * prod[k]);
            }
            sign = -sign;
        }
        // (-1)^{m+1} alpha(a_1..a_m) a_{m+1}
        {
            for (std::size_t s = 0; s < m; ++s) sub[s] = idx[s];
            const std::vector<Scalar>& v = alpha.values[m == 0 ? 0 : flatten(sub, d)];
            vec_add_scaled(acc, a.multiply(v, a.basis_vector(idx[m])), sign);
        }
        out.values[flat] = std::move(acc);
    }
    return out;
}

ChainVector apply_boundary(const Algebra& a, const ChainVector& x) {
    const std::size_t n = x.degree;
    if (n < 1) throw Error("apply_boundary: degree must be >= 1");
    const std::size_t d = a.dim();
    ChainVector out;
    out.degree = n - 1;
    out.algebra_dim = d;
    std::vector<std::size_t> merged(n, 0);
    for (const auto& [idx, coeff] : x.coords) {
        Scalar sign = coeff;
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<Scalar>& prod = a.mul[idx[i]][idx[i + 1]];
            for (std::size_t s = 0; s < n; ++s) merged[s] = s < i ? idx[s] : idx[s + 1];
            for (std::size_t k = 0; k < d; ++k) {
                if (prod[k].is_zero()) continue;
                merged[i] = k;
                out.add(merged, sign * prod[k]);
            }
            sign = -sign;
        }
        const std::vector<Scalar>& prod = a.mul[idx[n]][idx[0]];
        for (std::size_t s = 1; s < n; ++s) merged[s] = idx[s];
        for (std::size_t k = 0; k < d; ++k) {
            if (prod[k].is_zero()) continue;
            merged[0] = k;
            out.add(merged, sign * prod[k]);
        }
    }
    return out;
}

Matrix contraction_matrix_degree0(const Algebra& a, const std::vector<Scalar>& c, std::size_t n,
                                  std::size_t max_cells) {
    const std::size_t d = a.dim();
    const Field& f = a.field;
    const std::size_t sz = tensor_dim(d, n + 1, max_cells);
    Matrix out(f, sz, sz);
    Matrix rc = a.right_multiplication(c);  // a_0 -> a_0 c
    const std::size_t tail = sz / d;        // d^n
    for (std::size_t i0 = 0; i0 < d; ++i0)
        for (std::size_t k = 0; k < d; ++k) {
            Scalar v = rc.get(k, i0);
            if (v.is_zero()) continue;
            for (std::size_t t = 0; t < tail; ++t) out.add_at(k * tail + t, i0 * tail + t, v);
        }
    return out;
}

Cochain2 coboundary_of_1cochain(const Algebra& a, const Bimodule& dual,
                                const std::vector<std::vector<Scalar>>& f_values) {
    const std::size_t n = a.dim();
    const Field& f = a.field;
    if (f_values.size() != n) throw DimensionMismatch("coboundary_of_1cochain: bad shape");
    Cochain2 out = Cochain2::zero(f, n, dual.dim());
    // delta^1(f)(a,b) = a f(b) - f(ab) + f(a) b
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> acc = dual.left_act(a.basis_vector(i), f_values[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!a.mul[i][j][k].is_zero())
                    vec_add_scaled(acc, f_values[k], -a.mul[i][j][k]);
            std::vector<Scalar> tail = dual.right_act(f_values[i], a.basis_vector(j));
            for (std::size_t t = 0; t < dual.dim(); ++t) acc[t] += tail[t];
            out.at(i, j) = std::move(acc);
        }
    return out;
}

}  // namespace hext
