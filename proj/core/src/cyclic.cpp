#include "hext/cyclic.hpp"

namespace hext {

const char* const kTotalComplexConvention =
    "total complex differential d = b + B on the staircase, no sign twist "
    "(b B + B b = 0 holds for the operators as defined)";

Matrix connes_matrix(const Algebra& a, std::size_t n, std::size_t max_cells) {
    const std::size_t d = a.dim();
    const Field& f = a.field;
    const std::size_t src = tensor_dim(d, n + 1, max_cells);
    const std::size_t dst = tensor_dim(d, n + 2, max_cells);
    Matrix out(f, dst, src);

    std::vector<std::size_t> idx(n + 1, 0), tgt(n + 2, 0);
    for (std::size_t col = 0; col < src; ++col) {
        idx = unflatten(col, d, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            // sign (-1)^{ni}
            bool neg = (n * i) % 2 == 1;
            Scalar sign = neg ? -f.one() : f.one();
            // cyclic order a_i, ..., a_n, a_0, ..., a_{i-1}
            // term 1: unit in slot 0
            for (std::size_t s = 0; s <= n; ++s) tgt[1 + s] = idx[(i + s) % (n + 1)];
            for (std::size_t k = 0; k < d; ++k) {
                if (a.unit[k].is_zero()) continue;
                tgt[0] = k;
                out.add_at(flatten(tgt, d), col, sign * a.unit[k]);
            }
            // term 2: a_i in slot 0, unit in slot 1
            tgt[0] = idx[i];
            for (std::size_t s = 1; s <= n; ++s) tgt[1 + s] = idx[(i + s) % (n + 1)];
            for (std::size_t k = 0; k < d; ++k) {
                if (a.unit[k].is_zero()) continue;
                tgt[1] = k;
                out.add_at(flatten(tgt, d), col, -sign * a.unit[k]);
            }
        }
    }
    return out;
}

std::vector<std::size_t> total_components(std::size_t n) {
    std::vector<std::size_t> degs;
    for (std::size_t p = 0; 2 * p <= n; ++p) degs.push_back(n - 2 * p);
    return degs;
}

TotalLayout total_layout(const Algebra& a, std::size_t n, std::size_t max_cells) {
    TotalLayout lay;
    lay.degrees = total_components(n);
    std::size_t off = 0;
    for (std::size_t deg : lay.degrees) {
        lay.offsets.push_back(off);
        off += tensor_dim(a.dim(), deg + 1, max_cells);
    }
    lay.dim = off;
    return lay;
}

Matrix total_differential(const Algebra& a, std::size_t n, std::size_t max_cells) {
    if (n < 1) throw Error("total_differential: n must be >= 1");
    const Field& f = a.field;
    TotalLayout src = total_layout(a, n, max_cells);
    TotalLayout dst = total_layout(a, n - 1, max_cells);
    Matrix out(f, dst.dim, src.dim);
    for (std::size_t p = 0; p < src.degrees.size(); ++p) {
        std::size_t deg = src.degrees[p];
        if (deg >= 1) {
            // vertical: b_deg lands in component p of T_{n-1} (degree deg-1)
            Matrix b = boundary_matrix(a, deg, max_cells);
            out.insert_block(b, dst.offsets[p], src.offsets[p], f.one());
        }
        if (p >= 1) {
            // horizontal: B_deg lands in component p-1 of T_{n-1} (degree deg+1)
            Matrix bb = connes_matrix(a, deg, max_cells);
            out.insert_block(bb, dst.offsets[p - 1], src.offsets[p], f.one());
        }
    }
    return out;
}

std::size_t cyclic_homology(const Algebra& a, std::size_t n, std::size_t max_cells) {
    Matrix d_in = total_differential(a, n + 1, max_cells);
    if (n == 0) return total_layout(a, 0, max_cells).dim - rank(d_in);
    Matrix d_out = total_differential(a, n, max_cells);
    return homology_dim(d_out, d_in);
}

std::size_t cyclic_cohomology(const Algebra& a, std::size_t n, std::size_t max_cells) {
    Matrix d_out = total_differential(a, n + 1, max_cells).transpose();
    if (n == 0) return d_out.cols() - rank(d_out);
    Matrix d_in = total_differential(a, n, max_cells).transpose();
    return homology_dim(d_out, d_in);
}

LiftResult lift_along_I2(const Algebra& a, const TildeForm& beta) {
    const std::size_t n = a.dim();
    const Field& f = a.field;
    if (beta.algebra_dim != n) throw DimensionMismatch("lift_along_I2: shape mismatch");

    Matrix b1 = boundary_matrix(a, 1);
    Matrix b2 = boundary_matrix(a, 2);
    Matrix b3 = boundary_matrix(a, 3);
    Matrix bB1 = connes_matrix(a, 1);

    // precondition: beta is a Hochschild 2-cocycle in dual form
    if (!is_zero_vector(b3.apply_transpose(beta.coords)))
        throw NotACocycle("lift_along_I2: b_3^*(beta) != 0");

    // unknowns (eta, gamma) in (A^{(x)2})* (+) A*:
    //   B_1^*(beta) - B_1^*(b_2^*(eta)) + b_1^*(gamma) = 0
    // i.e. (b_2 B_1)^T eta - b_1^T gamma = B_1^T beta
    const std::size_t n2 = n * n;
    Matrix sys(f, n2, n2 + n);
    Matrix b2B1_t = (b2 * bB1).transpose();
    sys.insert_block(b2B1_t, 0, 0, f.one());
    sys.insert_block(b1.transpose(), 0, n2, -f.one());
    std::vector<Scalar> rhs = bB1.apply_transpose(beta.coords);

    AffineSolution sol = solve_affine(sys, rhs);
    LiftResult out;
    if (!sol.feasible) {
        out.ok = false;
        out.infeasibility_functional = sol.infeasibility_functional;
        return out;
    }
    out.ok = true;
    out.eta.assign(sol.particular.begin(), sol.particular.begin() + n2);
    out.lift.gamma.assign(sol.particular.begin() + n2, sol.particular.end());
    // beta' = beta - b_2^*(eta)
    out.lift.beta = beta;
    std::vector<Scalar> corr = b2.apply_transpose(out.eta);
    for (std::size_t i = 0; i < out.lift.beta.coords.size(); ++i)
        out.lift.beta.coords[i] -= corr[i];
    // invariants of the returned class
    if (!is_zero_vector(b3.apply_transpose(out.lift.beta.coords)))
        throw Error("lift_along_I2: lifted class is not a Hochschild cocycle");
    std::vector<Scalar> check = bB1.apply_transpose(out.lift.beta.coords);
    std::vector<Scalar> g = b1.apply_transpose(out.lift.gamma);
    for (std::size_t i = 0; i < check.size(); ++i) check[i] += g[i];
    if (!is_zero_vector(check)) throw Error("lift_along_I2: cyclic cocycle identity fails");
    return out;
}

}  // namespace hext
