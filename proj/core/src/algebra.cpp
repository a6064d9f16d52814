#include "hext/algebra.hpp"

#include "hext/complexes.hpp"

namespace hext {

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& a,
                                      const std::vector<Scalar>& b) const {
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n)
        throw DimensionMismatch("multiply: coordinate length != dim A");
    std::vector<Scalar> out = zero_vector(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            vec_add_scaled(out, mul[i][j], a[i] * b[j]);
        }
    }
    return out;
}

std::vector<Scalar> Algebra::basis_vector(std::size_t i) const {
    std::vector<Scalar> v = zero_vector(field, dim());
    v[i] = field.one();
    return v;
}

Matrix Algebra::left_multiplication(const std::vector<Scalar>& c) const {
    const std::size_t n = dim();
    Matrix m(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> col = multiply(c, basis_vector(j));
        for (std::size_t k = 0; k < n; ++k) m.add_at(k, j, col[k]);
    }
    return m;
}

Matrix Algebra::right_multiplication(const std::vector<Scalar>& c) const {
    const std::size_t n = dim();
    Matrix m(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> col = multiply(basis_vector(j), c);
        for (std::size_t k = 0; k < n; ++k) m.add_at(k, j, col[k]);
    }
    return m;
}

std::string AlgebraViolation::describe(const Algebra& a) const {
    if (kind == Kind::associativity)
        return "associativity fails on (" + a.basis[i] + ", " + a.basis[j] + ", " + a.basis[k] +
               ")";
    return "unit axiom fails on basis element " + a.basis[i];
}

std::optional<AlgebraViolation> validate_algebra(const Algebra& a) {
    const std::size_t n = a.dim();
    if (a.unit.size() != n || a.mul.size() != n)
        return AlgebraViolation{AlgebraViolation::Kind::unit, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> e = a.basis_vector(i);
        if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e)
            return AlgebraViolation{AlgebraViolation::Kind::unit, i, 0, 0};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> lhs = a.multiply(a.mul[i][j], a.basis_vector(k));
                std::vector<Scalar> rhs = a.multiply(a.basis_vector(i), a.mul[j][k]);
                if (lhs != rhs)
                    return AlgebraViolation{AlgebraViolation::Kind::associativity, i, j, k};
            }
    return std::nullopt;
}

std::vector<Scalar> Bimodule::left_act(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& m) const {
    if (a.size() != adim || m.size() != mdim)
        throw DimensionMismatch("bimodule left action length mismatch");
    std::vector<Scalar> out = zero_vector(field, mdim);
    for (std::size_t i = 0; i < adim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < mdim; ++j) {
            if (m[j].is_zero()) continue;
            vec_add_scaled(out, left[i][j], a[i] * m[j]);
        }
    }
    return out;
}

std::vector<Scalar> Bimodule::right_act(const std::vector<Scalar>& m,
                                        const std::vector<Scalar>& a) const {
    if (a.size() != adim || m.size() != mdim)
        throw DimensionMismatch("bimodule right action length mismatch");
    std::vector<Scalar> out = zero_vector(field, mdim);
    for (std::size_t j = 0; j < mdim; ++j) {
        if (m[j].is_zero()) continue;
        for (std::size_t i = 0; i < adim; ++i) {
            if (a[i].is_zero()) continue;
            vec_add_scaled(out, right[j][i], m[j] * a[i]);
        }
    }
    return out;
}

std::optional<BimoduleViolation> validate_bimodule(const Algebra& a, const Bimodule& m) {
    const std::size_t n = a.dim(), md = m.dim();
    auto mb = [&](std::size_t j) {
        std::vector<Scalar> v = zero_vector(a.field, md);
        v[j] = a.field.one();
        return v;
    };
    for (std::size_t j = 0; j < md; ++j) {
        if (m.left_act(a.unit, mb(j)) != mb(j)) return BimoduleViolation{"1.m != m"};
        if (m.right_act(mb(j), a.unit) != mb(j)) return BimoduleViolation{"m.1 != m"};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < md; ++k) {
                // (e_i e_j) m = e_i (e_j m)
                if (m.left_act(a.mul[i][j], mb(k)) !=
                    m.left_act(a.basis_vector(i), m.left_act(a.basis_vector(j), mb(k))))
                    return BimoduleViolation{"left action not associative"};
                // m (e_i e_j) = (m e_i) e_j
                if (m.right_act(mb(k), a.mul[i][j]) !=
                    m.right_act(m.right_act(mb(k), a.basis_vector(i)), a.basis_vector(j)))
                    return BimoduleViolation{"right action not associative"};
                // (e_i m) e_j = e_i (m e_j)
                if (m.right_act(m.left_act(a.basis_vector(i), mb(k)), a.basis_vector(j)) !=
                    m.left_act(a.basis_vector(i), m.right_act(mb(k), a.basis_vector(j))))
                    return BimoduleViolation{"left and right actions do not commute"};
            }
    return std::nullopt;
}

Bimodule regular_bimodule(const Algebra& a) {
    const std::size_t n = a.dim();
    Bimodule m;
    m.field = a.field;
    m.adim = n;
    m.mdim = n;
    m.basis = a.basis;
    m.left = a.mul;
    m.right.assign(n, std::vector<std::vector<Scalar>>(n, zero_vector(a.field, n)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m.right[j][i] = a.mul[j][i];
    return m;
}

Bimodule dual_bimodule(const Algebra& a) {
    const std::size_t n = a.dim();
    Bimodule m;
    m.field = a.field;
    m.adim = n;
    m.mdim = n;
    m.basis.reserve(n);
    for (const auto& b : a.basis) m.basis.push_back(b + "*");
    m.left.assign(n, std::vector<std::vector<Scalar>>(n, zero_vector(a.field, n)));
    m.right.assign(n, std::vector<std::vector<Scalar>>(n, zero_vector(a.field, n)));
    // (c f a)(b) = f(a b c). With f = e_t*:
    //   (e_i . e_t*)(e_b) = e_t*(e_b e_i)  => coefficient of e_s* is mul[s][i][t]
    //   (e_t* . e_i)(e_b) = e_t*(e_i e_b)  => coefficient of e_s* is mul[i][s][t]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t s = 0; s < n; ++s) {
                m.left[i][t][s] = a.mul[s][i][t];
                m.right[t][i][s] = a.mul[i][s][t];
            }
    return m;
}

std::vector<std::vector<Scalar>> center_basis(const Algebra& a) {
    const std::size_t n = a.dim();
    // stack the commutator maps c -> c e_i - e_i c
    Matrix sys(a.field, n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix com = a.right_multiplication(a.basis_vector(i)) -
                     a.left_multiplication(a.basis_vector(i));
        sys.insert_block(com, i * n, 0, a.field.one());
    }
    return kernel_basis(sys);
}

std::optional<std::vector<Scalar>> try_invert(const Algebra& a, const std::vector<Scalar>& c) {
    Matrix lc = a.left_multiplication(c);
    AffineSolution sol = solve_affine(lc, a.unit);
    if (!sol.feasible || !sol.kernel.empty()) return std::nullopt;
    // In a finite-dimensional unital algebra a one-sided inverse with L_c
    // nonsingular is two-sided; verified anyway.
    if (a.multiply(sol.particular, c) != a.unit) return std::nullopt;
    return sol.particular;
}

std::vector<std::vector<Scalar>> commutator_subspace(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> v = a.mul[i][j];
            for (std::size_t k = 0; k < n; ++k) v[k] -= a.mul[j][i][k];
            if (!is_zero_vector(v)) gens.push_back(std::move(v));
        }
    return rref_basis(gens, a.field, n);
}

std::vector<std::vector<Scalar>> gram_matrix(const Algebra& b, const std::vector<Scalar>& lambda) {
    const std::size_t n = b.dim();
    std::vector<std::vector<Scalar>> g(n, zero_vector(b.field, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(b.mul[i][j], lambda);
    return g;
}

SymmetricDecision is_symmetric_algebra(const Algebra& b) {
    const std::size_t n = b.dim();
    const Field& f = b.field;
    SymmetricDecision out;

    // Lambda = forms vanishing on [B,B]: kernel of lambda -> (lambda(e_i e_j - e_j e_i))_{i<j}
    std::vector<std::vector<Scalar>> comms = commutator_subspace(b);
    Matrix sys(f, comms.size(), n);
    for (std::size_t r = 0; r < comms.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) sys.set(r, c, comms[r][c]);
    out.trace_form_space = kernel_basis(sys);

    PitFamily fam;
    fam.field = f;
    fam.msize = n;
    for (const auto& lambda : out.trace_form_space) fam.mats.push_back(gram_matrix(b, lambda));
    out.pit = pit_linear_family(fam);
    out.max_gram_rank = out.pit.max_rank_seen;

    if (out.pit.base_witness) {
        std::vector<Scalar> lambda = zero_vector(f, n);
        for (std::size_t i = 0; i < out.trace_form_space.size(); ++i)
            vec_add_scaled(lambda, out.trace_form_space[i], out.pit.witness_point[i]);
        out.symmetric = true;
        out.form = SymmetrizingForm{std::move(lambda)};
        return out;
    }
    out.symmetric = false;
    if (out.pit.ext_witness_only)
        out.note =
            "no symmetrizing form over the base field; a form exists over a finite extension";
    return out;
}

Matrix iso_from_form(const Algebra& b, const SymmetrizingForm& form) {
    const std::size_t n = b.dim();
    const Field& f = b.field;
    // phi(x)(y) = lambda(x y); matrix sends e_i to the functional with
    // coordinates G[i][.], i.e. columns of phi are rows of the Gram matrix.
    std::vector<std::vector<Scalar>> g = gram_matrix(b, form.lambda);
    Matrix phi(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi.add_at(j, i, g[i][j]);
    if (rank(phi) != n) throw Error("iso_from_form: Gram matrix is singular");
    // lambda must vanish on commutators for the morphism identity to hold.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar l = dot(b.mul[i][j], form.lambda) - dot(b.mul[j][i], form.lambda);
            if (!l.is_zero()) throw Error("iso_from_form: form does not kill commutators");
        }
    return phi;
}

Algebra hochschild_extension(const Algebra& a, const Bimodule& m, const Cochain2& alpha) {
    const std::size_t n = a.dim(), md = m.dim();
    const Field& f = a.field;
    if (alpha.algebra_dim != n || alpha.coeff_dim != md)
        throw DimensionMismatch("hochschild_extension: cocycle shape mismatch");
    if (auto viol = check_cocycle2(a, m, alpha))
        throw NotACocycle("hochschild_extension: alpha is not a 2-cocycle (fails on (" +
                          a.basis[viol->i] + ", " + a.basis[viol->j] + ", " + a.basis[viol->k] +
                          "))");

    Algebra t;
    t.field = f;
    t.basis = a.basis;
    for (const auto& b : m.basis) t.basis.push_back(b);
    const std::size_t dn = n + md;
    t.mul.assign(dn, std::vector<std::vector<Scalar>>(dn, zero_vector(f, dn)));

    auto put_a = [&](std::vector<Scalar>& dst, const std::vector<Scalar>& av) {
        for (std::size_t k = 0; k < n; ++k) dst[k] += av[k];
    };
    auto put_m = [&](std::vector<Scalar>& dst, const std::vector<Scalar>& mv) {
        for (std::size_t k = 0; k < md; ++k) dst[n + k] += mv[k];
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            put_a(t.mul[i][j], a.mul[i][j]);
            put_m(t.mul[i][j], alpha.at(i, j));
        }
    auto mb = [&](std::size_t j) {
        std::vector<Scalar> v = zero_vector(f, md);
        v[j] = f.one();
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < md; ++j) {
            put_m(t.mul[i][n + j], m.left_act(a.basis_vector(i), mb(j)));
            put_m(t.mul[n + j][i], m.right_act(mb(j), a.basis_vector(i)));
        }
    // (0,m)(0,m') = 0

    // unit (1_A, u): u e_i = -alpha(1 (x) e_i) and e_i u = -alpha(e_i (x) 1)
    std::vector<Scalar> one_a = a.unit;
    Matrix sys(f, 2 * n * md, md);
    std::vector<Scalar> rhs = zero_vector(f, 2 * n * md);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < md; ++j) {
            // row block i: sum_j u_j (m_j e_i) = -alpha(1,e_i)
            std::vector<Scalar> col = m.right_act(mb(j), a.basis_vector(i));
            for (std::size_t k = 0; k < md; ++k) sys.add_at(i * md + k, j, col[k]);
            col = m.left_act(a.basis_vector(i), mb(j));
            for (std::size_t k = 0; k < md; ++k) sys.add_at((n + i) * md + k, j, col[k]);
        }
        std::vector<Scalar> a1 = alpha.evaluate(one_a, a.basis_vector(i), f);
        std::vector<Scalar> a2 = alpha.evaluate(a.basis_vector(i), one_a, f);
        for (std::size_t k = 0; k < md; ++k) {
            rhs[i * md + k] = -a1[k];
            rhs[(n + i) * md + k] = -a2[k];
        }
    }
    AffineSolution sol = solve_affine(sys, rhs);
    if (!sol.feasible)
        throw Error("hochschild_extension: no unit exists (alpha is not a genuine 2-cocycle)");

    t.unit = zero_vector(f, dn);
    put_a(t.unit, one_a);
    put_m(t.unit, sol.particular);
    if (auto viol = validate_algebra(t))
        throw Error("hochschild_extension: constructed algebra invalid: " + viol->describe(t));
    return t;
}

}  // namespace hext
