#include "hext/symmetry.hpp"

#include <chrono>
#include <sstream>

namespace hext {

std::string method_name(Method m) {
    switch (m) {
        case Method::cond1: return "cond1";
        case Method::cond2: return "cond2";
        case Method::cond3: return "cond3";
        case Method::itagaki: return "itagaki";
        case Method::oty: return "oty";
    }
    return "?";
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::symmetric: return "symmetric";
        case Verdict::not_symmetric: return "not-symmetric";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

void require_cocycle(const Algebra& a, const Cochain2& alpha) {
    Bimodule dual = dual_bimodule(a);
    if (auto v = check_cocycle2(a, dual, alpha))
        throw NotACocycle("alpha is not a 2-cocycle (fails on (" + a.basis[v->i] + ", " +
                          a.basis[v->j] + ", " + a.basis[v->k] + "))");
}

// Centrality rows for the c-block of a system: coefficient of c_t in the
// k-th coordinate of (c e_i - e_i c).
void append_centrality_rows(const Algebra& a, Matrix& sys, std::size_t row_offset,
                            std::size_t c_col_offset) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t t = 0; t < n; ++t) {
                Scalar v = a.mul[t][i][k] - a.mul[i][t][k];
                if (!v.is_zero()) sys.add_at(row_offset + i * n + k, c_col_offset + t, v);
            }
}

// Searches the projection of span(solutions) onto the leading n coordinates
// for an element with invertible left multiplication. Returns the full
// solution vector of the lexicographically smallest passing grid point.
struct CSearchResult {
    bool found = false;
    std::vector<Scalar> solution;  // full-length solution vector
    PitOutcome pit;
    std::vector<std::vector<Scalar>> c_basis;
};

CSearchResult search_invertible_c(const Algebra& a,
                                  const std::vector<std::vector<Scalar>>& solutions,
                                  std::size_t total_len) {
    const std::size_t n = a.dim();
    const Field& f = a.field;
    CSearchResult out;

    std::vector<std::vector<Scalar>> c_parts;
    c_parts.reserve(solutions.size());
    for (const auto& s : solutions)
        c_parts.emplace_back(s.begin(), s.begin() + n);
    RrefWithCombos proj = rref_with_combinations(c_parts, f, n);
    out.c_basis = proj.rows;

    PitFamily fam;
    fam.field = f;
    fam.msize = n;
    for (const auto& u : proj.rows) {
        Matrix lm = a.left_multiplication(u);
        std::vector<std::vector<Scalar>> dense(n, zero_vector(f, n));
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& [c, v] : lm.row(r)) dense[r][c] = v;
        fam.mats.push_back(std::move(dense));
    }
    out.pit = pit_linear_family(fam);
    if (!out.pit.base_witness) return out;

    out.found = true;
    out.solution = zero_vector(f, total_len);
    for (std::size_t i = 0; i < proj.rows.size(); ++i) {
        const Scalar& ti = out.pit.witness_point[i];
        if (ti.is_zero()) continue;
        // combos[i] expresses the c-basis vector in the original solutions
        for (std::size_t s = 0; s < solutions.size(); ++s) {
            Scalar coeff = proj.combos[i][s] * ti;
            if (!coeff.is_zero()) vec_add_scaled(out.solution, solutions[s], coeff);
        }
    }
    return out;
}

std::string pit_summary(const PitOutcome& p) {
    std::ostringstream os;
    os << "grid side " << p.grid_side << ", " << p.base_points_scanned
       << " base points scanned";
    if (p.ext_points_scanned) os << ", " << p.ext_points_scanned << " extension points";
    if (p.polynomial_zero) os << "; determinant vanishes identically";
    if (p.ext_witness_only)
        os << "; nonzero only over a field extension (no base-field witness)";
    return os.str();
}

}  // namespace

std::optional<WitnessViolation> verify_witness(const Algebra& a, const Cochain2& alpha,
                                               const Witness& w) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> lhs = a.multiply(w.c, a.basis_vector(i));
        std::vector<Scalar> rhs = a.multiply(a.basis_vector(i), w.c);
        if (lhs != rhs) return WitnessViolation{"c is not central", i, 0};
    }
    if (!try_invert(a, w.c)) return WitnessViolation{"c is not invertible", 0, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = dot(alpha.at(i, j), w.c) - dot(alpha.at(j, i), w.c);
            std::vector<Scalar> comm = a.mul[i][j];
            for (std::size_t k = 0; k < n; ++k) comm[k] -= a.mul[j][i][k];
            s += dot(comm, w.h);
            if (!s.is_zero()) return WitnessViolation{"witness equation fails", i, j};
        }
    return std::nullopt;
}

SymmetryCertificate witness_condition2(const Algebra& a, const Cochain2& alpha) {
    require_cocycle(a, alpha);
    const std::size_t n = a.dim();
    const Field& f = a.field;
    SymmetryCertificate cert;
    cert.method = Method::cond2;

    // unknowns (c, h); rows: witness equation on all pairs, then centrality
    Matrix sys(f, 2 * n * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t t = 0; t < n; ++t) {
                Scalar v = alpha.at(i, j)[t] - alpha.at(j, i)[t];
                if (!v.is_zero()) sys.add_at(row, t, v);
            }
            for (std::size_t k = 0; k < n; ++k) {
                Scalar v = a.mul[i][j][k] - a.mul[j][i][k];
                if (!v.is_zero()) sys.add_at(row, n + k, v);
            }
        }
    append_centrality_rows(a, sys, n * n, 0);

    std::vector<std::vector<Scalar>> sols = kernel_basis(sys);
    cert.solution_space = sols;
    CSearchResult found = search_invertible_c(a, sols, 2 * n);
    cert.pit = found.pit;
    if (found.found) {
        cert.verdict = Verdict::symmetric;
        Witness w;
        w.c.assign(found.solution.begin(), found.solution.begin() + n);
        w.h.assign(found.solution.begin() + n, found.solution.end());
        if (auto viol = verify_witness(a, alpha, w))
            throw Error("witness_condition2: witness verification failed: " + viol->what);
        cert.witness = std::move(w);
    } else {
        cert.verdict = Verdict::not_symmetric;
        cert.note = "no central unit satisfies the witness equation; " + pit_summary(found.pit);
    }
    return cert;
}

SymmetryCertificate witness_condition3(const Algebra& a, const Cochain2& alpha) {
    require_cocycle(a, alpha);
    const std::size_t n = a.dim();
    const std::size_t n2 = n * n;
    const Field& f = a.field;
    SymmetryCertificate cert;
    cert.method = Method::cond3;

    TildeForm tilde = to_tilde(alpha, f);
    Matrix b1 = boundary_matrix(a, 1);
    Matrix b2 = boundary_matrix(a, 2);
    Matrix b3 = boundary_matrix(a, 3);
    Matrix bB1 = connes_matrix(a, 1);
    Matrix b2B1_t = (b2 * bB1).transpose();

    // unknowns (c, eta, gamma) of lengths n, n^2, n
    // rows: lift equation B_1^*(i_c^*(tilde) - b_2^*(eta)) + b_1^*(gamma) = 0 (n^2 rows),
    //       centrality of c (n^2 rows)
    Matrix sys(f, 2 * n2, n + n2 + n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix ick = contraction_matrix_degree0(a, a.basis_vector(k), 2);
        std::vector<Scalar> vk = bB1.apply_transpose(ick.apply_transpose(tilde.coords));
        for (std::size_t q = 0; q < n2; ++q)
            if (!vk[q].is_zero()) sys.add_at(q, k, vk[q]);
    }
    sys.insert_block(b2B1_t, 0, n, -f.one());
    sys.insert_block(b1.transpose(), 0, n + n2, f.one());
    append_centrality_rows(a, sys, n2, 0);

    std::vector<std::vector<Scalar>> sols = kernel_basis(sys);
    cert.solution_space = sols;
    CSearchResult found = search_invertible_c(a, sols, n + n2 + n);
    cert.pit = found.pit;
    if (!found.found) {
        cert.verdict = Verdict::not_symmetric;
        cert.note = "no central unit admits a cyclic lift; " + pit_summary(found.pit);
        return cert;
    }
    cert.verdict = Verdict::symmetric;
    std::vector<Scalar> c(found.solution.begin(), found.solution.begin() + n);
    std::vector<Scalar> eta(found.solution.begin() + n, found.solution.begin() + n + n2);
    std::vector<Scalar> gamma(found.solution.begin() + n + n2, found.solution.end());

    // the lifted cyclic 2-cocycle (i_c^*(tilde) - b_2^*(eta), gamma)
    CyclicClass2 lift;
    lift.beta = TildeForm::zero(f, n);
    Matrix ic = contraction_matrix_degree0(a, c, 2);
    lift.beta.coords = ic.apply_transpose(tilde.coords);
    std::vector<Scalar> corr = b2.apply_transpose(eta);
    for (std::size_t i = 0; i < lift.beta.coords.size(); ++i) lift.beta.coords[i] -= corr[i];
    lift.gamma = gamma;
    if (!is_zero_vector(b3.apply_transpose(lift.beta.coords)))
        throw Error("witness_condition3: lifted class is not a Hochschild cocycle");
    std::vector<Scalar> chk = bB1.apply_transpose(lift.beta.coords);
    std::vector<Scalar> g1 = b1.apply_transpose(lift.gamma);
    for (std::size_t i = 0; i < chk.size(); ++i) chk[i] += g1[i];
    if (!is_zero_vector(chk))
        throw Error("witness_condition3: cyclic cocycle identity fails for the lift");
    cert.lift = std::move(lift);

    Witness w;
    w.c = std::move(c);
    w.h = zero_vector(f, n);  // re-derive h through condition (2) for the certificate
    // h = gamma + eta(B_0 -) + alpha(1,1) c  (as forms on A)
    Matrix bB0 = connes_matrix(a, 0);
    std::vector<Scalar> etaB0 = bB0.apply_transpose(eta);
    std::vector<Scalar> a11c = dual_bimodule(a).right_act(alpha.evaluate(a.unit, a.unit, f), w.c);
    for (std::size_t k = 0; k < n; ++k) w.h[k] = gamma[k] + etaB0[k] + a11c[k];
    if (auto viol = verify_witness(a, alpha, w))
        throw Error("witness_condition3: derived witness fails verification: " + viol->what);
    cert.witness = std::move(w);
    return cert;
}

SymmetryCertificate oracle_condition1(const Algebra& a, const Cochain2& alpha) {
    require_cocycle(a, alpha);
    SymmetryCertificate cert;
    cert.method = Method::cond1;
    Algebra t = hochschild_extension(a, dual_bimodule(a), alpha);
    SymmetricDecision dec = is_symmetric_algebra(t);
    cert.pit = dec.pit;
    cert.solution_space = dec.trace_form_space;
    if (dec.symmetric) {
        cert.verdict = Verdict::symmetric;
        cert.form = dec.form;
    } else {
        cert.verdict = Verdict::not_symmetric;
        cert.note = "T(A, alpha) admits no symmetrizing form; max Gram rank " +
                    std::to_string(dec.max_gram_rank) + " < " + std::to_string(t.dim()) + "; " +
                    pit_summary(dec.pit);
        if (!dec.note.empty()) cert.note += "; " + dec.note;
    }
    return cert;
}

namespace {

SymmetryCertificate restricted_condition2(const Algebra& a, const Cochain2& alpha, Method m) {
    require_cocycle(a, alpha);
    const std::size_t n = a.dim();
    const Field& f = a.field;
    SymmetryCertificate cert;
    cert.method = m;

    if (m == Method::oty) {
        // c = 1, h = 0: pure feasibility check
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (dot(alpha.at(i, j), a.unit) != dot(alpha.at(j, i), a.unit)) ok = false;
        if (ok) {
            cert.verdict = Verdict::symmetric;
            cert.witness = Witness{a.unit, zero_vector(f, n)};
        } else {
            cert.verdict = Verdict::inconclusive;
            cert.note = "alpha(a,b)(1) = alpha(b,a)(1) fails; criterion inconclusive";
        }
        return cert;
    }

    // itagaki: h = 0, unknown c only
    Matrix sys(f, 2 * n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                Scalar v = alpha.at(i, j)[t] - alpha.at(j, i)[t];
                if (!v.is_zero()) sys.add_at(i * n + j, t, v);
            }
    append_centrality_rows(a, sys, n * n, 0);
    std::vector<std::vector<Scalar>> sols = kernel_basis(sys);
    cert.solution_space = sols;
    CSearchResult found = search_invertible_c(a, sols, n);
    cert.pit = found.pit;
    if (found.found) {
        cert.verdict = Verdict::symmetric;
        Witness w;
        w.c = found.solution;
        w.h = zero_vector(f, n);
        if (auto viol = verify_witness(a, alpha, w))
            throw Error("check_itagaki: witness verification failed: " + viol->what);
        cert.witness = std::move(w);
    } else {
        cert.verdict = Verdict::inconclusive;
        cert.note = "no central unit works with h = 0; criterion inconclusive; " +
                    pit_summary(found.pit);
    }
    return cert;
}

}  // namespace

SymmetryCertificate check_itagaki(const Algebra& a, const Cochain2& alpha) {
    return restricted_condition2(a, alpha, Method::itagaki);
}

SymmetryCertificate check_oty(const Algebra& a, const Cochain2& alpha) {
    return restricted_condition2(a, alpha, Method::oty);
}

BimoduleIso build_bimodule_iso(const Algebra& a, const Cochain2& alpha, const Witness& w) {
    if (auto viol = verify_witness(a, alpha, w))
        throw Error("build_bimodule_iso: invalid witness (" + viol->what + " at basis pair (" +
                    a.basis[viol->i] + ", " + a.basis[viol->j] + "))");
    const std::size_t n = a.dim();
    const Field& f = a.field;
    Algebra t = hochschild_extension(a, dual_bimodule(a), alpha);
    const std::size_t dn = t.dim();

    // (h,c) as a functional on T = A (+) A*: (h,c)((x,m)) = h(x) + m(c)
    std::vector<Scalar> hc = zero_vector(f, dn);
    for (std::size_t k = 0; k < n; ++k) {
        hc[k] = w.h[k];
        hc[n + k] = w.c[k];
    }

    Matrix phi(f, dn, dn);
    for (std::size_t u = 0; u < dn; ++u)
        for (std::size_t v = 0; v < dn; ++v) {
            Scalar val = dot(t.mul[u][v], hc);
            if (!val.is_zero()) phi.add_at(v, u, val);
        }
    if (rank(phi) != dn) throw Error("build_bimodule_iso: phi is singular");

    // bimodule morphism identity phi(u t x) = u phi(t) x on all basis pairs
    // (u, x). With (u psi x)(s) := psi(x s u), this reads, as matrices,
    // PHI L_u R_x == (L_x R_u)^T PHI.
    std::vector<Matrix> lmul, rmul;
    for (std::size_t i = 0; i < dn; ++i) {
        lmul.push_back(t.left_multiplication(t.basis_vector(i)));
        rmul.push_back(t.right_multiplication(t.basis_vector(i)));
    }
    for (std::size_t u = 0; u < dn; ++u)
        for (std::size_t x = 0; x < dn; ++x) {
            Matrix lhs = phi * (lmul[u] * rmul[x]);
            Matrix rhs = (lmul[x] * rmul[u]).transpose() * phi;
            if (!(lhs - rhs).is_zero_matrix())
                throw Error("build_bimodule_iso: bimodule morphism identity fails");
        }
    return BimoduleIso{std::move(phi)};
}

DecideReport decide(const Algebra& a, const Cochain2& alpha, const std::set<Method>& methods) {
    DecideReport rep;
    for (Method m : methods) {
        auto t0 = std::chrono::steady_clock::now();
        SymmetryCertificate cert;
        switch (m) {
            case Method::cond1: cert = oracle_condition1(a, alpha); break;
            case Method::cond2: cert = witness_condition2(a, alpha); break;
            case Method::cond3: cert = witness_condition3(a, alpha); break;
            case Method::itagaki: cert = check_itagaki(a, alpha); break;
            case Method::oty: cert = check_oty(a, alpha); break;
        }
        auto t1 = std::chrono::steady_clock::now();
        rep.outcomes.push_back(MethodOutcome{
            m, std::move(cert),
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()});
    }
    // pairwise agreement of the equivalent criteria
    bool have = false;
    Verdict v0 = Verdict::inconclusive;
    for (const auto& o : rep.outcomes) {
        if (o.method != Method::cond1 && o.method != Method::cond2 && o.method != Method::cond3)
            continue;
        if (!have) {
            v0 = o.certificate.verdict;
            have = true;
            continue;
        }
        if (o.certificate.verdict != v0) {
            std::ostringstream dump;
            dump << "disagreement between equivalent criteria:\n";
            for (const auto& p : rep.outcomes)
                dump << "  " << method_name(p.method) << ": "
                     << verdict_name(p.certificate.verdict) << " (" << p.certificate.note
                     << ")\n";
            dump << "algebra dim " << a.dim() << " over " << a.field.str() << "\n";
            throw InternalDisagreement("equivalent symmetry criteria disagree", dump.str());
        }
    }
    if (have) rep.consensus = v0;
    return rep;
}

}  // namespace hext
