#pragma once

#include <set>

#include "hext/cyclic.hpp"

namespace hext {

enum class Method { cond1, cond2, cond3, itagaki, oty };
enum class Verdict { symmetric, not_symmetric, inconclusive };

std::string method_name(Method m);
std::string verdict_name(Verdict v);

/// A central unit c and a linear form h with
/// alpha(a,b)(c) - alpha(b,a)(c) + h(ab - ba) = 0 for all a, b.
struct Witness {
    std::vector<Scalar> c;
    std::vector<Scalar> h;
};

struct SymmetryCertificate {
    Verdict verdict = Verdict::inconclusive;
    Method method = Method::cond2;
    std::optional<Witness> witness;
    std::optional<SymmetrizingForm> form;  // cond1 positive answers
    std::optional<CyclicClass2> lift;      // cond3 positive answers
    // negative / inconclusive evidence
    std::vector<std::vector<Scalar>> solution_space;  // basis of the feasibility system kernel
    PitOutcome pit;
    std::string note;
};

/// Theorem condition (2) as a decision procedure: solves the linear system in
/// (c, h), then decides invertibility of some c in the projected solution
/// space by deterministic PIT on det(L_c). Constructive both ways.
SymmetryCertificate witness_condition2(const Algebra& a, const Cochain2& alpha);

/// Theorem condition (3): joint linear system in (c, eta, gamma) for
/// B_1^*(i_c^*(tilde alpha) - b_2^*(eta)) + b_1^*(gamma) = 0 plus centrality
/// of c, then the same invertibility decision; returns the lifted cyclic
/// class on success.
SymmetryCertificate witness_condition3(const Algebra& a, const Cochain2& alpha);

/// Theorem condition (1), decided brute-force: builds T(A, alpha) and runs
/// the symmetrizing-form search on it. Independent of (2) and (3).
SymmetryCertificate oracle_condition1(const Algebra& a, const Cochain2& alpha);

/// Condition (2) restricted to h = 0 (Itagaki's criterion); sufficient, not
/// necessary, so the negative verdict is `inconclusive`.
SymmetryCertificate check_itagaki(const Algebra& a, const Cochain2& alpha);

/// Condition (2) restricted to h = 0 and c = 1 (Ohnuki-Takeda-Yamagata).
SymmetryCertificate check_oty(const Algebra& a, const Cochain2& alpha);

/// First violated basis pair of the witness invariants, if any.
struct WitnessViolation {
    std::string what;
    std::size_t i = 0, j = 0;
};
std::optional<WitnessViolation> verify_witness(const Algebra& a, const Cochain2& alpha,
                                               const Witness& w);

/// phi : T -> T*, phi(t)(s) = (h,c)(t s), as a 2n x 2n matrix in the standard
/// bases of T = A (+) A* and T* = A* (+) A. Verifies nonsingularity and the
/// bimodule-morphism identity on basis tuples; throws on an invalid witness.
struct BimoduleIso {
    Matrix phi;
};
BimoduleIso build_bimodule_iso(const Algebra& a, const Cochain2& alpha, const Witness& w);

struct MethodOutcome {
    Method method;
    SymmetryCertificate certificate;
    std::int64_t microseconds = 0;
};

struct DecideReport {
    std::vector<MethodOutcome> outcomes;
    Verdict consensus = Verdict::inconclusive;  // of the cond1/2/3 methods run
};

/// Runs the requested methods and asserts pairwise agreement of the
/// cond1/cond2/cond3 verdicts; disagreement throws InternalDisagreement with
/// a diagnostic dump (it falsifies the implementation, not the theorem).
DecideReport decide(const Algebra& a, const Cochain2& alpha, const std::set<Method>& methods);

}  // namespace hext
