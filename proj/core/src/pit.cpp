#include "hext/pit.hpp"

#include "hext/extfield.hpp"

namespace hext {

namespace {

// det over the extension field, plain Gaussian elimination.
ExtElem ext_det(std::vector<std::vector<ExtElem>> m, const ExtField& f) {
    const std::size_t n = m.size();
    ExtElem det = f.one();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = n;
        for (std::size_t r = rk; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == n) return f.zero();
        if (pr != rk) {
            std::swap(m[pr], m[rk]);
            det = -det;
        }
        det *= m[rk][col];
        ExtElem inv = m[rk][col].inverse();
        for (std::size_t c = col; c < n; ++c) m[rk][c] *= inv;
        for (std::size_t r = rk + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            ExtElem coeff = -m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] += coeff * m[rk][c];
        }
        ++rk;
    }
    return det;
}

// Odometer over {0..side-1}^d, rightmost digit fastest (lexicographic order).
bool next_point(std::vector<std::size_t>& t, std::size_t side) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < side) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

PitOutcome pit_linear_family(const PitFamily& family) {
    PitOutcome out;
    const Field& f = family.field;
    const std::size_t m = family.msize;
    const std::size_t d = family.mats.size();
    const std::size_t side = m + 1;
    out.grid_side = side;

    if (m == 0) {
        // determinant of the empty matrix is 1
        out.base_witness = true;
        return out;
    }
    if (d == 0) {
        out.polynomial_zero = true;
        return out;
    }

    const bool small_prime = f.is_prime_field() && f.p() < side;
    const std::size_t base_side = small_prime ? f.p() : side;

    // Phase 1: base-field points, lexicographic.
    std::vector<std::size_t> t(d, 0);
    std::vector<std::vector<Scalar>> acc(m, zero_vector(f, m));
    do {
        for (auto& row : acc)
            for (auto& v : row) v = f.zero();
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i] == 0) continue;
            Scalar ti = f.from_int(static_cast<long long>(t[i]));
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) acc[r][c] += family.mats[i][r][c] * ti;
        }
        std::size_t rk = 0;
        Scalar det = dense_determinant(acc, f, &rk);
        ++out.base_points_scanned;
        if (rk > out.max_rank_seen) out.max_rank_seen = rk;
        if (!det.is_zero()) {
            out.base_witness = true;
            out.witness_point.reserve(d);
            for (std::size_t i = 0; i < d; ++i)
                out.witness_point.push_back(f.from_int(static_cast<long long>(t[i])));
            return out;
        }
    } while (next_point(t, base_side));

    if (!small_prime) {
        // The base grid already had side >= degree+1 distinct points per axis.
        out.polynomial_zero = true;
        return out;
    }

    // Phase 2: complete the grid over F_{p^k} to certify identity.
    auto ext = ExtField::make(f.p(), side);
    std::vector<std::vector<std::vector<ExtElem>>> lifted(d);
    for (std::size_t i = 0; i < d; ++i) {
        lifted[i].assign(m, std::vector<ExtElem>(m, ext->zero()));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                lifted[i][r][c] = ext->from_base(family.mats[i][r][c].prime_residue());
    }
    std::vector<ExtElem> points;
    points.reserve(side);
    for (std::size_t i = 0; i < side; ++i) points.push_back(ext->element_at(i));

    std::fill(t.begin(), t.end(), 0);
    std::vector<std::vector<ExtElem>> eacc(m, std::vector<ExtElem>(m, ext->zero()));
    do {
        bool all_base = true;
        for (std::size_t i = 0; i < d; ++i)
            if (t[i] >= f.p()) all_base = false;
        if (all_base) continue;  // already scanned in phase 1
        for (auto& row : eacc)
            for (auto& v : row) v = ext->zero();
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i] == 0) continue;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) eacc[r][c] += lifted[i][r][c] * points[t[i]];
        }
        ++out.ext_points_scanned;
        if (!ext_det(eacc, *ext).is_zero()) {
            out.ext_witness_only = true;
            return out;
        }
    } while (next_point(t, side));

    out.polynomial_zero = true;
    return out;
}

}  // namespace hext
