#include "hext/tensor.hpp"

namespace hext {

std::size_t tensor_dim(std::size_t dim, std::size_t power, std::size_t max_cells) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < power; ++i) {
        if (dim != 0 && out > max_cells / dim)
            throw DegreeCapExceeded("tensor power " + std::to_string(power) + " of dimension " +
                                    std::to_string(dim) + " exceeds the configured cap");
        out *= dim;
    }
    if (out > max_cells)
        throw DegreeCapExceeded("tensor basis larger than the configured cap");
    return out;
}

std::size_t flatten(const std::vector<std::size_t>& idx, std::size_t dim) {
    std::size_t out = 0;
    for (std::size_t i : idx) {
        if (i >= dim) throw DimensionMismatch("multi-index out of bounds");
        out = out * dim + i;
    }
    return out;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::size_t dim, std::size_t power) {
    std::vector<std::size_t> idx(power, 0);
    for (std::size_t i = power; i-- > 0;) {
        idx[i] = flat % dim;
        flat /= dim;
    }
    return idx;
}

void ChainVector::add(const std::vector<std::size_t>& idx, const Scalar& v) {
    if (idx.size() != degree + 1) throw DimensionMismatch("chain multi-index length mismatch");
    auto it = coords.find(idx);
    if (it == coords.end()) {
        if (!v.is_zero()) coords.emplace(idx, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) coords.erase(it);
}

std::vector<Scalar> ChainVector::to_dense(const Field& f) const {
    std::vector<Scalar> out = zero_vector(f, tensor_dim(algebra_dim, degree + 1));
    for (const auto& [idx, v] : coords) out[flatten(idx, algebra_dim)] = v;
    return out;
}

ChainVector ChainVector::from_dense(const Field& f, std::size_t degree, std::size_t algebra_dim,
                                    const std::vector<Scalar>& dense) {
    (void)f;
    ChainVector cv;
    cv.degree = degree;
    cv.algebra_dim = algebra_dim;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) cv.coords.emplace(unflatten(i, algebra_dim, degree + 1), dense[i]);
    return cv;
}

bool ChainVector::is_zero() const { return coords.empty(); }

ChainVector chain_sub(const ChainVector& a, const ChainVector& b) {
    if (a.degree != b.degree || a.algebra_dim != b.algebra_dim)
        throw DimensionMismatch("chain_sub degree mismatch");
    ChainVector out = a;
    for (const auto& [idx, v] : b.coords) out.add(idx, -v);
    return out;
}

std::vector<Scalar> CochainVector::to_dense(const Field& f) const {
    std::size_t n = tensor_dim(algebra_dim, degree) * coeff_dim;
    std::vector<Scalar> out = zero_vector(f, n);
    for (const auto& [key, v] : coords)
        out[flatten(key.first, algebra_dim) * coeff_dim + key.second] = v;
    return out;
}

CochainVector CochainVector::from_dense(const Field& f, std::size_t degree,
                                        std::size_t algebra_dim, std::size_t coeff_dim,
                                        const std::vector<Scalar>& dense) {
    (void)f;
    CochainVector cv;
    cv.degree = degree;
    cv.algebra_dim = algebra_dim;
    cv.coeff_dim = coeff_dim;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i].is_zero()) continue;
        cv.coords.emplace(std::make_pair(unflatten(i / coeff_dim, algebra_dim, degree),
                                         i % coeff_dim),
                          dense[i]);
    }
    return cv;
}

Cochain2 Cochain2::zero(const Field& f, std::size_t adim, std::size_t mdim) {
    Cochain2 c;
    c.algebra_dim = adim;
    c.coeff_dim = mdim;
    c.values.assign(adim, std::vector<std::vector<Scalar>>(adim, zero_vector(f, mdim)));
    return c;
}

std::vector<Scalar> Cochain2::evaluate(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                       const Field& f) const {
    std::vector<Scalar> out = zero_vector(f, coeff_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < algebra_dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            vec_add_scaled(out, values[i][j], c);
        }
    }
    return out;
}

std::vector<Scalar> Cochain2::to_dense(const Field& f) const {
    std::vector<Scalar> out = zero_vector(f, algebra_dim * algebra_dim * coeff_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
        for (std::size_t j = 0; j < algebra_dim; ++j)
            for (std::size_t t = 0; t < coeff_dim; ++t)
                out[(i * algebra_dim + j) * coeff_dim + t] = values[i][j][t];
    return out;
}

Cochain2 Cochain2::from_dense(const Field& f, std::size_t adim, std::size_t mdim,
                              const std::vector<Scalar>& dense) {
    Cochain2 c = zero(f, adim, mdim);
    for (std::size_t i = 0; i < adim; ++i)
        for (std::size_t j = 0; j < adim; ++j)
            for (std::size_t t = 0; t < mdim; ++t)
                c.values[i][j][t] = dense[(i * adim + j) * mdim + t];
    return c;
}

Cochain2 Cochain2::add(const Cochain2& o) const {
    if (algebra_dim != o.algebra_dim || coeff_dim != o.coeff_dim)
        throw DimensionMismatch("cochain sum shape mismatch");
    Cochain2 out = *this;
    for (std::size_t i = 0; i < algebra_dim; ++i)
        for (std::size_t j = 0; j < algebra_dim; ++j)
            for (std::size_t t = 0; t < coeff_dim; ++t) out.values[i][j][t] += o.values[i][j][t];
    return out;
}

bool Cochain2::is_zero() const {
    for (const auto& row : values)
        for (const auto& cell : row)
            for (const auto& v : cell)
                if (!v.is_zero()) return false;
    return true;
}

TildeForm TildeForm::zero(const Field& f, std::size_t adim) {
    TildeForm t;
    t.algebra_dim = adim;
    t.coords = zero_vector(f, adim * adim * adim);
    return t;
}

Scalar TildeForm::at(std::size_t i, std::size_t j, std::size_t k) const {
    return coords[(i * algebra_dim + j) * algebra_dim + k];
}

bool TildeForm::is_zero() const { return is_zero_vector(coords); }

AlgebraCochain AlgebraCochain::zero(const Field& f, std::size_t m, std::size_t adim) {
    AlgebraCochain c;
    c.degree = m;
    c.algebra_dim = adim;
    c.values.assign(tensor_dim(adim, m), zero_vector(f, adim));
    return c;
}

AlgebraCochain AlgebraCochain::element(const Field& f, const std::vector<Scalar>& a) {
    (void)f;
    AlgebraCochain c;
    c.degree = 0;
    c.algebra_dim = a.size();
    c.values = {a};
    return c;
}

}  // namespace hext
