#pragma once

#include <cstdint>
#include <vector>

#include "hext/matrix.hpp"

namespace hext {

/// A linear family of square matrices  t -> sum_i t_i * mats[i].
/// det of the family is a polynomial of degree <= msize in each t_i.
struct PitFamily {
    Field field;
    std::size_t msize = 0;
    std::vector<std::vector<std::vector<Scalar>>> mats;  // dense msize x msize each
};

/// Deterministic decision of whether det(family) vanishes identically,
/// with a base-field witness point when one exists.
///
/// Grid: side = msize + 1 points per axis, lexicographic scan, smallest
/// point first. Over the rationals (and F_p with p >= side) the grid is
/// {0,...,msize}^d and decides polynomial identity directly. Over F_p with
/// p < side, all of F_p^d is scanned first (complete for base witnesses),
/// then the grid is completed with F_{p^k} points to certify identity.
struct PitOutcome {
    bool polynomial_zero = false;  // det == 0 as a polynomial
    bool base_witness = false;
    std::vector<Scalar> witness_point;  // lex-smallest base point with det != 0
    bool ext_witness_only = false;      // nonzero polynomial, no base-field point on the grid
    std::size_t max_rank_seen = 0;      // over scanned base points
    std::uint64_t base_points_scanned = 0;
    std::uint64_t ext_points_scanned = 0;
    std::size_t grid_side = 0;
};

PitOutcome pit_linear_family(const PitFamily& family);

}  // namespace hext
