#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lp2/matrix.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

/*
 * Exact linear algebra kernels.
 *
 * Ranks over Q use fraction-free (Bareiss) elimination: each row is scaled by the
 * lcm of its denominators, then eliminated over Z where every intermediate entry is
 * a minor of the integer matrix and every division is exact. Ranks over Z/p use plain
 * Gaussian elimination.
 *
 * Kernel and cokernel bases come from the reduced row echelon form and are ordered by
 * column index, so results are reproducible run to run.
 */

std::size_t rank_bareiss(const QMatrix& m);
std::size_t rank_mod_p(const QMatrix& m, std::uint64_t p);
std::size_t rank(const QMatrix& m, const ScalarMode& mode);

struct RrefResult {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);

/// Columns form a basis of {x : m x = 0}; one column per free variable, with that
/// variable set to 1 and the other free variables 0. Shape is cols(m) x nullity.
QMatrix nullspace(const QMatrix& m);

/// Rows form a basis of {y : y m = 0}, returned in reduced row echelon form.
/// Used as the quotient map onto coker(m).
QMatrix left_nullspace(const QMatrix& m);

/// For a full-row-rank matrix q in reduced row echelon form, the section s with q s = I
/// formed by the unit vectors at the pivot columns.
QMatrix rref_section(const QMatrix& q);

bool is_invertible(const QMatrix& m);

}  // namespace lp2
