#pragma once

#include <vector>

#include "k3inv/matrix.hpp"

namespace k3inv {

/// Smith normal form u*m*v = s with unimodular u, v and non-negative diagonal
/// s whose entries form a divisibility chain d1 | d2 | ... | dk.
struct SmithResult {
    IntMat s;
    IntMat u;
    IntMat v;
    IntMat u_inv;
    IntMat v_inv;
    int rank = 0; // number of nonzero diagonal entries

    std::vector<Int> divisors() const;
};

SmithResult smith_normal_form(const IntMat& m);

/// Basis of {x integer vector : m*x = 0}, returned as the rows of the result.
/// The row span is saturated in Z^cols(m).
IntMat integer_kernel(const IntMat& m);

/// Canonical row-style Hermite normal form of the row space (zero rows dropped,
/// positive pivots, entries above each pivot reduced). Equal row spans over Z
/// produce identical results.
IntMat hermite_normal_form(const IntMat& m);

/// Saturation of the rational row span of m inside Z^cols(m), in HNF.
IntMat saturate_rows(const IntMat& m);

/// Whether v lies in the integer row span of rows (rows need not be in HNF).
bool in_row_span(const IntMat& rows, const IntVec& v);

} // namespace k3inv
