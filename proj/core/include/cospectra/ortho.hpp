#pragma once

// Rational orthogonal matrices with constant row sum one, in the canonical
// block-circulant shape used by all constructions here.

#include "exactmat.hpp"

#include <string>

namespace cospectra {

// q.num / q.den is orthogonal with all row sums one; level is the smallest
// positive integer whose multiple of the matrix is integral.
struct RationalOrthogonal {
    ScaledMatrix q;
    int level = 1;
    int block_order = 0;   // set by build_q, 0 when reconstructed from raw data
    int m = 0;             // number of diagonal blocks, 0 when unknown

    int order() const { return q.num.rows(); }
};

// The canonical matrix of order level*m: diagonal blocks (J - level*I)/level,
// the block directly below each diagonal block J/level, wrapping so the
// top-right block is J/level.  level must be 2 or 3, m at least 2.
RationalOrthogonal build_q(int level, int m);

// Embeds q into order n as a leading principal block with an identity tail.
ScaledMatrix extend_identity(const RationalOrthogonal& q, int n);

struct ValidateResult {
    bool ok = false;
    RationalOrthogonal value;   // meaningful when ok
    std::string reason;         // violated condition when !ok
    int row = -1;               // location when applicable
    int col = -1;
};

// Checks orthogonality and unit row sums exactly, then computes the level of
// the given representation.  Accepts any exact rational orthogonal matrix,
// not only canonical ones.
ValidateResult validate(const ScaledMatrix& q);

}  // namespace cospectra
