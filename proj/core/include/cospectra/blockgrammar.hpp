#pragma once

// Block alphabets, the 2x2-window admissibility predicate, and the exhaustive
// window sweeps that certify the construction tables.

#include "exactmat.hpp"
#include "ortho.hpp"

#include <array>
#include <vector>

namespace cospectra {

// Alphabets.  Tables use 1-based ids; these accessors are 0-based arrays, so
// A_k lives at index k-1.
const std::array<IntMatrix, 16>& blocks2();   // all 2x2 (0,1)-matrices, fixed table order
const std::array<IntMatrix, 8>& sym3();       // symmetric zero-diagonal 3x3 (0,1)-matrices
const std::array<IntMatrix, 8>& blocks3();    // the level-3 generator alphabet C1..C8
const std::array<IntMatrix, 56>& band3();     // zero-diagonal-window band alphabet B1..B56
const std::array<IntMatrix, 12>& equiv3();    // interchange classes: constant-column, permutation, constant-row

// One output block of q^T A q is determined by the 2x2 arrangement of input
// blocks p=A(i,j), q=A(i,j+1), r=A(i+1,j), s=A(i+1,j+1), indices cyclic.
struct WindowQuad {
    int level = 2;
    IntMatrix p, q, r, s;
};

// (Y p Y + Y q J + J r Y + J s J) / level^2 with Y = J - level*I.
ScaledMatrix window_value(const WindowQuad& w);
bool window_admissible(const WindowQuad& w);

struct OffdiagQuad {
    int p, q, r, s;   // 1-based ids into blocks2()
    bool operator==(const OffdiagQuad&) const = default;
};
// Sweeps all 16^4 off-diagonal windows; lexicographic (p,q,r,s) order.
std::vector<OffdiagQuad> enumerate_offdiag_level2();

struct DiagTriple {
    int d, c, dp;     // 1-based ids into blocks2(); d, dp in {1, 7}
    bool operator==(const DiagTriple&) const = default;
};
// Sweeps windows [[d, c], [c^T, d']] with d, d' symmetric zero-diagonal.
std::vector<DiagTriple> enumerate_diag_level2();

struct DiagTriple3 {
    int d, dp;        // 1-based ids into sym3()
    int c_bits;       // middle block packed row-major, bit 0 = entry (0,0)
    bool operator==(const DiagTriple3&) const = default;
};
std::vector<DiagTriple3> enumerate_diag_level3();

IntMatrix unpack3(int bits);
int pack3(const IntMatrix& m);

struct CheckResult {
    bool ok = false;
    ZeroOneMatrix image;    // q^T a q when ok
    EntryWitness witness;   // offending entry when !ok
};

// The ground-truth predicate: conjugates a by q and demands a (0,1) image.
// a must be symmetric, zero-diagonal, (0,1), of matching order.
CheckResult check_matrix(const IntMatrix& a, const RationalOrthogonal& q);

}  // namespace cospectra
