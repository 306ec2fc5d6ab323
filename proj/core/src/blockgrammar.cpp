#include "cospectra/blockgrammar.hpp"

#include <stdexcept>

namespace cospectra {

namespace {

#include "block_tables.inc"

template <size_t N, int B>
std::array<IntMatrix, N> to_matrices(const int (&table)[N][B][B]) {
    std::array<IntMatrix, N> out;
    for (size_t t = 0; t < N; ++t) {
        IntMatrix m(B, B);
        for (int i = 0; i < B; ++i)
            for (int j = 0; j < B; ++j) m.at(i, j) = table[t][i][j];
        out[t] = std::move(m);
    }
    return out;
}

}  // namespace

const std::array<IntMatrix, 16>& blocks2() {
    static const auto a = to_matrices(kBlocks2);
    return a;
}

const std::array<IntMatrix, 8>& sym3() {
    static const auto a = to_matrices(kSym3);
    return a;
}

const std::array<IntMatrix, 8>& blocks3() {
    static const auto a = to_matrices(kBlocks3);
    return a;
}

const std::array<IntMatrix, 56>& band3() {
    static const auto a = to_matrices(kBand3);
    return a;
}

const std::array<IntMatrix, 12>& equiv3() {
    static const auto a = to_matrices(kEquiv3);
    return a;
}

ScaledMatrix window_value(const WindowQuad& w) {
    const int b = w.level;
    if (b != 2 && b != 3) throw std::invalid_argument("window level must be 2 or 3");
    for (const IntMatrix* blk : {&w.p, &w.q, &w.r, &w.s})
        if (blk->rows() != b || blk->cols() != b) throw std::invalid_argument("window block order mismatch");
    IntMatrix jm = IntMatrix::ones(b, b);
    IntMatrix y = jm - IntMatrix::identity(b) * Int(b);
    IntMatrix v = y * w.p * y + y * w.q * jm + jm * w.r * y + jm * w.s * jm;
    return {std::move(v), Int(b) * b};
}

bool window_admissible(const WindowQuad& w) { return as_zero_one(window_value(w)).ok; }

std::vector<OffdiagQuad> enumerate_offdiag_level2() {
    const auto& a = blocks2();
    std::vector<OffdiagQuad> out;
    WindowQuad w;
    w.level = 2;
    for (int p = 1; p <= 16; ++p)
        for (int q = 1; q <= 16; ++q)
            for (int r = 1; r <= 16; ++r)
                for (int s = 1; s <= 16; ++s) {
                    w.p = a[p - 1];
                    w.q = a[q - 1];
                    w.r = a[r - 1];
                    w.s = a[s - 1];
                    if (window_admissible(w)) out.push_back({p, q, r, s});
                }
    return out;
}

std::vector<DiagTriple> enumerate_diag_level2() {
    const auto& a = blocks2();
    const int diag_ids[2] = {1, 7};
    std::vector<DiagTriple> out;
    WindowQuad w;
    w.level = 2;
    for (int d : diag_ids)
        for (int c = 1; c <= 16; ++c)
            for (int dp : diag_ids) {
                w.p = a[d - 1];
                w.q = a[c - 1];
                w.r = a[c - 1].transposed();
                w.s = a[dp - 1];
                if (window_admissible(w)) out.push_back({d, c, dp});
            }
    return out;
}

IntMatrix unpack3(int bits) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (bits >> (i * 3 + j) & 1) m.at(i, j) = 1;
    return m;
}

int pack3(const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3 || !m.is_zero_one()) throw std::invalid_argument("pack3 needs a 3x3 (0,1)-matrix");
    int bits = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m.at(i, j) == 1) bits |= 1 << (i * 3 + j);
    return bits;
}

std::vector<DiagTriple3> enumerate_diag_level3() {
    const auto& a = sym3();
    std::vector<DiagTriple3> out;
    WindowQuad w;
    w.level = 3;
    for (int d = 1; d <= 8; ++d)
        for (int bits = 0; bits < 512; ++bits) {
            IntMatrix c = unpack3(bits);
            IntMatrix ct = c.transposed();
            for (int dp = 1; dp <= 8; ++dp) {
                w.p = a[d - 1];
                w.q = c;
                w.r = ct;
                w.s = a[dp - 1];
                if (window_admissible(w)) out.push_back({d, dp, bits});
            }
        }
    return out;
}

CheckResult check_matrix(const IntMatrix& a, const RationalOrthogonal& q) {
    if (a.rows() != q.order() || a.cols() != q.order()) throw std::invalid_argument("check_matrix: order mismatch");
    if (!a.is_zero_one() || !a.is_symmetric() || !a.is_zero_diagonal())
        throw std::invalid_argument("check_matrix: input is not a simple adjacency matrix");
    auto z = as_zero_one(conjugate(q.q, a));
    CheckResult r;
    r.ok = z.ok;
    r.image = std::move(z.matrix);
    r.witness = z.witness;
    return r;
}

}  // namespace cospectra
