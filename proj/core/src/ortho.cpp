#include "cospectra/ortho.hpp"

#include <stdexcept>

namespace cospectra {

RationalOrthogonal build_q(int level, int m) {
    if (level != 2 && level != 3) throw std::invalid_argument("level must be 2 or 3");
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    const int b = level;
    const int k = b * m;
    IntMatrix q(k, k);
    for (int bi = 0; bi < m; ++bi) {
        const int bj = (bi + m - 1) % m;   // J sits one block below Y, wrapping upward
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < b; ++c) {
                q.at(bi * b + r, bi * b + c) = (r == c) ? 1 - b : 1;
                q.at(bi * b + r, bj * b + c) = 1;
            }
    }
    RationalOrthogonal out;
    out.q = ScaledMatrix(std::move(q), b);
    out.level = level;
    out.block_order = b;
    out.m = m;
    return out;
}

ScaledMatrix extend_identity(const RationalOrthogonal& q, int n) {
    const int k = q.order();
    if (n < k) throw std::invalid_argument("extension order smaller than the matrix");
    IntMatrix big(n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) big.at(i, j) = q.q.num.at(i, j);
    for (int i = k; i < n; ++i) big.at(i, i) = q.q.den;
    return {std::move(big), q.q.den};
}

ValidateResult validate(const ScaledMatrix& q) {
    ValidateResult out;
    const int n = q.rows();
    if (n != q.cols()) {
        out.reason = "not square";
        return out;
    }
    if (q.den == 0) {
        out.reason = "zero denominator";
        return out;
    }
    const Int d2 = q.den * q.den;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int dot = 0;
            for (int r = 0; r < n; ++r) dot += q.num.at(r, i) * q.num.at(r, j);
            if (dot != (i == j ? d2 : 0)) {
                out.reason = "columns not orthonormal";
                out.row = i;
                out.col = j;
                return out;
            }
        }
    for (int i = 0; i < n; ++i) {
        Int sum = 0;
        for (int j = 0; j < n; ++j) sum += q.num.at(i, j);
        if (sum != q.den) {
            out.reason = "row sum differs from one";
            out.row = i;
            return out;
        }
    }
    Int g = q.den < 0 ? Int(-q.den) : q.den;
    for (int i = 0; i < n && g != 1; ++i)
        for (int j = 0; j < n && g != 1; ++j) g = boost::multiprecision::gcd(g, q.num.at(i, j));
    const Int level_big = (q.den < 0 ? Int(-q.den) : q.den) / g;
    out.ok = true;
    out.value.q = q;
    out.value.level = level_big.convert_to<int>();
    out.value.block_order = 0;
    out.value.m = 0;
    return out;
}

}  // namespace cospectra
