#include "cospectra/exactmat.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cospectra {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

IntMatrix IntMatrix::ones(int rows, int cols) {
    IntMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = 1;
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero_diagonal() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

bool IntMatrix::is_zero_one() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Int& v = at(i, j);
            if (v != 0 && v != 1) return false;
        }
    return true;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const { return mat_mul(*this, o); }

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

ScaledMatrix ScaledMatrix::normalized() const {
    Int g = den < 0 ? -den : den;
    for (int i = 0; i < num.rows() && g != 1; ++i)
        for (int j = 0; j < num.cols() && g != 1; ++j)
            g = boost::multiprecision::gcd(g, num.at(i, j));
    if (g == 0) g = 1;
    if (den < 0) g = -g;
    ScaledMatrix r(num, den / g);
    for (int i = 0; i < r.num.rows(); ++i)
        for (int j = 0; j < r.num.cols(); ++j) r.num.at(i, j) /= g;
    return r;
}

bool ScaledMatrix::same_value(const ScaledMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (num.at(i, j) * o.den != o.num.at(i, j) * den) return false;
    return true;
}

ScaledMatrix conjugate(const ScaledMatrix& q, const IntMatrix& a) {
    if (q.rows() != a.rows() || a.rows() != a.cols()) throw std::invalid_argument("conjugate: shape mismatch");
    IntMatrix qt = q.num.transposed();
    return {mat_mul(mat_mul(qt, a), q.num), q.den * q.den};
}

IntMatrix ZeroOneMatrix::to_int() const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) r.at(i, j) = 1;
    return r;
}

ZeroOneCheck as_zero_one(const ScaledMatrix& s) {
    ZeroOneCheck r;
    r.matrix = ZeroOneMatrix(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) {
            const Int& v = s.num.at(i, j);
            if (v == 0) continue;
            if (v == s.den) {
                r.matrix.set(i, j, true);
            } else {
                r.witness = {i, j, v, s.den};
                return r;
            }
        }
    r.ok = true;
    return r;
}

void write_mat(std::ostream& out, const ScaledMatrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.den << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.num.at(i, j);
        }
        out << '\n';
    }
}

std::optional<ScaledMatrix> read_mat(std::istream& in) {
    long long rows = 0, cols = 0;
    Int den;
    if (!(in >> rows >> cols >> den)) return std::nullopt;
    if (rows < 0 || cols < 0 || den == 0) return std::nullopt;
    ScaledMatrix m(IntMatrix(static_cast<int>(rows), static_cast<int>(cols)), den);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!(in >> m.num.at(i, j))) return std::nullopt;
    return m;
}

ScaledMatrix load_mat(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto m = read_mat(in);
    if (!m) throw std::runtime_error("malformed matrix file " + path);
    return *m;
}

void save_mat(const std::string& path, const ScaledMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_mat(out, m);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace cospectra
