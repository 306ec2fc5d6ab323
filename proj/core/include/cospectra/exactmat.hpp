#pragma once

// Exact dense matrix arithmetic over arbitrary-precision integers, plus the
// scaled-rational wrapper used to carry conjugation results without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cospectra {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero_diagonal() const;
    bool is_zero_one() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& c) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// num / den, entrywise.  Never normalized implicitly: the denominator records
// the scale the producer worked at, which the admissibility checks inspect.
struct ScaledMatrix {
    IntMatrix num;
    Int den = 1;

    ScaledMatrix() = default;
    ScaledMatrix(IntMatrix n, Int d) : num(std::move(n)), den(std::move(d)) {}
    explicit ScaledMatrix(IntMatrix n) : num(std::move(n)) {}

    int rows() const { return num.rows(); }
    int cols() const { return num.cols(); }

    // Divides out gcd(all entries, den); den kept positive.
    ScaledMatrix normalized() const;
    ScaledMatrix transposed() const { return {num.transposed(), den}; }

    // Equality as rational matrices, i.e. up to scale.
    bool same_value(const ScaledMatrix& o) const;
};

// q^T a q at denominator q.den^2, entries exact.
ScaledMatrix conjugate(const ScaledMatrix& q, const IntMatrix& a);

class ZeroOneMatrix {
public:
    ZeroOneMatrix() = default;
    ZeroOneMatrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return bits_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, bool v) { bits_[static_cast<size_t>(i) * cols_ + j] = v; }

    IntMatrix to_int() const;
    bool operator==(const ZeroOneMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<bool> bits_;
};

// Exact value of one offending entry: num/den, unreduced.
struct EntryWitness {
    int row = 0;
    int col = 0;
    Int num = 0;
    Int den = 1;
};

struct ZeroOneCheck {
    bool ok = false;
    ZeroOneMatrix matrix;   // meaningful when ok
    EntryWitness witness;   // meaningful when !ok
};

// Succeeds iff every entry of s is exactly 0 or exactly 1 as a rational.
ZeroOneCheck as_zero_one(const ScaledMatrix& s);

// Text format: header line "rows cols den", then one space-separated row of
// numerators per line.
void write_mat(std::ostream& out, const ScaledMatrix& m);
std::optional<ScaledMatrix> read_mat(std::istream& in);

ScaledMatrix load_mat(const std::string& path);          // throws std::runtime_error
void save_mat(const std::string& path, const ScaledMatrix& m);

}  // namespace cospectra
