#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

// All arithmetic in this library is exact. Integer values use arbitrary
// precision so that no intermediate result can overflow; rationals appear
// only transiently inside kernel computations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

// Precondition violations (bad dimensions, malformed notation, out-of-range
// indices). The C API maps these to TRL_INVALID, the CLI to exit code 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n);
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
Vec mat_vec(const IntMat& m, const Vec& v);
IntMat mat_transpose(const IntMat& m);

Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scale(const Vec& u, const Int& k);
bool vec_is_zero(const Vec& u);

// Divides out the gcd of the entries and normalizes the leading nonzero
// entry to be positive. The zero vector is returned unchanged.
Vec primitive(Vec v);

// Row-echelon accumulator over Q, kept fraction-free: rows are primitive
// integer vectors with strictly increasing pivot columns.
struct IntEchelon {
    std::vector<Vec> rows;  // sorted by pivot column

    // Reduces v against the current rows; inserts the remainder if nonzero.
    // Returns true when the rank grew.
    bool insert(Vec v);
    std::size_t rank() const { return rows.size(); }
};

std::size_t rank_of_rows(const std::vector<Vec>& rows);

// Basis of { k : G k = 0 } for a square integer matrix, as primitive
// integer vectors (kernel computed over Q, denominators cleared).
std::vector<Vec> kernel_basis(const IntMat& g);

Int binomial(int n, int k);

// Checked narrowing for JSON emission; every value this library serializes
// is tiny, so a failure here indicates a bug.
long long to_int64(const Int& v);

}  // namespace torelli
