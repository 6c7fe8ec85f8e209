#include "exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>

namespace torelli {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw input_error("matrix dimension mismatch in product");
    IntMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

Vec mat_vec(const IntMat& m, const Vec& v) {
    if (m.cols != v.size()) throw input_error("matrix/vector dimension mismatch");
    Vec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (v[j] != 0) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

IntMat mat_transpose(const IntMat& m) {
    IntMat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Vec vec_add(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw input_error("vector dimension mismatch");
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

Vec vec_sub(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw input_error("vector dimension mismatch");
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

Vec vec_scale(const Vec& u, const Int& k) {
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * k;
    return r;
}

bool vec_is_zero(const Vec& u) {
    return std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
}

Vec primitive(Vec v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return v;
    for (Int& x : v) x /= g;
    for (const Int& x : v)
        if (x != 0) {
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    return v;
}

namespace {
std::size_t pivot_of(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}
}  // namespace

bool IntEchelon::insert(Vec v) {
    for (const Vec& row : rows) {
        std::size_t p = pivot_of(row);
        if (p < v.size() && v[p] != 0) {
            // fraction-free cross-multiplication, then renormalize
            Int a = row[p], b = v[p];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * a - row[i] * b;
            v = primitive(std::move(v));
        }
    }
    if (vec_is_zero(v)) return false;
    v = primitive(std::move(v));
    std::size_t p = pivot_of(v);
    auto it = std::upper_bound(rows.begin(), rows.end(), p,
                               [](std::size_t pv, const Vec& r) { return pv < pivot_of(r); });
    rows.insert(it, std::move(v));
    return true;
}

std::size_t rank_of_rows(const std::vector<Vec>& rows) {
    IntEchelon e;
    for (const Vec& r : rows) e.insert(r);
    return e.rank();
}

std::vector<Vec> kernel_basis(const IntMat& g) {
    if (g.rows != g.cols) throw input_error("kernel_basis expects a square matrix");
    const std::size_t n = g.cols;
    // Plain Gauss over Q; dimensions here are tiny.
    std::vector<std::vector<Rat>> m(g.rows, std::vector<Rat>(n));
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j));

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[r]);
        Rat inv = m[r][c];
        for (std::size_t j = 0; j < n; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<Vec> basis;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> k(n, Rat(0));
        k[fc] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) k[pivot_col[i]] = -m[i][fc];
        Int lcm = 1;
        for (const Rat& x : k) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Int(numerator(k[i])) * (lcm / Int(denominator(k[i])));
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::runtime_error("integer too large for serialization");
    return static_cast<long long>(v);
}

}  // namespace torelli
