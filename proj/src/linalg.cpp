#include "treealg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace treealg {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

mpz_class bareiss_det(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

bool rational_inverse(const IntMatrix& a, std::vector<std::vector<mpq_class>>& inv) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = a.rows();
    // Gauss-Jordan on [a | I] over Q.
    std::vector<std::vector<mpq_class>> m(std::size_t(n), std::vector<mpq_class>(std::size_t(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[std::size_t(i)][std::size_t(j)] = a.at(i, j);
        m[std::size_t(i)][std::size_t(n + i)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m[std::size_t(p)][std::size_t(k)] == 0) ++p;
        if (p == n) return false;
        std::swap(m[std::size_t(k)], m[std::size_t(p)]);
        mpq_class piv = m[std::size_t(k)][std::size_t(k)];
        for (int j = k; j < 2 * n; ++j) m[std::size_t(k)][std::size_t(j)] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            mpq_class f = m[std::size_t(i)][std::size_t(k)];
            if (f == 0) continue;
            for (int j = k; j < 2 * n; ++j)
                m[std::size_t(i)][std::size_t(j)] -= f * m[std::size_t(k)][std::size_t(j)];
        }
    }
    inv.assign(std::size_t(n), std::vector<mpq_class>(std::size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[std::size_t(i)][std::size_t(j)] = m[std::size_t(i)][std::size_t(n + j)];
    return true;
}

IntMatrix integral_inverse(const IntMatrix& a) {
    std::vector<std::vector<mpq_class>> inv;
    if (!rational_inverse(a, inv)) throw std::logic_error("matrix is singular");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const mpq_class& q = inv[std::size_t(i)][std::size_t(j)];
            if (q.get_den() != 1) throw std::logic_error("inverse is not integral");
            out.at(i, j) = q.get_num();
        }
    return out;
}

int rational_kernel(std::vector<std::vector<mpq_class>> m,
                    std::vector<std::vector<mpq_class>>* basis) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[std::size_t(p)][std::size_t(c)] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[std::size_t(r)], m[std::size_t(p)]);
        mpq_class piv = m[std::size_t(r)][std::size_t(c)];
        for (int j = c; j < cols; ++j) m[std::size_t(r)][std::size_t(j)] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            mpq_class f = m[std::size_t(i)][std::size_t(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                m[std::size_t(i)][std::size_t(j)] -= f * m[std::size_t(r)][std::size_t(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    int kernel_dim = cols - r;
    if (basis) {
        basis->clear();
        std::vector<char> is_pivot(std::size_t(cols), 0);
        for (int c : pivot_col) is_pivot[std::size_t(c)] = 1;
        for (int free_c = 0; free_c < cols; ++free_c) {
            if (is_pivot[std::size_t(free_c)]) continue;
            std::vector<mpq_class> v(static_cast<std::size_t>(cols));
            v[std::size_t(free_c)] = 1;
            for (int i = 0; i < r; ++i)
                v[std::size_t(pivot_col[std::size_t(i)])] = -m[std::size_t(i)][std::size_t(free_c)];
            basis->push_back(std::move(v));
        }
    }
    return kernel_dim;
}

}  // namespace treealg
