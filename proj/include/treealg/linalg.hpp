#pragma once

#include <gmpxx.h>

#include <vector>

namespace treealg {

// Dense square/rectangular matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return data_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
    const mpz_class& at(int i, int j) const {
        return data_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)];
    }

    IntMatrix mul(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    int rows_, cols_;
    std::vector<mpz_class> data_;
};

// Fraction-free Bareiss elimination; exact determinant of a square matrix.
mpz_class bareiss_det(IntMatrix m);

// Exact inverse over the rationals; returns false when singular.
bool rational_inverse(const IntMatrix& a, std::vector<std::vector<mpq_class>>& inv);

// Integral inverse; throws std::logic_error when the exact inverse has a
// non-integer entry (callers use this where unimodularity is guaranteed).
IntMatrix integral_inverse(const IntMatrix& a);

// Dimension and basis of the right kernel of a rational matrix.
int rational_kernel(std::vector<std::vector<mpq_class>> m,
                    std::vector<std::vector<mpq_class>>* basis = nullptr);

}  // namespace treealg
