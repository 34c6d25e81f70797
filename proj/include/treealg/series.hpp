#pragma once

#include <gmpxx.h>

#include <vector>

#include "treealg/algebra.hpp"

namespace treealg {

// Truncated formal power series with exact rational coefficients.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    static PowerSeries x(int order);
    static PowerSeries constant(const RatScalar& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatScalar& coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    RatScalar& coeff(int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    PowerSeries add(const PowerSeries& other) const;
    PowerSeries sub(const PowerSeries& other) const;
    PowerSeries mul(const PowerSeries& other) const;
    PowerSeries reciprocal() const;  // requires a nonzero constant term

    bool operator==(const PowerSeries& other) const = default;

private:
    std::vector<RatScalar> coeffs_;
};

// Number of planar rooted trees of weight k (Catalan C_{k-1}).
mpz_class tau(int k);

// Graded dimension of the tree algebra and of its primitive part.
std::pair<mpz_class, mpz_class> dims(int n, int d);

// Hilbert data of the tensor coalgebra over generators of the given grades:
// R = 1/(1-P), H_m = P^m, and the bigraded table h[n][m].
struct TVSeries {
    PowerSeries generator;                           // P(X)
    PowerSeries total;                               // R(X)
    std::vector<PowerSeries> by_length;              // H_m, m = 0..N
    std::vector<std::vector<RatScalar>> bigraded;    // h[n][m]
};
TVSeries tv_series(const std::vector<int>& grades, int order);

}  // namespace treealg
