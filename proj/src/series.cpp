#include "treealg/series.hpp"

namespace treealg {

PowerSeries PowerSeries::x(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coeff(1) = 1;
    return s;
}

PowerSeries PowerSeries::constant(const RatScalar& c, int order) {
    PowerSeries s(order);
    s.coeff(0) = c;
    return s;
}

PowerSeries PowerSeries::add(const PowerSeries& other) const {
    int n = std::min(order(), other.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeff(i) = coeff(i) + other.coeff(i);
    return out;
}

PowerSeries PowerSeries::sub(const PowerSeries& other) const {
    int n = std::min(order(), other.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeff(i) = coeff(i) - other.coeff(i);
    return out;
}

PowerSeries PowerSeries::mul(const PowerSeries& other) const {
    int n = std::min(order(), other.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) out.coeff(i + j) += coeff(i) * other.coeff(j);
    }
    return out;
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeff(0) == 0) throw std::invalid_argument("reciprocal needs a unit constant term");
    PowerSeries out(order());
    out.coeff(0) = 1 / coeff(0);
    for (int n = 1; n <= order(); ++n) {
        RatScalar s = 0;
        for (int k = 1; k <= n; ++k) s += coeff(k) * out.coeff(n - k);
        out.coeff(n) = -s / coeff(0);
    }
    return out;
}

mpz_class tau(int k) {
    if (k < 1) throw std::invalid_argument("tau requires k >= 1");
    // (2k-2)! / (k! (k-1)!) = Catalan(k-1)
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * (k - 1)),
                 static_cast<unsigned long>(k - 1));
    return b / k;
}

std::pair<mpz_class, mpz_class> dims(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("dims requires n, d >= 1");
    mpz_class dn = 1;
    for (int i = 0; i < n; ++i) dn *= d;
    mpz_class cat;
    mpz_bin_uiui(cat.get_mpz_t(), static_cast<unsigned long>(2 * n),
                 static_cast<unsigned long>(n));
    cat /= n + 1;
    return {cat * dn, tau(n) * dn};
}

TVSeries tv_series(const std::vector<int>& grades, int order) {
    PowerSeries p(order);
    for (int g : grades) {
        if (g < 1) throw std::invalid_argument("generator grades must be >= 1");
        if (g <= order) p.coeff(g) += 1;
    }
    PowerSeries one = PowerSeries::constant(1, order);
    PowerSeries r = one.sub(p).reciprocal();
    std::vector<PowerSeries> by_length;
    by_length.push_back(one);
    for (int m = 1; m <= order; ++m) by_length.push_back(by_length.back().mul(p));
    std::vector<std::vector<RatScalar>> h(static_cast<std::size_t>(order) + 1,
                                          std::vector<RatScalar>(static_cast<std::size_t>(order) + 1));
    for (int n = 0; n <= order; ++n)
        for (int m = 0; m <= order; ++m)
            h[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
                by_length[static_cast<std::size_t>(m)].coeff(n);
    return TVSeries{std::move(p), std::move(r), std::move(by_length), std::move(h)};
}

}  // namespace treealg
