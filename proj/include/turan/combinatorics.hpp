#ifndef TURAN_COMBINATORICS_HPP
#define TURAN_COMBINATORICS_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

// C(n, k) in unsigned 64-bit arithmetic; throws on overflow.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        std::uint64_t den = static_cast<std::uint64_t>(i) / g;
        std::uint64_t rr = r / g;
        if (rr > ~std::uint64_t{0} / num) throw std::overflow_error("binomial overflow");
        r = rr * num / den;
    }
    return r;
}

// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for real x.
inline double binomial_real(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (x - i) / (k - i);
    return r;
}

// Enumerates k-subsets of {0,...,n-1} in colexicographic order
// (sets compared by their largest differing element). The callback
// receives the current subset as a sorted vector; return value ignored.
template <typename F>
void for_each_colex_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k == 0) {
        f(c);
        return;
    }
    while (true) {
        f(c);
        // Smallest position whose increment keeps the set sorted.
        int i = 0;
        while (i + 1 < k && c[i] + 1 == c[i + 1]) ++i;
        if (c[i] + 1 >= n && i == k - 1) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
        if (c[k - 1] >= n) break;
    }
}

// Rank of a sorted k-subset in the colex enumeration above.
inline std::uint64_t colex_rank(const std::vector<int>& sorted_subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted_subset.size(); ++i)
        r += binomial(sorted_subset[i], static_cast<int>(i) + 1);
    return r;
}

// Exact rational, always normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace turan

#endif
