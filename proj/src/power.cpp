#include "qf/power.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qf/combinatorics.hpp"

namespace qf {

namespace {

void accumulate_scaled(DiagonalForm& dst, const DiagonalForm& src, const SquareClass& c,
                       const BigInt& coeff) {
    for (const auto& [d, m] : src.entries()) dst.add(d.times(c), m * coeff);
}

/**
 * Shared convolution: process one diagonal class at a time, keeping the k+1 partial
 * powers of the processed prefix. A block of m copies of <c> contributes
 * C(m, i) x <c^i> (exterior) resp. C(m+i-1, i) x <c^i> (symmetric) in degree i.
 */
DiagonalForm convolve_powers(const DiagonalForm& f, long long k, bool exterior) {
    std::vector<DiagonalForm> dp(static_cast<std::size_t>(k) + 1);
    dp[0] = DiagonalForm::unit();
    for (const auto& [c, m] : f.entries()) {
        std::vector<DiagonalForm> next(dp.size());
        for (long long j = 0; j <= k; ++j) {
            for (long long i = 0; i <= j; ++i) {
                BigInt coeff = exterior ? comb::binomial(m, BigInt(i))
                                        : comb::binomial(m + i - 1, BigInt(i));
                if (coeff == 0) continue;
                accumulate_scaled(next[j], dp[j - i], c.power(i), coeff);
            }
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(k)];
}

/// Maps flat positions 0..dim-1 to classes without materializing the expansion.
class PositionIndex {
public:
    explicit PositionIndex(const DiagonalForm& f) {
        unsigned long long running = 0;
        for (const auto& [c, m] : f.entries()) {
            running += m.convert_to<unsigned long long>();
            classes_.push_back(c);
            cumulative_.push_back(running);
        }
    }

    const SquareClass& at(unsigned long long pos) const {
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), pos);
        return classes_[static_cast<std::size_t>(it - cumulative_.begin())];
    }

private:
    std::vector<SquareClass> classes_;
    std::vector<unsigned long long> cumulative_;
};

void check_enumeration_size(const BigInt& dim, const BigInt& tuples, unsigned long long cap) {
    if (dim > cap || tuples > cap)
        throw std::domain_error("enumeration too large; use convolution route");
}

}  // namespace

DiagonalForm exterior_power(const DiagonalForm& f, long long k) {
    if (k < 0) return DiagonalForm::zero();
    if (k == 0) return DiagonalForm::unit();
    return convolve_powers(f, k, true);
}

DiagonalForm symmetric_power(const DiagonalForm& f, long long k) {
    if (k < 0) throw std::domain_error("negative power");
    if (k == 0) return DiagonalForm::unit();
    return convolve_powers(f, k, false);
}

DiagonalForm symmetric_power_via_exterior(const DiagonalForm& f, long long k) {
    if (k < 0) throw std::domain_error("negative power");
    BigInt n = f.dim();
    DiagonalForm result;
    for (long long i = 0; 2 * i <= k + 1; ++i) {
        BigInt coeff = i == 0 ? BigInt(1) : comb::binomial(n + i - 1, BigInt(i));
        result = result.perp(exterior_power(f, k - 2 * i).repeated(coeff));
    }
    return result;
}

DiagonalForm naive_exterior_power(const DiagonalForm& f, long long k, unsigned long long cap) {
    if (k < 0) return DiagonalForm::zero();
    if (k == 0) return DiagonalForm::unit();
    BigInt dim = f.dim();
    if (k > dim) return DiagonalForm::zero();
    check_enumeration_size(dim, comb::binomial(dim, BigInt(k)), cap);

    PositionIndex index(f);
    unsigned long long total = dim.convert_to<unsigned long long>();
    std::size_t width = static_cast<std::size_t>(k);
    std::vector<unsigned long long> idx(width);
    for (std::size_t i = 0; i < width; ++i) idx[i] = i;

    DiagonalForm result;
    while (true) {
        SquareClass product;
        for (unsigned long long pos : idx) product = product.times(index.at(pos));
        result.add(product, 1);

        std::size_t i = width;
        while (i > 0 && idx[i - 1] == total - (width - (i - 1))) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < width; ++j) idx[j] = idx[j - 1] + 1;
    }
    return result;
}

DiagonalForm naive_symmetric_power(const DiagonalForm& f, long long k, unsigned long long cap) {
    if (k < 0) throw std::domain_error("negative power");
    if (k == 0) return DiagonalForm::unit();
    BigInt dim = f.dim();
    if (dim == 0) return DiagonalForm::zero();
    check_enumeration_size(dim, comb::binomial(dim + k - 1, BigInt(k)), cap);

    PositionIndex index(f);
    unsigned long long total = dim.convert_to<unsigned long long>();
    std::size_t width = static_cast<std::size_t>(k);
    std::vector<unsigned long long> idx(width, 0);

    DiagonalForm result;
    while (true) {
        SquareClass product;
        for (unsigned long long pos : idx) product = product.times(index.at(pos));
        result.add(product, 1);

        std::size_t i = width;
        while (i > 0 && idx[i - 1] == total - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < width; ++j) idx[j] = idx[i - 1];
    }
    return result;
}

}  // namespace qf
